#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qvertex/qrational.hpp"

namespace qv {

using Exponents = std::vector<int>;

/// sum_i weights[i] * e[i] <= cap must hold for every stored exponent vector.
struct TruncationConstraint {
  std::vector<int> weights;
  int cap = 0;
  friend bool operator==(const TruncationConstraint&, const TruncationConstraint&) = default;
};

/// Named variables plus the truncation rule shared by every series built on
/// it. Every variable must carry positive weight in at least one constraint,
/// so the set of admissible monomials is finite.
class SeriesContext {
 public:
  SeriesContext(std::vector<std::string> variables, std::vector<TruncationConstraint> constraints);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<TruncationConstraint>& constraints() const { return constraints_; }
  std::size_t size() const { return vars_.size(); }
  std::size_t index_of(const std::string& name) const;
  bool has(const std::string& name) const;
  bool admits(const Exponents& e) const;

  friend bool operator==(const SeriesContext& a, const SeriesContext& b) {
    return a.vars_ == b.vars_ && a.constraints_ == b.constraints_;
  }

 private:
  std::vector<std::string> vars_;
  std::vector<TruncationConstraint> constraints_;
};

using ContextPtr = std::shared_ptr<const SeriesContext>;

/// Incremental construction of a context from variable groups.
class ContextBuilder {
 public:
  /// One variable with its own degree cap.
  ContextBuilder& variable(const std::string& name, int cap);
  /// Variables sharing a weighted total-degree cap (weights default to 1).
  ContextBuilder& group(const std::vector<std::string>& names, int cap, std::vector<int> weights = {});
  ContextPtr build() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::pair<std::vector<std::string>, std::pair<std::vector<int>, int>>> groups_;
};

/// Truncated multivariate power series with QRational coefficients.
/// Values are immutable once built; all ring operations truncate to the
/// shared context.
class MultiSeries {
 public:
  explicit MultiSeries(ContextPtr ctx);

  static MultiSeries constant(ContextPtr ctx, const QRational& c);
  static MultiSeries variable(ContextPtr ctx, const std::string& name);
  static MultiSeries monomial(ContextPtr ctx, const Exponents& e, const QRational& c);

  const ContextPtr& context() const { return ctx_; }
  const std::map<Exponents, QRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  QRational coefficient(const Exponents& e) const;
  QRational constant_term() const;
  /// Coefficient of a monomial given as {name: exponent}; unnamed variables are 0.
  QRational coefficient(const std::map<std::string, int>& named) const;

  /// Adds c * x^e, silently dropping monomials outside the truncation.
  void add_term(const Exponents& e, const QRational& c);

  MultiSeries operator-() const;
  MultiSeries& operator+=(const MultiSeries& o);
  MultiSeries& operator-=(const MultiSeries& o);
  MultiSeries& operator*=(const MultiSeries& o);
  MultiSeries& operator*=(const QRational& c);
  friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
  friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }
  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
  friend MultiSeries operator*(MultiSeries a, const QRational& c) { return a *= c; }
  friend MultiSeries operator*(const QRational& c, MultiSeries a) { return a *= c; }
  friend bool operator==(const MultiSeries& a, const MultiSeries& b);
  friend bool operator!=(const MultiSeries& a, const MultiSeries& b) { return !(a == b); }

  MultiSeries pow(unsigned n) const;
  /// 1/s for a series with nonzero constant term.
  MultiSeries inverse() const;
  MultiSeries& operator/=(const MultiSeries& o) { return *this *= o.inverse(); }
  friend MultiSeries operator/(MultiSeries a, const MultiSeries& b) { return a /= b; }

  /// exp(s); requires zero constant term.
  MultiSeries exp() const;
  /// log(s); requires constant term 1.
  MultiSeries log() const;

  MultiSeries derivative(std::size_t var) const;
  /// Re-expresses the series in another context over the same variables,
  /// dropping monomials the new truncation does not admit.
  MultiSeries restricted(ContextPtr ctx) const;
  /// Embeds into a context whose variables are a superset (matched by name).
  MultiSeries embedded(ContextPtr ctx) const;
  /// Substitutes x_var -> c * x_var.
  MultiSeries scale_variable(std::size_t var, const QRational& c) const;
  MultiSeries map_coefficients(const std::function<QRational(const Exponents&, const QRational&)>& f) const;

  std::string to_string() const;

 private:
  void require_same(const MultiSeries& o) const;

  ContextPtr ctx_;
  std::map<Exponents, QRational> terms_;
};

bool same_context(const ContextPtr& a, const ContextPtr& b);

}  // namespace qv
