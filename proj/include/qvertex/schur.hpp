#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qvertex/multiseries.hpp"
#include "qvertex/partition.hpp"
#include "qvertex/qrational.hpp"
#include "qvertex/report.hpp"

namespace qv {

/// A specialization of symmetric functions: the variables are a finite head
/// x_i = c_i v^{e_i} followed (optionally) by the geometric tail
/// x_i = v^{-2i+1} for i >= tail_start, everything multiplied by scale.
///
/// q^rho is the empty head with tail_start = 1; q^{beta+rho} puts
/// v^{2 beta_i - 2i + 1} on the first l(beta) slots and continues with the
/// tail. A formal scale such as -Q is not stored here; callers apply it via
/// homogeneity (see FormalScale).
struct Spec {
  std::vector<std::pair<Rational, int>> head;
  std::optional<int> tail_start;
  QRational scale{1L};

  static Spec rho();
  /// q^{beta + rho}.
  static Spec shifted(const Partition& beta);
  static Spec finite(std::vector<std::pair<Rational, int>> variables);
  static Spec zero();

  bool finite_only() const { return !tail_start.has_value(); }
  bool is_zero() const { return head.empty() && !tail_start; }
  Spec scaled(const QRational& c) const;
};

/// Evaluates h_k, e_k and power sums of one Spec, caching them.
/// Not thread-safe: use one evaluator per thread.
class SpecEvaluator {
 public:
  explicit SpecEvaluator(Spec spec);

  const Spec& spec() const { return spec_; }
  /// Complete symmetric function; 1 for k = 0 and 0 for k < 0.
  const QRational& h(int k);
  /// Elementary symmetric function; 1 for k = 0 and 0 for k < 0.
  const QRational& e(int k);
  /// Power sum p_k, k >= 1.
  QRational power_sum(int k) const;

 private:
  void extend(std::vector<QRational>& cache, int k, bool elementary);

  Spec spec_;
  std::vector<QRational> h_, e_;
  QRational zero_;
};

/// s_{lambda/mu} by the h-determinant (Jacobi-Trudi); zero unless lambda contains mu.
QRational skew_schur(const Partition& lambda, const Partition& mu, SpecEvaluator& spec);
QRational schur(const Partition& lambda, SpecEvaluator& spec);
/// s_{lambda/mu} by the dual e-determinant on conjugate shapes.
QRational skew_schur_dual(const Partition& lambda, const Partition& mu, SpecEvaluator& spec);

/// q^{kappa/4} / prod_cells (q^{h/2} - q^{-h/2}), i.e. s_lambda(q^rho).
QRational schur_hook(const Partition& lambda);

/// Finite-variable tableau sum; exponential cost, only for checking.
QRational skew_schur_tableaux(const Partition& lambda, const Partition& mu,
                              const std::vector<QRational>& variables);

/// Determinant of a small square matrix by expansion over column subsets
/// (division free, O(n 2^n)).
template <class T>
T subset_determinant(const std::vector<std::vector<T>>& m, const T& zero, const T& one);

/// Time-variable names t1..tm used by schur_in_times.
std::vector<std::string> time_variables(int m);
/// Context for polynomials in t1..tm with weighted degree (deg t_k = k) <= cap.
ContextPtr times_context(int m, int cap);

/// s_{lambda/mu} written in the KP times t_k = p_k / k of ctx (variables named
/// t1, t2, ...; absent t_k are treated as zero).
MultiSeries schur_in_times(const Partition& lambda, const Partition& mu, const ContextPtr& ctx);
/// s_{lambda/mu} in explicit series variables (the named variables of ctx).
MultiSeries schur_in_variables(const Partition& lambda, const Partition& mu, const ContextPtr& ctx,
                               const std::vector<std::string>& names);

/// A formal scale factor c * Q for a series variable Q of a context.
struct FormalScale {
  ContextPtr ctx;
  std::string variable;
  QRational coefficient{1L};
  /// (c Q)^d as a series.
  MultiSeries power(int d) const;
};

/// s_{lambda/mu}(x | y) = sum_nu s_{lambda/nu}(x) s_{nu'/mu'}(y).
QRational supersymmetric_skew(const Partition& lambda, const Partition& mu, SpecEvaluator& x,
                              SpecEvaluator& y);
/// Same with y additionally scaled by the formal factor c Q.
MultiSeries supersymmetric_skew(const Partition& lambda, const Partition& mu, SpecEvaluator& x,
                                SpecEvaluator& y, const FormalScale& y_scale);

enum class CauchyIdentity { plain, dual, skew, skew_dual };
std::string to_string(CauchyIdentity id);
CauchyIdentity parse_cauchy_identity(const std::string& s);

struct CauchyOptions {
  CauchyIdentity identity = CauchyIdentity::plain;
  Spec x = Spec::rho();
  Spec y = Spec::rho();
  /// Q is replaced by scale * Q (scale = 1 is the purely formal identity).
  QRational scale{1L};
  int degree = 3;
  Partition mu;
  Partition nu;
};

/// Compares both sides of the chosen Cauchy identity as series in a grading
/// variable Q up to the given degree.
Report verify_cauchy(const CauchyOptions& options);
/// All four identities over finite two-variable specs, q^rho and q^{beta+rho}
/// tails, scales 1 and -1/2, and several skew shapes.
Report verify_cauchy_suite(int degree);

}  // namespace qv

#include "qvertex/detail/determinant.hpp"
