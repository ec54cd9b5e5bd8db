#include "qvertex/multiseries.hpp"

#include <algorithm>
#include <sstream>

#include "qvertex/errors.hpp"

namespace qv {

SeriesContext::SeriesContext(std::vector<std::string> variables,
                             std::vector<TruncationConstraint> constraints)
    : vars_(std::move(variables)), constraints_(std::move(constraints)) {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j]) throw InvariantError("duplicate series variable " + vars_[i]);
  for (const auto& c : constraints_) {
    if (c.weights.size() != vars_.size()) throw InvariantError("constraint weight count mismatch");
    if (c.cap < 0) throw InvariantError("negative truncation cap");
    for (int w : c.weights)
      if (w < 0) throw InvariantError("negative truncation weight");
  }
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    bool bounded = std::any_of(constraints_.begin(), constraints_.end(),
                               [i](const TruncationConstraint& c) { return c.weights[i] > 0; });
    if (!bounded) throw InvariantError("series variable " + vars_[i] + " has no degree cap");
  }
}

std::size_t SeriesContext::index_of(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw InvariantError("unknown series variable " + name);
  return static_cast<std::size_t>(it - vars_.begin());
}

bool SeriesContext::has(const std::string& name) const {
  return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
}

bool SeriesContext::admits(const Exponents& e) const {
  for (int x : e)
    if (x < 0) return false;
  for (const auto& c : constraints_) {
    long s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += static_cast<long>(c.weights[i]) * e[i];
    if (s > c.cap) return false;
  }
  return true;
}

ContextBuilder& ContextBuilder::variable(const std::string& name, int cap) {
  return group({name}, cap);
}

ContextBuilder& ContextBuilder::group(const std::vector<std::string>& names, int cap,
                                      std::vector<int> weights) {
  if (weights.empty()) weights.assign(names.size(), 1);
  if (weights.size() != names.size()) throw InvariantError("group weight count mismatch");
  for (const auto& n : names) names_.push_back(n);
  groups_.push_back({names, {std::move(weights), cap}});
  return *this;
}

ContextPtr ContextBuilder::build() const {
  std::vector<TruncationConstraint> cons;
  for (const auto& [names, wc] : groups_) {
    TruncationConstraint c;
    c.weights.assign(names_.size(), 0);
    c.cap = wc.second;
    for (std::size_t k = 0; k < names.size(); ++k) {
      auto it = std::find(names_.begin(), names_.end(), names[k]);
      c.weights[static_cast<std::size_t>(it - names_.begin())] = wc.first[k];
    }
    cons.push_back(std::move(c));
  }
  return std::make_shared<const SeriesContext>(names_, std::move(cons));
}

bool same_context(const ContextPtr& a, const ContextPtr& b) { return a == b || *a == *b; }

MultiSeries::MultiSeries(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw InvariantError("series needs a context");
}

MultiSeries MultiSeries::constant(ContextPtr ctx, const QRational& c) {
  MultiSeries s(std::move(ctx));
  s.add_term(Exponents(s.ctx_->size(), 0), c);
  return s;
}

MultiSeries MultiSeries::variable(ContextPtr ctx, const std::string& name) {
  MultiSeries s(std::move(ctx));
  Exponents e(s.ctx_->size(), 0);
  e[s.ctx_->index_of(name)] = 1;
  s.add_term(e, QRational(1L));
  return s;
}

MultiSeries MultiSeries::monomial(ContextPtr ctx, const Exponents& e, const QRational& c) {
  MultiSeries s(std::move(ctx));
  if (e.size() != s.ctx_->size()) throw InvariantError("exponent vector length mismatch");
  s.add_term(e, c);
  return s;
}

QRational MultiSeries::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? QRational() : it->second;
}

QRational MultiSeries::constant_term() const { return coefficient(Exponents(ctx_->size(), 0)); }

QRational MultiSeries::coefficient(const std::map<std::string, int>& named) const {
  Exponents e(ctx_->size(), 0);
  for (const auto& [name, k] : named) e[ctx_->index_of(name)] = k;
  return coefficient(e);
}

void MultiSeries::add_term(const Exponents& e, const QRational& c) {
  if (c.is_zero() || !ctx_->admits(e)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiSeries::require_same(const MultiSeries& o) const {
  if (!same_context(ctx_, o.ctx_)) throw ContextMismatch("series contexts differ");
}

MultiSeries MultiSeries::operator-() const {
  MultiSeries r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& o) {
  require_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& o) {
  require_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
  a.require_same(b);
  MultiSeries r(a.ctx_);
  Exponents e(a.ctx_->size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      if (!a.ctx_->admits(e)) continue;
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiSeries& MultiSeries::operator*=(const MultiSeries& o) { return *this = *this * o; }

MultiSeries& MultiSeries::operator*=(const QRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

bool operator==(const MultiSeries& a, const MultiSeries& b) {
  a.require_same(b);
  return a.terms_ == b.terms_;
}

MultiSeries MultiSeries::pow(unsigned n) const {
  MultiSeries result = constant(ctx_, QRational(1L));
  MultiSeries base = *this;
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n) base *= base;
  }
  return result;
}

MultiSeries MultiSeries::inverse() const {
  QRational c0 = constant_term();
  if (c0.is_zero()) throw DivisionByZero("series without constant term is not invertible");
  QRational inv0 = c0.inverse();
  // s = c0 (1 + u)  =>  1/s = inv0 * sum (-u)^n
  MultiSeries u = *this * inv0 - constant(ctx_, QRational(1L));
  MultiSeries result = constant(ctx_, QRational(1L));
  MultiSeries power = result;
  MultiSeries minus_u = -u;
  while (true) {
    power *= minus_u;
    if (power.is_zero()) break;
    result += power;
  }
  return result * inv0;
}

MultiSeries MultiSeries::exp() const {
  if (!constant_term().is_zero()) throw InvariantError("exp requires zero constant term");
  MultiSeries result = constant(ctx_, QRational(1L));
  MultiSeries term = result;
  for (long n = 1;; ++n) {
    term *= *this;
    term *= QRational(Rational(1, n));
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

MultiSeries MultiSeries::log() const {
  if (!constant_term().is_one()) throw InvariantError("log requires constant term 1");
  MultiSeries u = *this - constant(ctx_, QRational(1L));
  MultiSeries result(ctx_);
  MultiSeries power = constant(ctx_, QRational(1L));
  for (long n = 1;; ++n) {
    power *= u;
    if (power.is_zero()) break;
    result += power * QRational(Rational(n % 2 ? 1 : -1, n));
  }
  return result;
}

MultiSeries MultiSeries::derivative(std::size_t var) const {
  if (var >= ctx_->size()) throw InvariantError("derivative variable out of range");
  MultiSeries r(ctx_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    r.add_term(d, c * QRational(static_cast<long>(e[var])));
  }
  return r;
}

MultiSeries MultiSeries::restricted(ContextPtr ctx) const {
  if (ctx->variables() != ctx_->variables()) throw ContextMismatch("restriction changes variables");
  MultiSeries r(std::move(ctx));
  for (const auto& [e, c] : terms_) r.add_term(e, c);
  return r;
}

MultiSeries MultiSeries::embedded(ContextPtr ctx) const {
  std::vector<std::size_t> where;
  for (const auto& name : ctx_->variables()) where.push_back(ctx->index_of(name));
  MultiSeries r(std::move(ctx));
  for (const auto& [e, c] : terms_) {
    Exponents f(r.ctx_->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[where[i]] = e[i];
    r.add_term(f, c);
  }
  return r;
}

MultiSeries MultiSeries::scale_variable(std::size_t var, const QRational& c) const {
  MultiSeries r(ctx_);
  for (const auto& [e, x] : terms_) r.add_term(e, x * c.pow(e[var]));
  return r;
}

MultiSeries MultiSeries::map_coefficients(
    const std::function<QRational(const Exponents&, const QRational&)>& f) const {
  MultiSeries r(ctx_);
  for (const auto& [e, x] : terms_) r.add_term(e, f(e, x));
  return r;
}

std::string MultiSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "[" << c.to_string() << "]";
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*" << ctx_->variables()[i];
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace qv
