#include "qvertex/laurent.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "qvertex/errors.hpp"

namespace qv {

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

LaurentPoly::LaurentPoly(long c) : LaurentPoly(Rational(c)) {}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent) {
  LaurentPoly p;
  if (c != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(c);
  }
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, Rational>>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p += monomial(c, e);
  return p;
}

LaurentPoly LaurentPoly::from_dense(int low, std::vector<Rational> coefficients) {
  LaurentPoly p;
  p.low_ = low;
  p.coeffs_ = std::move(coefficients);
  p.trim();
  return p;
}

bool LaurentPoly::is_one() const { return low_ == 0 && coeffs_.size() == 1 && coeffs_[0] == 1; }

Rational LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<std::pair<int, Rational>> LaurentPoly::terms() const {
  std::vector<std::pair<int, Rational>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
  return out;
}

void LaurentPoly::trim() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (coeffs_[last - 1] == 0) --last;
  if (first > 0 || last < coeffs_.size()) {
    coeffs_ = std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(first),
                                    coeffs_.begin() + static_cast<std::ptrdiff_t>(last));
    low_ += static_cast<int>(first);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(high(), o.high());
  if (lo < low_ || hi > high()) {
    std::vector<Rational> grown(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      grown[static_cast<std::size_t>(low_ - lo) + i] = std::move(coeffs_[i]);
    coeffs_ = std::move(grown);
    low_ = lo;
  }
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[static_cast<std::size_t>(o.low_ - low_) + i] += o.coeffs_[i];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  LaurentPoly p;
  p.low_ = a.low_ + b.low_;
  p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  Rational t;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      mpq_mul(t.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      p.coeffs_[i + j] += t;
    }
  }
  p.trim();
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

LaurentPoly LaurentPoly::dilated(int factor) const {
  if (factor == 0) {
    Rational sum = 0;
    for (const auto& c : coeffs_) sum += c;
    return LaurentPoly(sum);
  }
  LaurentPoly p;
  for (const auto& [e, c] : terms()) p += monomial(c, e * factor);
  return p;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result(1L), base = *this;
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n) base *= base;
  }
  return result;
}

bool LaurentPoly::divides_into(const LaurentPoly& divisor, LaurentPoly& quotient) const {
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (is_zero()) {
    quotient = LaurentPoly();
    return true;
  }
  if (coeffs_.size() < divisor.coeffs_.size()) return false;
  const std::size_t n = coeffs_.size(), m = divisor.coeffs_.size();
  std::vector<Rational> rem = coeffs_;
  std::vector<Rational> q(n - m + 1);
  const Rational& lead = divisor.coeffs_.back();
  Rational t;
  for (std::size_t k = n - m + 1; k-- > 0;) {
    Rational& top = rem[k + m - 1];
    if (top == 0) continue;
    q[k] = top / lead;
    for (std::size_t j = 0; j < m; ++j) {
      if (divisor.coeffs_[j] == 0) continue;
      mpq_mul(t.get_mpq_t(), q[k].get_mpq_t(), divisor.coeffs_[j].get_mpq_t());
      rem[k + j] -= t;
    }
  }
  for (std::size_t i = 0; i + 1 < m; ++i)
    if (rem[i] != 0) return false;
  quotient = from_dense(low_ - divisor.low_, std::move(q));
  return true;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Rational a = abs(c);
    if (e == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << "v";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LaurentPoly bracket(int k) {
  if (k == 0) return {};
  return LaurentPoly::v_power(k) - LaurentPoly::v_power(-k);
}

namespace {

// Remainder of a modulo b for ordinary polynomials (low() == 0).
LaurentPoly poly_rem(LaurentPoly a, const LaurentPoly& b) {
  const int db = b.high();
  const Rational& lead = b.highest_coeff();
  while (!a.is_zero() && a.high() >= db) {
    Rational c = a.highest_coeff() / lead;
    a -= (b * c).shifted(a.high() - db);
  }
  return a;
}

LaurentPoly monic(LaurentPoly p) {
  if (p.is_zero()) return p;
  Rational inv = 1 / p.highest_coeff();
  p *= inv;
  return p;
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a0, const LaurentPoly& b0) {
  // strip v-power factors; callers use this on polynomials with nonzero constant term
  LaurentPoly a = a0.shifted(a0.is_zero() ? 0 : -a0.low());
  LaurentPoly b = b0.shifted(b0.is_zero() ? 0 : -b0.low());
  a = monic(a);
  b = monic(b);
  while (!b.is_zero()) {
    LaurentPoly r = monic(poly_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Rational make_primitive(LaurentPoly& p) {
  if (p.is_zero()) return Rational(1);
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& c : p.dense()) {
    if (c == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational factor(num_gcd, den_lcm);
  factor.canonicalize();
  if (p.lowest_coeff() < 0) factor = -factor;
  p *= Rational(1) / factor;
  return factor;
}

const LaurentPoly& cyclotomic(int d) {
  static std::mutex mutex;
  static std::map<int, LaurentPoly> cache;
  if (d < 1) throw InvariantError("cyclotomic index must be positive");
  std::lock_guard lock(mutex);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  // Phi_d = (v^d - 1) / prod_{e | d, e < d} Phi_e, built without recursion into the lock
  std::vector<int> divisors;
  for (int e = 1; e < d; ++e)
    if (d % e == 0) divisors.push_back(e);
  for (int e : divisors) {
    if (cache.count(e)) continue;
    // divisors of e are divisors of d and smaller, so ascending order fills them first
    LaurentPoly num = LaurentPoly::v_power(e) - LaurentPoly(1L);
    for (int f = 1; f < e; ++f) {
      if (e % f) continue;
      LaurentPoly q;
      num.divides_into(cache.at(f), q);
      num = q;
    }
    cache.emplace(e, num);
  }
  LaurentPoly num = LaurentPoly::v_power(d) - LaurentPoly(1L);
  for (int e : divisors) {
    LaurentPoly q;
    num.divides_into(cache.at(e), q);
    num = q;
  }
  return cache.emplace(d, num).first->second;
}

}  // namespace qv
