#include "qvertex/qrational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

#include "qvertex/errors.hpp"

namespace qv {

namespace {

// Modular prefilter for cyclotomic divisibility tests. If the exact division
// P / Phi_d over Q is possible then it is possible modulo any prime not
// dividing P's denominators (Phi_d is monic with integer coefficients).
constexpr std::uint64_t kPrime = 2305843009213693951ull;  // 2^61 - 1

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul_mod(r, a);
    a = mul_mod(a, a);
    e >>= 1;
  }
  return r;
}

std::optional<std::uint64_t> reduce_mod(const Rational& c) {
  std::uint64_t den = mpz_fdiv_ui(c.get_den_mpz_t(), kPrime);
  if (den == 0) return std::nullopt;
  std::uint64_t num = mpz_fdiv_ui(c.get_num_mpz_t(), kPrime);  // non-negative residue
  if (den == 1) return num;
  return mul_mod(num, pow_mod(den, kPrime - 2));
}

std::optional<std::vector<std::uint64_t>> poly_mod(const LaurentPoly& p) {
  std::vector<std::uint64_t> out;
  out.reserve(p.span());
  for (const auto& c : p.dense()) {
    auto r = reduce_mod(c);
    if (!r) return std::nullopt;
    out.push_back(*r);
  }
  return out;
}

// Does the monic integer polynomial d (dense from degree 0) divide p mod kPrime?
bool mod_divides(std::vector<std::uint64_t> p, const LaurentPoly& d) {
  const auto& dc = d.dense();
  const std::size_t m = dc.size();
  if (p.size() < m) return false;
  std::vector<std::uint64_t> dm(m);
  for (std::size_t j = 0; j < m; ++j) dm[j] = *reduce_mod(dc[j]);
  for (std::size_t k = p.size() - m + 1; k-- > 0;) {
    std::uint64_t q = p[k + m - 1];
    if (q == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (dm[j] == 0) continue;
      std::uint64_t t = mul_mod(q, dm[j]);
      p[k + j] = p[k + j] >= t ? p[k + j] - t : p[k + j] + kPrime - t;
    }
  }
  for (std::size_t i = 0; i + 1 < m; ++i)
    if (p[i] != 0) return false;
  return true;
}

// p mod (v^d - 1) (v^2 - 1 for d = 1); divisibility by Phi_d is unchanged.
std::vector<std::uint64_t> fold_mod(const std::vector<std::uint64_t>& p, int d) {
  const std::size_t n = static_cast<std::size_t>(d == 1 ? 2 : d);  // keep room for Phi_1
  if (p.size() <= n) return p;
  std::vector<std::uint64_t> out(n, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::uint64_t& slot = out[i % n];
    slot += p[i];
    if (slot >= kPrime) slot -= kPrime;
  }
  return out;
}

// Divides p by Phi_d as often as possible (at most max_times, -1 = unbounded).
int strip_factor(LaurentPoly& p, int d, int max_times) {
  const LaurentPoly& phi = cyclotomic(d);
  int removed = 0;
  while (max_times < 0 || removed < max_times) {
    if (p.span() < phi.span()) break;
    if (auto pm = poly_mod(p); pm && !mod_divides(fold_mod(*pm, d), phi)) break;
    LaurentPoly q;
    if (!p.divides_into(phi, q)) break;
    p = std::move(q);
    ++removed;
  }
  return removed;
}

std::vector<int> euler_phi_table(int bound) {
  std::vector<int> phi(static_cast<std::size_t>(bound) + 1);
  for (int i = 0; i <= bound; ++i) phi[static_cast<std::size_t>(i)] = i;
  for (int i = 2; i <= bound; ++i) {
    if (phi[static_cast<std::size_t>(i)] != i) continue;
    for (int j = i; j <= bound; j += i)
      phi[static_cast<std::size_t>(j)] -= phi[static_cast<std::size_t>(j)] / i;
  }
  return phi;
}

}  // namespace

CyclotomicSplit split_cyclotomic(const LaurentPoly& p) {
  if (p.is_zero()) throw DivisionByZero("cyclotomic split of zero");
  CyclotomicSplit out;
  out.shift = p.low();
  out.rest = p.shifted(-p.low());
  int degree = out.rest.high();
  if (degree == 0) return out;
  // phi(d) >= sqrt(d / 2), so only d <= 2 deg^2 can contribute
  const int bound = 2 * degree * degree + 2;
  const auto phi = euler_phi_table(bound);
  for (int d = 1; d <= bound && out.rest.high() > 0; ++d) {
    if (phi[static_cast<std::size_t>(d)] > out.rest.high()) continue;
    int k = strip_factor(out.rest, d, -1);
    if (k) out.factors[d] = k;
  }
  return out;
}

QRational QRational::ratio(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  QRational r;
  if (num.is_zero()) return r;
  CyclotomicSplit s = split_cyclotomic(den);
  Rational c = make_primitive(s.rest);
  r.num_ = num.shifted(-s.shift) * (Rational(1) / c);
  r.cyclo_ = std::move(s.factors);
  r.resid_ = std::move(s.rest);
  r.reduce();
  return r;
}

QRational QRational::over_cyclotomics(LaurentPoly num, const std::map<int, int>& factors) {
  QRational r;
  r.num_ = std::move(num);
  for (const auto& [d, m] : factors)
    if (m > 0) r.cyclo_[d] = m;
  r.reduce();
  return r;
}

namespace {

std::map<int, int> divisor_factors(int n) {
  std::map<int, int> f;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) f[d] = 1;
  return f;
}

}  // namespace

QRational inv_one_minus_vpow(int n) {
  if (n == 0) throw DivisionByZero("1/(1 - v^0)");
  // v^n - 1 = prod_{d | n} Phi_d
  if (n > 0) return QRational::over_cyclotomics(LaurentPoly(-1L), divisor_factors(n));
  return QRational::over_cyclotomics(LaurentPoly::v_power(-n), divisor_factors(-n));
}

QRational inv_bracket(int k) {
  if (k == 0) throw DivisionByZero("1/[0]");
  if (k < 0) return -inv_bracket(-k);
  // [k] = v^{-k} (v^{2k} - 1)
  return QRational::over_cyclotomics(LaurentPoly::v_power(k), divisor_factors(2 * k));
}

void QRational::reduce() {
  if (num_.is_zero()) {
    cyclo_.clear();
    resid_ = LaurentPoly(1L);
    return;
  }
  for (auto it = cyclo_.begin(); it != cyclo_.end();) {
    it->second -= strip_factor(num_, it->first, it->second);
    if (it->second == 0) it = cyclo_.erase(it);
    else ++it;
  }
  if (!resid_.is_one()) {
    LaurentPoly g = poly_gcd(num_, resid_);
    if (g.high() > 0) {
      LaurentPoly q;
      num_.divides_into(g, q);
      num_ = std::move(q);
      resid_.divides_into(g, q);
      resid_ = std::move(q);
    }
    Rational c = make_primitive(resid_);
    if (c != 1) num_ *= Rational(1) / c;
  }
}

LaurentPoly QRational::denominator_product() const {
  LaurentPoly d = resid_;
  for (const auto& [k, m] : cyclo_) d *= cyclotomic(k).pow(static_cast<unsigned>(m));
  return d;
}

std::pair<LaurentPoly, LaurentPoly> QRational::canonical() const {
  LaurentPoly d = denominator_product();
  LaurentPoly n = num_;
  if (d.lowest_coeff() < 0) {
    d = -d;
    n = -n;
  }
  return {n, d};
}

QRational QRational::operator-() const {
  QRational r = *this;
  r.num_ = -r.num_;
  return r;
}

QRational& QRational::operator+=(const QRational& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (cyclo_ == o.cyclo_ && resid_ == o.resid_) {
    num_ += o.num_;
    reduce();
    return *this;
  }
  // common denominator: lcm of the cyclotomic parts and of the residual parts
  LaurentPoly mine(1L), theirs(1L);
  std::map<int, int> lcm = cyclo_;
  for (const auto& [d, m] : o.cyclo_) {
    int& slot = lcm[d];
    if (m > slot) slot = m;
  }
  for (const auto& [d, m] : lcm) {
    auto a = cyclo_.find(d);
    auto b = o.cyclo_.find(d);
    int ma = a == cyclo_.end() ? 0 : a->second;
    int mb = b == o.cyclo_.end() ? 0 : b->second;
    if (m > ma) mine *= cyclotomic(d).pow(static_cast<unsigned>(m - ma));
    if (m > mb) theirs *= cyclotomic(d).pow(static_cast<unsigned>(m - mb));
  }
  LaurentPoly resid = resid_;
  if (!(resid_ == o.resid_)) {
    if (resid_.is_one()) {
      mine *= o.resid_;
      resid = o.resid_;
    } else if (o.resid_.is_one()) {
      theirs *= resid_;
    } else {
      LaurentPoly g = poly_gcd(resid_, o.resid_);
      LaurentPoly a_over_g, b_over_g;
      resid_.divides_into(g, a_over_g);
      o.resid_.divides_into(g, b_over_g);
      mine *= b_over_g;
      theirs *= a_over_g;
      resid = resid_ * b_over_g;
    }
  }
  num_ = num_ * mine + o.num_ * theirs;
  cyclo_ = std::move(lcm);
  resid_ = std::move(resid);
  reduce();
  return *this;
}

QRational& QRational::operator*=(const QRational& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = QRational();
  num_ *= o.num_;
  if (o.is_polynomial() && (is_polynomial() || o.num_.is_monomial())) return *this;
  if (is_polynomial() && num_.is_monomial() && o.num_.is_monomial()) {
    cyclo_ = o.cyclo_;
    resid_ = o.resid_;
    return *this;
  }
  for (const auto& [d, m] : o.cyclo_) cyclo_[d] += m;
  if (!o.resid_.is_one()) resid_ *= o.resid_;
  reduce();
  return *this;
}

QRational& QRational::operator/=(const QRational& o) { return *this *= o.inverse(); }

QRational QRational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  if (num_.is_monomial()) {
    QRational r;
    r.num_ = denominator_product().shifted(-num_.low()) * (Rational(1) / num_.lowest_coeff());
    return r;
  }
  return ratio(denominator_product(), num_);
}

QRational QRational::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  QRational result(1L), base = *this;
  while (n) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

QRational QRational::shifted(int k) const {
  QRational r = *this;
  r.num_ = r.num_.shifted(k);
  return r;
}

QRational QRational::dilated(int factor) const {
  if (factor == 0) throw InvariantError("dilation factor must be nonzero");
  if (factor == 1) return *this;
  return ratio(num_.dilated(factor), denominator_product().dilated(factor));
}

LaurentPoly QRational::expand(int max_exponent) const {
  if (is_zero() || num_.low() > max_exponent) return {};
  LaurentPoly den = denominator_product();
  // 1/den as power series up to the needed order
  const int order = max_exponent - num_.low();
  std::vector<Rational> inv(static_cast<std::size_t>(order) + 1);
  const auto& dc = den.dense();
  const Rational d0inv = Rational(1) / dc[0];
  for (int k = 0; k <= order; ++k) {
    Rational acc = k == 0 ? Rational(1) : Rational(0);
    for (int j = 1; j <= k && j < static_cast<int>(dc.size()); ++j)
      acc -= dc[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(k - j)];
    inv[static_cast<std::size_t>(k)] = acc * d0inv;
  }
  LaurentPoly series = num_ * LaurentPoly::from_dense(0, std::move(inv));
  std::vector<std::pair<int, Rational>> kept;
  for (auto& [e, c] : series.terms())
    if (e <= max_exponent) kept.emplace_back(e, c);
  return LaurentPoly::from_terms(kept);
}

std::string QRational::to_string() const {
  auto [n, d] = canonical();
  if (d.is_one()) return n.to_string();
  return "(" + n.to_string() + ")/(" + d.to_string() + ")";
}

}  // namespace qv
