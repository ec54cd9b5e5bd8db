#pragma once

#include <map>
#include <string>
#include <utility>

#include "qvertex/laurent.hpp"

namespace qv {

/// Exact rational function of v = q^{1/2}.
///
/// The denominator is kept factored as prod_d Phi_d(v)^{m_d} * R(v), where
/// Phi_d are cyclotomic polynomials and R is a primitive integer polynomial
/// with R(0) > 0 and no cyclotomic factor. Monomial factors of the
/// denominator are folded into the Laurent numerator, and numerator and
/// denominator are coprime. This makes the representation unique, so
/// equality is a plain comparison of the stored parts.
///
/// Almost every quantity in this library has a purely cyclotomic
/// denominator (products of [k] and 1 - q^k); R stays 1 unless a caller
/// divides by something else.
class QRational {
 public:
  QRational() = default;
  QRational(long c) : num_(c) {}                 // NOLINT
  QRational(const Rational& c) : num_(c) {}      // NOLINT
  QRational(LaurentPoly p) : num_(std::move(p)) {}  // NOLINT

  /// num / den; throws DivisionByZero if den is zero.
  static QRational ratio(const LaurentPoly& num, const LaurentPoly& den);
  /// num / prod_d Phi_d^{m_d}, with the factorization of the denominator known.
  static QRational over_cyclotomics(LaurentPoly num, const std::map<int, int>& factors);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && cyclo_.empty() && resid_.is_one(); }
  /// True when the value is a Laurent polynomial (trivial denominator).
  bool is_polynomial() const { return cyclo_.empty() && resid_.is_one(); }

  /// Canonical numerator and denominator: gcd 1, denominator a primitive
  /// integer polynomial with nonzero constant term and positive lowest
  /// coefficient.
  std::pair<LaurentPoly, LaurentPoly> canonical() const;
  const LaurentPoly& numerator_raw() const { return num_; }
  const std::map<int, int>& cyclotomic_factors() const { return cyclo_; }
  const LaurentPoly& residual_factor() const { return resid_; }

  QRational operator-() const;
  QRational& operator+=(const QRational& o);
  QRational& operator-=(const QRational& o) { return *this += -o; }
  QRational& operator*=(const QRational& o);
  QRational& operator/=(const QRational& o);

  friend QRational operator+(QRational a, const QRational& b) { return a += b; }
  friend QRational operator-(QRational a, const QRational& b) { return a -= b; }
  friend QRational operator*(QRational a, const QRational& b) { return a *= b; }
  friend QRational operator/(QRational a, const QRational& b) { return a /= b; }
  friend bool operator==(const QRational& a, const QRational& b) {
    return a.num_ == b.num_ && a.cyclo_ == b.cyclo_ && a.resid_ == b.resid_;
  }
  friend bool operator!=(const QRational& a, const QRational& b) { return !(a == b); }

  QRational inverse() const;
  QRational pow(int n) const;
  /// Multiply by v^k.
  QRational shifted(int k) const;
  /// Substitute v -> v^factor (factor != 0).
  QRational dilated(int factor) const;

  /// Power series expansion in ascending powers of v, keeping exponents
  /// <= max_exponent. The denominator always has nonzero constant term.
  LaurentPoly expand(int max_exponent) const;

  std::string to_string() const;

 private:
  void reduce();
  LaurentPoly denominator_product() const;

  LaurentPoly num_;
  std::map<int, int> cyclo_;
  LaurentPoly resid_{1L};
};

/// q-integer [k] as a QRational.
inline QRational qbracket(int k) { return QRational(bracket(k)); }
/// v^k.
inline QRational vpow(int k) { return QRational(LaurentPoly::v_power(k)); }
/// 1 / (1 - v^n) for n != 0.
QRational inv_one_minus_vpow(int n);
/// 1 / [k] for k != 0.
QRational inv_bracket(int k);

/// Writes P = v^shift * prod Phi_d^{m_d} * rest, with rest having nonzero
/// constant term and no cyclotomic factor. P must be nonzero.
struct CyclotomicSplit {
  int shift = 0;
  std::map<int, int> factors;
  LaurentPoly rest;
};
CyclotomicSplit split_cyclotomic(const LaurentPoly& p);

}  // namespace qv
