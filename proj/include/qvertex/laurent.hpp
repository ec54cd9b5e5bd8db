#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace qv {

using Rational = mpq_class;

/// Laurent polynomial in the formal variable v = q^{1/2} with exact rational
/// coefficients.
///
/// Storage is dense between the lowest and highest nonzero exponent; both end
/// coefficients are nonzero and the zero polynomial stores nothing.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT: constants convert implicitly
  LaurentPoly(long c);             // NOLINT

  static LaurentPoly monomial(const Rational& c, int exponent);
  static LaurentPoly v_power(int exponent) { return monomial(Rational(1), exponent); }
  static LaurentPoly from_terms(const std::vector<std::pair<int, Rational>>& terms);
  /// Dense constructor: coefficients[i] is the coefficient of v^{low + i}.
  static LaurentPoly from_dense(int low, std::vector<Rational> coefficients);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return is_zero() || (low_ == 0 && coeffs_.size() == 1); }
  bool is_monomial() const { return coeffs_.size() == 1; }
  bool is_one() const;

  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  /// Number of dense slots (high - low + 1), 0 for the zero polynomial.
  std::size_t span() const { return coeffs_.size(); }
  Rational coeff(int exponent) const;
  const Rational& lowest_coeff() const { return coeffs_.front(); }
  const Rational& highest_coeff() const { return coeffs_.back(); }
  const std::vector<Rational>& dense() const { return coeffs_; }
  /// Nonzero terms in increasing exponent order.
  std::vector<std::pair<int, Rational>> terms() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Multiply by v^k.
  LaurentPoly shifted(int k) const;
  /// Substitute v -> v^factor (factor may be negative; factor == -1 is v -> 1/v).
  LaurentPoly dilated(int factor) const;
  LaurentPoly pow(unsigned n) const;

  /// Exact division; requires the divisor to divide this polynomial.
  /// Returns false (leaving out untouched) when the division is not exact.
  bool divides_into(const LaurentPoly& divisor, LaurentPoly& quotient) const;

  std::string to_string() const;

 private:
  void trim();

  int low_ = 0;
  std::vector<Rational> coeffs_;
};

/// [k] = v^k - v^{-k} = q^{k/2} - q^{-k/2}. Returns zero for k = 0.
LaurentPoly bracket(int k);

// Ordinary polynomial helpers (low() >= 0 assumed where noted).

/// Monic gcd over Q of two polynomials; the zero polynomial if both are zero.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);
/// Makes the polynomial primitive with integer coefficients and positive
/// lowest coefficient; returns the rational factor removed (p = factor * result).
Rational make_primitive(LaurentPoly& p);

/// The d-th cyclotomic polynomial in v (d >= 1). Thread-safe cache.
const LaurentPoly& cyclotomic(int d);

}  // namespace qv
