#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "qvertex/qrational.hpp"

namespace qv {

/// Working precision for numeric cross-checks: 50 decimal digits.
using Real = boost::multiprecision::cpp_bin_float_50;

Real to_real(const Rational& c);
Real evaluate(const LaurentPoly& p, const Real& v);
/// Value of r at v = v0. Throws PoleError when the denominator vanishes there
/// (|den(v0)| below 1e-40 relative to the size of its coefficients).
Real substitute_numeric(const QRational& r, const Real& v0);

}  // namespace qv
