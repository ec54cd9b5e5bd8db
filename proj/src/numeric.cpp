#include "qvertex/numeric.hpp"

#include "qvertex/errors.hpp"

namespace qv {

Real to_real(const Rational& c) {
  Real num(c.get_num().get_str());
  Real den(c.get_den().get_str());
  return num / den;
}

Real evaluate(const LaurentPoly& p, const Real& v) {
  if (p.is_zero()) return Real(0);
  Real acc(0);
  const auto& dc = p.dense();
  for (std::size_t i = dc.size(); i-- > 0;) acc = acc * v + to_real(dc[i]);
  return acc * boost::multiprecision::pow(v, p.low());
}

Real substitute_numeric(const QRational& r, const Real& v0) {
  auto [num, den] = r.canonical();
  Real d = evaluate(den, v0);
  Real scale(0);
  for (const auto& c : den.dense()) scale += boost::multiprecision::abs(to_real(c));
  if (boost::multiprecision::abs(d) <= scale * Real("1e-40"))
    throw PoleError("denominator vanishes at the evaluation point");
  return evaluate(num, v0) / d;
}

}  // namespace qv
