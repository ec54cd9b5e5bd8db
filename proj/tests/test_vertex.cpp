#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qvertex/errors.hpp"
#include "qvertex/numeric.hpp"
#include "qvertex/vertex.hpp"

using namespace qv;

namespace {

// C_{abc} at numeric v from truncated infinite specializations.
long double vertex_numeric(const Partition& a, const Partition& b, const Partition& c, long double v) {
  const Partition none;
  long double sum = 0;
  for (const auto& nu : subpartitions(intersection(a, c.conjugate())))
    sum += oracle::skew_schur_numeric(a, nu, oracle::shifted_point(b.conjugate(), v)) *
           oracle::skew_schur_numeric(c.conjugate(), nu, oracle::shifted_point(b, v));
  return oracle::skew_schur_numeric(b, none, oracle::shifted_point(none, v)) * std::pow(v, c.kappa()) * sum;
}

}  // namespace

TEST_CASE("small vertex values") {
  CHECK(topological_vertex({}, {}, {}) == QRational(1L));
  CHECK(topological_vertex(Partition{1}, {}, {}) == inv_bracket(1));
  CHECK(topological_vertex({}, Partition{1}, {}) == inv_bracket(1));
  // s_(2)(q^rho) = q^{1/2} / ([1][2])
  CHECK(topological_vertex(Partition{2}, {}, {}) == vpow(1) * inv_bracket(1) * inv_bracket(2));
}

TEST_CASE("numeric oracle") {
  const std::vector<Partition> legs{Partition{}, Partition{1}, Partition{2}, Partition{1, 1}, Partition{2, 1}};
  for (const auto& a : legs)
    for (const auto& b : legs)
      for (const auto& c : {Partition{}, Partition{1}, Partition{2}}) {
        const long double expected = vertex_numeric(a, b, c, 2);
        const auto got = static_cast<double>(substitute_numeric(topological_vertex(a, b, c), Real(2)));
        CHECK(got == doctest::Approx(static_cast<double>(expected)).epsilon(1e-12));
      }
}

TEST_CASE("cyclic symmetry and two-leg forms") {
  const Report cyc = verify_cyclic(2, 2);
  CHECK(cyc.checks > 0);
  CHECK(cyc.failures.empty());
  const Report two = verify_two_leg_identity(3);
  CHECK(two.failures.empty());
  CHECK(parse_two_leg("b0a") == TwoLeg::b0a);
  CHECK_THROWS_AS(parse_two_leg("abc"), Error);
}

TEST_CASE("reflection") {
  // C_{abc}(1/q) = (-1)^{|a|+|b|+|c|} C_{a'b'c'}(q)
  const std::vector<Partition> legs{Partition{}, Partition{1}, Partition{2}, Partition{1, 1}};
  for (const auto& a : legs)
    for (const auto& b : legs)
      for (const auto& c : legs) {
        const int sign = (a.weight() + b.weight() + c.weight()) % 2 ? -1 : 1;
        CHECK(topological_vertex(a, b, c).dilated(-1) ==
              QRational(static_cast<long>(sign)) *
                  topological_vertex(a.conjugate(), b.conjugate(), c.conjugate()));
      }
}
