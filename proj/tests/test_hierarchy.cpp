#include <doctest.h>

#include "qvertex/errors.hpp"
#include "qvertex/hierarchy.hpp"
#include "qvertex/schur.hpp"

using namespace qv;

TEST_CASE("C3 generating function") {
  CHECK(c3_generating_function(5) == c3_schur_route(5));
  const MultiSeries z = c3_generating_function(3);
  CHECK(z.coefficient(std::map<std::string, int>{{"t1", 1}}) == inv_bracket(1));
  CHECK(z.coefficient(std::map<std::string, int>{{"t2", 1}}) == inv_bracket(2));
}

TEST_CASE("quantum dilogarithm") {
  CHECK(quantum_dilog(6) == quantum_dilog_product(6));
  // x-coefficient: q^{1/2}/(1 - q)
  CHECK(quantum_dilog(2).coefficient(Exponents{1}) == vpow(1) * inv_one_minus_vpow(2));
}

TEST_CASE("tau coefficients match the closed formula") {
  CHECK(verify_tau_coefficients(StripDiagram::conifold(), 1, 3, 2).failures.empty());
  CHECK(verify_tau_coefficients(StripDiagram::make({1, 1, -1}), 2, 2, 2).failures.empty());
  const TauCoefficients a = tau_coefficients(StripDiagram::conifold(), 1, 2, 1);
  CHECK(a.size() == 4);
  CHECK(a.at(Partition{}).constant_term() == QRational(1L));
}

TEST_CASE("Hirota equation") {
  const StripDiagram con = StripDiagram::conifold();
  CHECK(hirota_check(trivial_tau(4), 4, "trivial").failures.empty());
  CHECK(verify_hirota_vertex(con, 1, 4, 1).failures.empty());
  CHECK(verify_hirota_vertex(con, 2, 4, 1).failures.empty());

  // a generic perturbation of one coefficient breaks the equation
  const int cap = 8;
  TauCoefficients a = tau_coefficients(con, 1, cap, 1);
  auto& slot = a.at(Partition{2, 1});
  slot += MultiSeries::constant(slot.context(), QRational(Rational(1, 5)));
  const MultiSeries tau = tau_series(a, tau_context(con.kahler, 1, cap));
  CHECK_FALSE(hirota_check(tau, 4, "mutated").passed());
}

TEST_CASE("conifold in explicit variables") {
  const TwoVariableOptions o{2, 2, 2};
  const MultiSeries p = conifold_two_variable(o, ConifoldRoute::product);
  CHECK(p == conifold_two_variable(o, ConifoldRoute::exponential));
  CHECK(p == conifold_two_variable(o, ConifoldRoute::schur_sum));
  CHECK(verify_conifold_two_variable(o).failures.empty());
  CHECK(parse_conifold_route("schur_sum") == ConifoldRoute::schur_sum);
  CHECK_THROWS_AS(parse_conifold_route("none"), Error);
}

TEST_CASE("generating function against the closed formula") {
  // the x1_1 coefficient of sum Z_{betas} s_{beta_1}(x1) s_{beta_2}(x2) is Z_{(1), 0}
  const StripDiagram con = StripDiagram::conifold();
  GeneratingOptions o;
  o.variables = 1;
  o.weight = 1;
  o.qdeg = 2;
  const MultiSeries g = general_generating_function(con, o);
  const MultiSeries z = closed_partition_function(con, {Partition{1}, Partition{}}, 2);
  for (int d = 0; d <= 2; ++d)
    CHECK(g.coefficient(std::map<std::string, int>{{"Q", d}, {"x1_1", 1}}) ==
          z.coefficient(std::map<std::string, int>{{"Q", d}}));
}
