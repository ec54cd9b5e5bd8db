#include <doctest.h>

#include "oracles.hpp"
#include "qvertex/numeric.hpp"
#include "qvertex/schur.hpp"

using namespace qv;

TEST_CASE("hook formula equals Jacobi-Trudi at q^rho") {
  for (const auto& l : enumerate_partitions(6)) {
    SpecEvaluator rho(Spec::rho());
    CHECK(schur(l, rho) == schur_hook(l));
    if (l.weight() <= 5) CHECK(skew_schur_dual(l, Partition{}, rho) == schur_hook(l));
  }
}

TEST_CASE("numeric oracle at v = 2") {
  const long double v = 2;
  for (const auto& l : enumerate_partitions(4))
    for (const auto& beta : {Partition{}, Partition{1}, Partition{2, 1}}) {
      SpecEvaluator spec(Spec::shifted(beta));
      for (const auto& mu : subpartitions(l)) {
        const long double expected = oracle::skew_schur_numeric(l, mu, oracle::shifted_point(beta, v));
        const long double got =
            static_cast<long double>(substitute_numeric(skew_schur(l, mu, spec), Real(2)));
        CHECK(got == doctest::Approx(static_cast<double>(expected)).epsilon(1e-12));
      }
    }
}

TEST_CASE("finite variables") {
  // x = (1, 2, v): three variables, so l(lambda) > 3 vanishes
  const Spec spec = Spec::finite({{Rational(1), 0}, {Rational(2), 0}, {Rational(1), 1}});
  SpecEvaluator ev(spec);
  const std::vector<QRational> vars{QRational(1L), QRational(2L), vpow(1)};
  for (const auto& l : enumerate_partitions(5)) {
    for (const auto& mu : subpartitions(l))
      CHECK(skew_schur(l, mu, ev) == skew_schur_tableaux(l, mu, vars));
    if (l.length() > 3) CHECK(schur(l, ev).is_zero());
    // homogeneity under x -> 3x
    SpecEvaluator scaled(spec.scaled(QRational(3L)));
    CHECK(schur(l, scaled) == schur(l, ev) * QRational(3L).pow(l.weight()));
  }
}

TEST_CASE("Schur functions in the KP times") {
  // p_k = k t_k: check against the power-sum values of a finite specialization
  const ContextPtr ctx = times_context(4, 4);
  const std::vector<QRational> xs{QRational(2L), vpow(1), QRational(Rational(-1, 3))};
  SpecEvaluator ev(Spec::finite({{Rational(2), 0}, {Rational(1), 1}, {Rational(-1, 3), 0}}));
  for (const auto& l : enumerate_partitions(4)) {
    const MultiSeries s = schur_in_times(l, Partition{}, ctx);
    QRational value;
    for (const auto& [e, c] : s.terms()) {
      QRational term = c;
      for (std::size_t k = 0; k < e.size(); ++k)
        term *= (ev.power_sum(static_cast<int>(k) + 1) / QRational(static_cast<long>(k) + 1)).pow(e[k]);
      value += term;
    }
    CHECK(value == skew_schur_tableaux(l, Partition{}, xs));
  }
}

TEST_CASE("Cauchy identities") {
  const Report r = verify_cauchy_suite(3);
  CHECK(r.checks > 100);
  CHECK(r.failures.empty());
  CHECK(parse_cauchy_identity(to_string(CauchyIdentity::skew_dual)) == CauchyIdentity::skew_dual);
}

TEST_CASE("subset determinant") {
  const std::vector<std::vector<long>> m{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  CHECK(subset_determinant(m, 0L, 1L) == 2 * (12 - 1) - 1 * (4 - 0));
}
