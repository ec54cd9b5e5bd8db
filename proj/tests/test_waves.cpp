#include <doctest.h>

#include <cmath>

#include "qvertex/errors.hpp"
#include "qvertex/numeric.hpp"
#include "qvertex/waves.hpp"

using namespace qv;

namespace {

// prod_{n>=1} (1 - Q q^{-n+1/2} x) / (1 - q^{-n+1/2} x) at q = v^2, v > 1.
long double conifold_product(long double v, long double Q, long double x) {
  long double p = 1;
  for (int n = 1; n < 200; ++n) {
    const long double u = std::pow(v, -2 * n + 1);
    p *= (1 - Q * u * x) / (1 - u * x);
  }
  return p;
}

long double sum_wave(const WaveSeries& w, long double v, long double Q, long double x) {
  long double total = 0;
  for (std::size_t k = 0; k < w.coeffs.size(); ++k)
    for (const auto& [e, c] : w.coeffs[k].terms()) {
      const auto value = static_cast<long double>(substitute_numeric(c, Real(static_cast<double>(v))));
      total += value * std::pow(Q, e.empty() ? 0 : e[0]) * std::pow(x, static_cast<int>(k));
    }
  return total;
}

}  // namespace

TEST_CASE("B and C polynomials") {
  const MirrorCurve con = bc_polynomials(StripDiagram::conifold(), 1);
  CHECK(con.equation() == "x = (1 - y^-1)/(1 - Q*y^-1)");
  CHECK(con.B == CurvePoly::one({"Q"}));
  CHECK(bc_polynomials(StripDiagram::make({1}), 1).equation() == "x = 1 - y^-1");
  CHECK(bc_polynomials(StripDiagram::make({1, 1, -1}), 2).equation() ==
        "x = (1 - y^-1)*(1 - Q1*y)/(1 - Q2*y^-1)");
  CHECK(con.inverted().C.to_string() == "1 - Q*y");
  const Json j = con.to_json();
  CHECK(j["vars"] == Json::array({"Q"}));
  CHECK(j["curve"] == "x = (1 - y^-1)/(1 - Q*y^-1)");
}

TEST_CASE("conifold wave function") {
  const StripDiagram con = StripDiagram::conifold();
  const WaveSeries phi = wave_coefficients(con, 1, WaveKind::phi, 3, 3);
  const ContextPtr ctx = phi.coeffs[1].context();
  const MultiSeries Q = MultiSeries::variable(ctx, "Q");
  const MultiSeries one = MultiSeries::constant(ctx, QRational(1L));
  // a_1 = (1 - Q)/[1]
  CHECK(phi.coeffs[1] == (one - Q) * inv_bracket(1));
  // a_2 = (1 - Q)(1 - Q q^-1) q^{1/2} / ([1][2])
  CHECK(phi.coeffs[2] == (one - Q) * (one - Q * vpow(-2)) * (vpow(1) * inv_bracket(1) * inv_bracket(2)));
  CHECK(wave_coefficients(con, 2, WaveKind::phi, 3, 3).coeffs == phi.coeffs);
  CHECK(verify_conifold_qdifference(phi).passed());
}

TEST_CASE("definition equals closed form on a three-vertex strip") {
  const StripDiagram s = StripDiagram::make({1, -1, 1});
  for (int n = 1; n <= 3; ++n)
    for (WaveKind kind : {WaveKind::phi, WaveKind::psi}) {
      const WaveSeries a = wave_by_definition(s, n, kind, 3, 2);
      const WaveSeries b = wave_by_closed_form(s, n, kind, 3, 2);
      CHECK(a.coeffs == b.coeffs);
      CHECK(verify_recurrence(b, s).passed());
      CHECK(verify_qdifference(b, s).passed());
    }
}

TEST_CASE("numeric product oracle") {
  const StripDiagram con = StripDiagram::conifold();
  const int K = 12;
  const WaveSeries phi = wave_coefficients(con, 1, WaveKind::phi, K, K);
  const WaveSeries psi = wave_coefficients(con, 1, WaveKind::psi, K, K);
  for (long double Q : {0.0L, 0.25L, 0.6L})
    for (long double x : {0.1L, -0.15L}) {
      const double expected = static_cast<double>(conifold_product(2, Q, x));
      CHECK(static_cast<double>(sum_wave(phi, 2, Q, x)) == doctest::Approx(expected).epsilon(1e-9));
      // Psi is Phi with v -> 1/v
      CHECK(static_cast<double>(sum_wave(psi, 0.5L, Q, x)) == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("product forms and a negative control") {
  CHECK(product_form_check(ProductForm::conifold, 6).passed());
  CHECK(product_form_check(ProductForm::c3, 6).passed());
  WaveSeries w = wave_coefficients(StripDiagram::conifold(), 1, WaveKind::phi, 4, 4);
  const ContextPtr ctx = w.coeffs[2].context();
  w.coeffs[2] += MultiSeries::variable(ctx, "Q") * QRational(Rational(1, 7));
  CHECK_FALSE(product_form_check(ProductForm::conifold, w).passed());
}

TEST_CASE("classical limit") {
  ClassicalOptions o;
  o.samples = 3;
  for (WaveKind kind : {WaveKind::phi, WaveKind::psi}) {
    CHECK(verify_classical_limit(StripDiagram::conifold(), 1, kind, o).passed());
    CHECK(verify_classical_limit(StripDiagram::make({1, 1, -1}), 2, kind, o).passed());
  }
}

TEST_CASE("kind names") {
  CHECK(parse_wave_kind("psi") == WaveKind::psi);
  CHECK(to_string(WaveKind::phi) == "phi");
  CHECK(shift_sign(WaveKind::psi) == -1);
  CHECK_THROWS_AS(parse_wave_kind("chi"), Error);
}
