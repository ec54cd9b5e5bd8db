#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qvertex/json_io.hpp"
#include "qvertex/multiseries.hpp"
#include "qvertex/numeric.hpp"
#include "qvertex/report.hpp"
#include "qvertex/web.hpp"

namespace qv {

enum class WaveKind { phi, psi };
std::string to_string(WaveKind kind);
WaveKind parse_wave_kind(const std::string& s);
/// +1 for Phi, -1 for Psi: the sign of the shift in the q-difference equation.
int shift_sign(WaveKind kind);

/// Coefficients of Phi_n(x) = sum a_k x^k or Psi_n(x) = sum (-1)^k b_k x^k.
/// For Psi the stored coefficient already carries the sign (-1)^k.
struct WaveSeries {
  WaveKind kind = WaveKind::phi;
  int vertex = 1;
  std::vector<MultiSeries> coeffs;

  Json to_json() const;
};

/// Laurent polynomial in y whose coefficients are polynomials in the Kahler variables.
struct CurvePoly {
  std::vector<std::string> vars;
  std::map<int, std::map<Exponents, Rational>> terms;

  static CurvePoly one(std::vector<std::string> vars);
  CurvePoly& operator*=(const CurvePoly& o);
  /// 1 - Q^e y^yexp.
  static CurvePoly factor(std::vector<std::string> vars, const Exponents& e, int yexp);
  /// P(y^-1).
  CurvePoly inverted() const;
  /// P(q^i) = P(v^{2i}) as a series in ctx (which must contain vars).
  MultiSeries at_q_power(const ContextPtr& ctx, int i) const;
  Real evaluate(const std::vector<Real>& q_values, const Real& y) const;
  Json to_json() const;
  std::string to_string() const;

  friend bool operator==(const CurvePoly& a, const CurvePoly& b) { return a.vars == b.vars && a.terms == b.terms; }
};

/// The pair B_n, C_n; the curve is x = (1 - y^-1) B(y) / C(y).
struct MirrorCurve {
  CurvePoly B;
  CurvePoly C;

  /// B(y^-1), C(y^-1): the Psi-side curve is x = (1 - y) B(y^-1) / C(y^-1).
  MirrorCurve inverted() const { return {B.inverted(), C.inverted()}; }
  Real x_at(const std::vector<Real>& q_values, const Real& y) const;
  std::string equation() const;
  Json to_json() const;
};

/// B_n collects the vertices of the same type as n, C_n those of opposite type:
/// (1 - Q_{m,n-1} y^{sigma_n}) for m < n and (1 - Q_{n,m-1} y^{-sigma_n}) for m > n.
MirrorCurve bc_polynomials(const StripDiagram& strip, int n);

/// Coefficients from the ratio of closed partition functions with
/// beta_n = (k) (Phi) or (1^k) (Psi), other betas empty.
WaveSeries wave_by_definition(const StripDiagram& strip, int n, WaveKind kind, int K, int qdeg);
/// Coefficients from q^{sk(k-1)/4} / ([s1]...[sk]) prod_{i<k} C(q^{si}) / B(q^{si}), s = +-1.
WaveSeries wave_by_closed_form(const StripDiagram& strip, int n, WaveKind kind, int K, int qdeg);
/// Both routes; throws InvariantError when they disagree. Returns the closed-form values.
WaveSeries wave_coefficients(const StripDiagram& strip, int n, WaveKind kind, int K, int qdeg);

/// c_k [s k] B(q^{s(k-1)}) = c_{k-1} q^{s(k-1)/2} C(q^{s(k-1)}) checked as a recurrence.
Report verify_recurrence(const WaveSeries& w, const StripDiagram& strip);
/// B(q^{s(x d_x - 1)}) [s x d_x] F = x C(q^{s x d_x}) q^{s x d_x / 2} F, applied
/// as operators on the truncated series and compared per power of x.
Report verify_qdifference(const WaveSeries& w, const StripDiagram& strip);
/// Phi(q^{1/2}x) - Phi(q^{-1/2}x) = x (1 - Q q^{-x d_x}) Phi(q^{1/2}x) for the conifold.
Report verify_conifold_qdifference(const WaveSeries& w);

enum class ProductForm { conifold, c3 };
/// prod_n (1 - Q q^{-n+1/2} x) / (1 - q^{-n+1/2} x) = exp(sum_d x^d (1 - Q^d) / (d [d])),
/// or the Q = 0 version, against the wave coefficients up to x^K.
Report product_form_check(ProductForm form, int K);
/// Same comparison for explicit coefficients (used for negative controls).
Report product_form_check(ProductForm form, const WaveSeries& w);

struct ClassicalOptions {
  int samples = 5;
  std::uint64_t seed = 1;
  double h = 1e-4;
  double tolerance = 1e-8;
};
/// q -> 1 limit of the cross-multiplied q-difference relation, sampled at v = 1+h,
/// 1+h/2, 1+h/4 and Richardson-extrapolated, against the emitted curve at random (Q, y).
Report verify_classical_limit(const StripDiagram& strip, int n, WaveKind kind, const ClassicalOptions& o);

struct WaveSuiteOptions {
  int max_vertices = 3;
  int definition_k = 4;
  int definition_qdeg = 2;
  int conifold_k = 8;
  ClassicalOptions classical;
};
/// Definition vs closed form on all small strips, recurrences, q-difference
/// equations, conifold and C3 product forms and the q -> q^-1 duality.
Report verify_waves(const WaveSuiteOptions& o);
/// Conifold and C3 curves, Psi-side inversion, classical limits on several strips.
Report verify_mirror(const ClassicalOptions& o);

}  // namespace qv
