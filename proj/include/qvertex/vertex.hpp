#pragma once

#include <string>

#include "qvertex/partition.hpp"
#include "qvertex/qrational.hpp"
#include "qvertex/report.hpp"
#include "qvertex/schur.hpp"

namespace qv {

/// Evaluator for q^{beta + rho}, shared per thread.
SpecEvaluator& shifted_evaluator(const Partition& beta);

/// C_{alpha beta gamma} = s_beta(q^rho) q^{kappa(gamma)/2}
///   sum_nu s_{alpha/nu}(q^{beta' + rho}) s_{gamma'/nu}(q^{beta + rho}).
/// Results are memoized per thread.
QRational topological_vertex(const Partition& alpha, const Partition& beta, const Partition& gamma);

/// Closed forms of the vertex with one empty leg.
enum class TwoLeg { ab0, zab, b0a };
std::string to_string(TwoLeg which);
TwoLeg parse_two_leg(const std::string& s);

/// ab0: C_{alpha beta 0} = s_beta(q^rho) s_alpha(q^{beta'+rho})
/// zab: C_{0 alpha beta} = s_alpha(q^rho) q^{kappa(beta)/2} s_{beta'}(q^{alpha+rho})
/// b0a: C_{beta 0 alpha} = q^{kappa(alpha)/2} sum_nu s_{beta/nu}(q^rho) s_{alpha'/nu}(q^rho)
QRational two_leg_form(const Partition& alpha, const Partition& beta, TwoLeg which);

/// Exhaustive cyclic-symmetry check over all triples with leg weights <= weight_max,
/// plus the one-empty-leg closed forms for the same range.
Report verify_cyclic(int weight_max, int jobs = 1);

/// s_a(q^rho) s_b(q^{a+rho}) = q^{(kappa a + kappa b)/2} sum_nu s_{a'/nu}(q^rho) s_{b'/nu}(q^rho)
///   = s_b(q^rho) s_a(q^{b+rho}) for all |a|, |b| <= weight_max.
Report verify_two_leg_identity(int weight_max);

}  // namespace qv
