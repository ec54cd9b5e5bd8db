#pragma once

#include <map>
#include <string>
#include <vector>

#include "qvertex/multiseries.hpp"
#include "qvertex/partition.hpp"
#include "qvertex/report.hpp"
#include "qvertex/web.hpp"

namespace qv {

/// Z(x) = sum_lambda s_lambda(q^rho) s_lambda(x) = exp(sum_k t_k / [k]) in t1..t_trunc,
/// weighted degree <= trunc.
MultiSeries c3_generating_function(int trunc);
/// Same function as the Schur sum sum_{|lambda| <= trunc} s_lambda(q^rho) s_lambda(t).
MultiSeries c3_schur_route(int trunc);

/// Phi_q(x) = exp(sum_k q^{k/2} x^k / (k (1 - q^k))) in the variable x.
MultiSeries quantum_dilog(int trunc);
/// prod_j (1 - x q^{j-1/2})^{-1}: the coefficient of x^k is h_k(q^{-rho}).
MultiSeries quantum_dilog_product(int trunc);

/// Schur coefficients a_lambda (series in the strip's Q variables) of Z_n(x).
using TauCoefficients = std::map<Partition, MultiSeries>;

/// a_lambda = s_lambda(q^rho) prod_i f_{lambda_i - i + 1} prod_i g_{lambda'_i - i + 1}
/// times the lambda-independent factor of the remaining vertex pairs.
/// The infinite products over i are summed row by row in the logarithm.
TauCoefficients tau_coefficients(const StripDiagram& strip, int n, int weight_cap, int qdeg);

/// Context with the given series variables (total degree <= qdeg) plus t1, t2, t3 of
/// weights 1, 2, 3 (weighted degree <= t_cap).
ContextPtr tau_context(const std::vector<std::string>& q_vars, int qdeg, int t_cap);
/// tau(t) = sum_lambda a_lambda s_lambda(t1, t2, t3) in ctx.
MultiSeries tau_series(const TauCoefficients& coefficients, const ContextPtr& ctx);

/// Half of (D1^4 + 3 D2^2 - 4 D1 D3) tau.tau, keeping t-weights <= t_degree.
/// tau must be known through t-weight t_degree + 4.
MultiSeries hirota_residual(const MultiSeries& tau, int t_degree);
Report hirota_check(const MultiSeries& tau, int t_degree, const std::string& label);

/// exp(c1 t1 + c2 t2 + c3 t3) with symbolic c's.
MultiSeries trivial_tau(int t_degree);
/// Hirota suite: trivial tau, C^3 tau, the given strip's Z_n, and a mutated
/// coefficient a_{(2,1)} + 1 that must fail.
Report verify_hirota(const std::vector<StripDiagram>& strips, int t_degree, int qdeg);
/// Hirota check of Z_n for one strip and vertex.
Report verify_hirota_vertex(const StripDiagram& strip, int n, int t_degree, int qdeg);

/// Tau coefficients agree with the closed formula evaluated at beta_n = lambda.
Report verify_tau_coefficients(const StripDiagram& strip, int n, int weight_cap, int qdeg);

enum class ConifoldRoute { product, exponential, schur_sum };
std::string to_string(ConifoldRoute route);
ConifoldRoute parse_conifold_route(const std::string& s);

struct TwoVariableOptions {
  int variables = 2;  // explicit variables per family
  int xdeg = 3;       // degree cap per family
  int qdeg = 3;
};
/// Variables are Q, x1_1..x1_m, x2_1..x2_m.
ContextPtr two_variable_context(const TwoVariableOptions& o);
MultiSeries conifold_two_variable(const TwoVariableOptions& o, ConifoldRoute route);
Report verify_conifold_two_variable(const TwoVariableOptions& o);

/// Brute-force generating functions built from glued partition functions.
enum class GeneratingKind { multi, alpha };
struct GeneratingOptions {
  GeneratingKind kind = GeneratingKind::multi;
  int variables = 2;  // explicit variables per family
  int weight = 2;     // weight cap per family
  int qdeg = 1;
  std::vector<Partition> betas;  // fixed betas for the alpha kind (empty means all empty)
};
/// multi: sum_{betas} Z^{00}_{betas} prod_n s_{beta_n}(x^(n)) with families x1.., x2.., ...
/// alpha: sum_{alpha0, alphaN} Z^{alpha0 alphaN}_{betas} s_alpha0(y) s_alphaN(z).
MultiSeries general_generating_function(const StripDiagram& strip, const GeneratingOptions& o);

}  // namespace qv
