#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qvertex/json_io.hpp"
#include "qvertex/multiseries.hpp"
#include "qvertex/partition.hpp"
#include "qvertex/report.hpp"

namespace qv {

/// Linear chain of N vertices with vertical legs of type sigma_n = +-1
/// (+1: leg down, -1: leg up). Internal edge n joins vertices n and n+1 and
/// carries the Kahler variable kahler[n-1] and the framing integer framing[n-1].
struct StripDiagram {
  std::vector<int> sigma;
  std::vector<std::string> kahler;
  std::vector<int> framing;

  /// Fills in default Kahler names Q1..Q_{N-1} (Q for N = 2) and the default framing.
  static StripDiagram make(std::vector<int> sigma, std::vector<std::string> kahler = {},
                           std::optional<std::vector<int>> framing = std::nullopt);
  static StripDiagram conifold() { return make({1, -1}); }
  static StripDiagram from_json(const Json& j);
  Json to_json() const;

  int size() const { return static_cast<int>(sigma.size()); }
  /// beta^{(n)}: beta for sigma_n = +1, its conjugate for sigma_n = -1 (1-based n).
  Partition oriented(int n, const Partition& beta) const;
  /// Exponent vector of Q_{m,n} = Q_m ... Q_n (1-based, m <= n) in ctx.
  Exponents kahler_monomial(const ContextPtr& ctx, int m, int n) const;
};

/// Framing integers used when a strip does not specify them: an edge between
/// vertices of equal type sigma gets -sigma, an edge between opposite types 0.
std::vector<int> default_framing(const std::vector<int>& sigma);

/// Q-variables of the strip with total degree <= qdeg.
ContextPtr strip_context(const StripDiagram& strip, int qdeg);

/// E_lambda(k) = sum_i q^{k(lambda_i - i + 1/2)}, regularized as
/// 1/[k] + sum_{i <= l} (v^{2k(lambda_i - i) + k} - v^{-2ki + k}).
QRational regularized_power_sum(const Partition& lambda, int k);

/// prod s_{beta_n}(q^rho) prod_{m<n} prod_{i,j} (1 - Q_{m,n-1} q^{beta^(m)'_i + beta^(n)_j - i - j + 1})^{-sigma_m sigma_n}
/// expanded to total Q-degree qdeg.
MultiSeries closed_partition_function(const StripDiagram& strip, const std::vector<Partition>& betas,
                                      int qdeg);
MultiSeries closed_partition_function(const StripDiagram& strip, const std::vector<Partition>& betas,
                                      const ContextPtr& ctx);

struct BoundaryData {
  Partition alpha0;
  Partition alphaN;
  std::vector<Partition> betas;
};

/// Vertex weights glued along the internal edges, summed over internal
/// partitions up to total Q-degree qdeg.
MultiSeries glued_partition_function(const StripDiagram& strip, const BoundaryData& boundary, int qdeg);
MultiSeries glued_partition_function(const StripDiagram& strip, const BoundaryData& boundary,
                                     const ContextPtr& ctx);

/// Searches framing integers in [-range, range] per edge for which glued and
/// closed forms agree up to Q-degree qdeg on the probes beta = empty,
/// beta_n = (1) and beta_n = (2). Returns every matching assignment.
/// At Q-degree 1 only the parity of each r_n is visible; degree 2 fixes it.
std::vector<std::vector<int>> calibrate_framing(const std::vector<int>& sigma, int qdeg = 2, int range = 2);

/// Resolved conifold: s_b1(q^rho) s_b2(q^rho) prod (1 - Q q^{b1'_i + b2'_j - i - j + 1}).
MultiSeries conifold_product(const Partition& beta1, const Partition& beta2, int qdeg);
/// prod (1 - Q q^{-i-j+1}) as a series in Q.
MultiSeries conifold_prefactor(const ContextPtr& ctx, const std::string& q);
/// sum_mu (-Q)^{|mu|} s_{b1/mu}(q^rho | -Q q^rho) s_{b2/mu'}(q^rho | -Q q^rho), without prefactor.
MultiSeries conifold_supersymmetric_sum(const Partition& beta1, const Partition& beta2, const ContextPtr& ctx,
                                        const std::string& q);
/// Prefactor times the supersymmetric sum.
MultiSeries conifold_alternative(const Partition& beta1, const Partition& beta2, int qdeg);

/// M(Q, q) = prod_n (1 - Q q^n)^{-n} from its logarithm sum_d Q^d/d q^d/(1-q^d)^2.
MultiSeries macmahon_series(int degree);
/// M(Q, q) = prod_{i,j} (1 - Q q^{i+j-1})^{-1} = sum_lambda Q^{|lambda|} s_lambda(q^{-rho})^2.
MultiSeries macmahon_schur_route(int degree);
/// Counts of plane partitions by volume 0..max_volume read off M(Q, q) at Q = 1.
std::vector<long> macmahon_volume_counts(int max_volume);
/// Exponential and Schur routes of M(Q, q) agree to the given Q-degree.
Report verify_macmahon(int degree);

struct StripOracleOptions {
  std::vector<int> sizes{2, 3};
  int qdeg = 3;
  int beta_weight = 2;
};
/// glued == closed for every sigma pattern of the given sizes and every
/// tuple of betas with total weight <= beta_weight.
Report verify_strip_oracle(const StripOracleOptions& options);

/// Resolved conifold: glued, product and alternative forms agree to qdeg for
/// |b1|, |b2| <= weight, and the quotient identity holds to identity_qdeg.
Report verify_conifold_identity(int weight, int qdeg, int identity_qdeg);

/// Size guard for combinatorial sums (QVERTEX_MAX_CONFIGS, default 2000000).
long max_configurations();
/// Safety cap on Q-degrees (QVERTEX_MAX_QDEG, default 12).
int max_qdeg();
/// Safety cap on partition weights (QVERTEX_MAX_WEIGHT, default 12).
int max_weight();

}  // namespace qv
