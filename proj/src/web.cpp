#include "qvertex/web.hpp"

#include <cstdlib>
#include <functional>

#include "qvertex/errors.hpp"
#include "qvertex/schur.hpp"
#include "qvertex/vertex.hpp"

namespace qv {

namespace {

long env_limit(const char* name, long fallback) {
  const char* s = std::getenv(name);
  if (!s || !*s) return fallback;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (*end || v <= 0) throw ParseError(std::string("bad value for ") + name);
  return v;
}

}  // namespace

long max_configurations() { return env_limit("QVERTEX_MAX_CONFIGS", 2000000); }
int max_qdeg() { return static_cast<int>(env_limit("QVERTEX_MAX_QDEG", 12)); }
int max_weight() { return static_cast<int>(env_limit("QVERTEX_MAX_WEIGHT", 12)); }

std::vector<int> default_framing(const std::vector<int>& sigma) {
  std::vector<int> r;
  for (std::size_t n = 0; n + 1 < sigma.size(); ++n) r.push_back(sigma[n] == sigma[n + 1] ? -sigma[n] : 0);
  return r;
}

StripDiagram StripDiagram::make(std::vector<int> sigma, std::vector<std::string> kahler,
                                std::optional<std::vector<int>> framing) {
  if (sigma.empty()) throw InvariantError("a strip needs at least one vertex");
  for (int s : sigma)
    if (s != 1 && s != -1) throw InvariantError("vertex types must be +1 or -1");
  const std::size_t edges = sigma.size() - 1;
  if (kahler.empty()) {
    if (edges == 1) kahler.push_back("Q");
    else
      for (std::size_t n = 1; n <= edges; ++n) kahler.push_back("Q" + std::to_string(n));
  }
  if (kahler.size() != edges) throw InvariantError("need one Kahler variable per internal edge");
  StripDiagram s;
  s.framing = framing ? *framing : default_framing(sigma);
  if (s.framing.size() != edges) throw InvariantError("need one framing integer per internal edge");
  s.sigma = std::move(sigma);
  s.kahler = std::move(kahler);
  // validates distinct names
  SeriesContext(s.kahler, {TruncationConstraint{std::vector<int>(s.kahler.size(), 1), 0}});
  return s;
}

StripDiagram StripDiagram::from_json(const Json& j) {
  if (!j.is_object() || !j.contains("sigma")) throw ParseError("strip JSON needs a sigma array");
  try {
    std::vector<int> sigma = j.at("sigma").get<std::vector<int>>();
    std::vector<std::string> kahler;
    if (j.contains("Q")) kahler = j.at("Q").get<std::vector<std::string>>();
    std::optional<std::vector<int>> framing;
    if (j.contains("framing") && !j.at("framing").is_null()) framing = j.at("framing").get<std::vector<int>>();
    return make(std::move(sigma), std::move(kahler), std::move(framing));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("strip JSON: ") + e.what());
  } catch (const InvariantError& e) {
    throw ParseError(std::string("strip JSON: ") + e.what());
  }
}

Json StripDiagram::to_json() const {
  Json j;
  j["sigma"] = sigma;
  j["framing"] = framing;
  j["Q"] = kahler;
  return j;
}

Partition StripDiagram::oriented(int n, const Partition& beta) const {
  return sigma.at(static_cast<std::size_t>(n - 1)) > 0 ? beta : beta.conjugate();
}

Exponents StripDiagram::kahler_monomial(const ContextPtr& ctx, int m, int n) const {
  Exponents e(ctx->size(), 0);
  for (int k = m; k <= n; ++k) e[ctx->index_of(kahler.at(static_cast<std::size_t>(k - 1)))] += 1;
  return e;
}

ContextPtr strip_context(const StripDiagram& strip, int qdeg) {
  if (qdeg < 0) throw InvariantError("negative Q-degree");
  if (qdeg > max_qdeg()) throw BlowUpError("Q-degree " + std::to_string(qdeg) + " exceeds QVERTEX_MAX_QDEG");
  ContextBuilder b;
  if (!strip.kahler.empty()) b.group(strip.kahler, qdeg);
  return b.build();
}

QRational regularized_power_sum(const Partition& lambda, int k) {
  if (k < 1) throw InvariantError("regularized power sum needs k >= 1");
  QRational r = inv_bracket(k);
  std::vector<std::pair<int, Rational>> head;
  for (int i = 1; i <= lambda.length(); ++i) {
    head.emplace_back(2 * k * (lambda.part(i) - i) + k, Rational(1));
    head.emplace_back(-2 * k * i + k, Rational(-1));
  }
  return r + QRational(LaurentPoly::from_terms(head));
}

MultiSeries closed_partition_function(const StripDiagram& strip, const std::vector<Partition>& betas,
                                      int qdeg) {
  return closed_partition_function(strip, betas, strip_context(strip, qdeg));
}

MultiSeries closed_partition_function(const StripDiagram& strip, const std::vector<Partition>& betas,
                                      const ContextPtr& ctx) {
  const int N = strip.size();
  if (static_cast<int>(betas.size()) != N) throw InvariantError("need one beta per vertex");
  QRational front(1L);
  for (const auto& b : betas) front *= schur_hook(b);
  MultiSeries exponent(ctx);
  for (int m = 1; m <= N; ++m) {
    const Partition left = strip.oriented(m, betas[static_cast<std::size_t>(m - 1)]).conjugate();
    for (int n = m + 1; n <= N; ++n) {
      const Partition right = strip.oriented(n, betas[static_cast<std::size_t>(n - 1)]);
      const int sign = strip.sigma[static_cast<std::size_t>(m - 1)] * strip.sigma[static_cast<std::size_t>(n - 1)];
      Exponents base = strip.kahler_monomial(ctx, m, n - 1);
      for (int d = 1;; ++d) {
        Exponents e = base;
        for (auto& x : e) x *= d;
        if (!ctx->admits(e)) break;
        QRational c = regularized_power_sum(left, d) * regularized_power_sum(right, d) *
                      QRational(Rational(sign, d));
        exponent.add_term(e, c);
      }
    }
  }
  return exponent.exp() * front;
}

MultiSeries glued_partition_function(const StripDiagram& strip, const BoundaryData& boundary, int qdeg) {
  return glued_partition_function(strip, boundary, strip_context(strip, qdeg));
}

MultiSeries glued_partition_function(const StripDiagram& strip, const BoundaryData& boundary,
                                     const ContextPtr& ctx) {
  const int N = strip.size();
  if (static_cast<int>(boundary.betas.size()) != N) throw InvariantError("need one beta per vertex");
  const std::size_t edges = static_cast<std::size_t>(N - 1);
  std::vector<std::size_t> slot(edges);
  for (std::size_t n = 0; n < edges; ++n) slot[n] = ctx->index_of(strip.kahler[n]);

  // largest total weight the context admits along the internal edges
  int cap = 0;
  if (edges > 0) {
    while (true) {
      Exponents e(ctx->size(), 0);
      e[slot[0]] = cap + 1;
      if (!ctx->admits(e)) break;
      ++cap;
      if (cap > max_weight() * 4) break;
    }
  }
  const auto pool = enumerate_partitions(cap);

  MultiSeries total(ctx);
  std::vector<Partition> alpha(edges);
  long visited = 0;
  const long limit = max_configurations();

  auto vertex_weight = [&](int n) {
    const Partition left = n == 1 ? boundary.alpha0 : alpha[static_cast<std::size_t>(n - 2)].conjugate();
    const Partition right = n == N ? boundary.alphaN : alpha[static_cast<std::size_t>(n - 1)];
    const Partition& beta = boundary.betas[static_cast<std::size_t>(n - 1)];
    return strip.sigma[static_cast<std::size_t>(n - 1)] > 0 ? topological_vertex(right, beta, left)
                                                             : topological_vertex(left, beta, right);
  };

  std::function<void(std::size_t, Exponents&)> go = [&](std::size_t edge, Exponents& e) {
    if (edge == edges) {
      if (++visited > limit) throw BlowUpError("gluing sum exceeds QVERTEX_MAX_CONFIGS");
      QRational w(1L);
      for (int n = 1; n <= N && !w.is_zero(); ++n) w *= vertex_weight(n);
      if (w.is_zero()) return;
      for (std::size_t k = 0; k < edges; ++k) {
        const Partition& a = alpha[k];
        const int r = strip.framing[k];
        // (-Q)^{|a|} (-1)^{r|a|} q^{-r kappa(a)/2}
        if (((1 + r) * a.weight()) % 2) w = -w;
        w = w.shifted(-r * a.kappa());
      }
      total.add_term(e, w);
      return;
    }
    for (const auto& a : pool) {
      e[slot[edge]] += a.weight();
      if (ctx->admits(e)) {
        alpha[edge] = a;
        go(edge + 1, e);
      }
      e[slot[edge]] -= a.weight();
    }
  };
  Exponents e(ctx->size(), 0);
  go(0, e);
  return total;
}

std::vector<std::vector<int>> calibrate_framing(const std::vector<int>& sigma, int qdeg, int range) {
  const std::size_t edges = sigma.size() - 1;
  std::vector<std::vector<Partition>> probes;
  probes.emplace_back(sigma.size());
  for (std::size_t n = 0; n < sigma.size(); ++n) {
    std::vector<Partition> p(sigma.size());
    p[n] = Partition{1};
    probes.push_back(p);
    p[n] = Partition{2};
    probes.push_back(p);
  }
  std::vector<std::vector<int>> found;
  std::vector<int> r(edges, -range);
  while (true) {
    StripDiagram strip = StripDiagram::make(sigma, {}, r);
    ContextPtr ctx = strip_context(strip, qdeg);
    bool ok = true;
    for (const auto& betas : probes) {
      if (!(glued_partition_function(strip, {Partition(), Partition(), betas}, ctx) ==
            closed_partition_function(strip, betas, ctx))) {
        ok = false;
        break;
      }
    }
    if (ok) found.push_back(r);
    std::size_t k = 0;
    while (k < edges && r[k] == range) r[k++] = -range;
    if (k == edges) break;
    ++r[k];
  }
  return found;
}

namespace {

ContextPtr single_q(int qdeg, const std::string& q = "Q") {
  if (qdeg < 0) throw InvariantError("negative Q-degree");
  if (qdeg > max_qdeg()) throw BlowUpError("Q-degree exceeds QVERTEX_MAX_QDEG");
  return ContextBuilder().variable(q, qdeg).build();
}

Exponents q_power(const ContextPtr& ctx, const std::string& q, int d) {
  Exponents e(ctx->size(), 0);
  e[ctx->index_of(q)] = d;
  return e;
}

}  // namespace

MultiSeries conifold_product(const Partition& beta1, const Partition& beta2, int qdeg) {
  ContextPtr ctx = single_q(qdeg);
  const Partition a = beta1.conjugate(), b = beta2.conjugate();
  MultiSeries exponent(ctx);
  for (int d = 1; d <= qdeg; ++d)
    exponent.add_term(q_power(ctx, "Q", d), regularized_power_sum(a, d) * regularized_power_sum(b, d) *
                                                QRational(Rational(-1, d)));
  return exponent.exp() * (schur_hook(beta1) * schur_hook(beta2));
}

MultiSeries conifold_prefactor(const ContextPtr& ctx, const std::string& q) {
  MultiSeries exponent(ctx);
  for (int d = 1; ctx->admits(q_power(ctx, q, d)); ++d)
    exponent.add_term(q_power(ctx, q, d), inv_bracket(d).pow(2) * QRational(Rational(-1, d)));
  return exponent.exp();
}

MultiSeries conifold_supersymmetric_sum(const Partition& beta1, const Partition& beta2, const ContextPtr& ctx,
                                        const std::string& q) {
  SpecEvaluator& rho = shifted_evaluator(Partition());
  FormalScale minus_q{ctx, q, QRational(-1L)};
  MultiSeries total(ctx);
  for (const auto& mu : subpartitions(beta1)) {
    const Partition mut = mu.conjugate();
    if (!beta2.contains(mut)) continue;
    MultiSeries a = supersymmetric_skew(beta1, mu, rho, rho, minus_q);
    MultiSeries b = supersymmetric_skew(beta2, mut, rho, rho, minus_q);
    total += minus_q.power(mu.weight()) * a * b;
  }
  return total;
}

MultiSeries conifold_alternative(const Partition& beta1, const Partition& beta2, int qdeg) {
  ContextPtr ctx = single_q(qdeg);
  return conifold_prefactor(ctx, "Q") * conifold_supersymmetric_sum(beta1, beta2, ctx, "Q");
}

MultiSeries macmahon_series(int degree) {
  ContextPtr ctx = single_q(degree);
  MultiSeries exponent(ctx);
  for (int d = 1; d <= degree; ++d) {
    // sum_n n q^{nd} = q^d / (1 - q^d)^2
    QRational c = inv_one_minus_vpow(2 * d).pow(2).shifted(2 * d) * QRational(Rational(1, d));
    exponent.add_term(q_power(ctx, "Q", d), c);
  }
  return exponent.exp();
}

MultiSeries macmahon_schur_route(int degree) {
  ContextPtr ctx = single_q(degree);
  MultiSeries total(ctx);
  for_each_partition(degree, [&](const Partition& lambda) {
    QRational s = schur_hook(lambda).dilated(-1);
    total.add_term(q_power(ctx, "Q", lambda.weight()), s * s);
  });
  return total;
}

std::vector<long> macmahon_volume_counts(int max_volume) {
  MultiSeries m = macmahon_series(max_volume);
  std::vector<long> counts(static_cast<std::size_t>(max_volume) + 1, 0);
  for (int k = 0; k <= max_volume; ++k) {
    // every factor Q q^n has n >= 1, so Q^k only feeds volumes >= k
    LaurentPoly series = m.coefficient(Exponents{k}).expand(2 * max_volume);
    for (const auto& [e, c] : series.terms()) {
      if (e % 2) throw InvariantError("MacMahon series in odd powers of q^{1/2}");
      if (c.get_den() != 1 || !c.get_num().fits_slong_p()) throw InvariantError("non-integral count");
      counts[static_cast<std::size_t>(e / 2)] += c.get_num().get_si();
    }
  }
  return counts;
}

Report verify_macmahon(int degree) {
  Report report;
  report.name = "macmahon";
  const MultiSeries a = macmahon_series(degree), b = macmahon_schur_route(degree);
  for (int d = 0; d <= degree; ++d)
    report.record(a.coefficient(Exponents{d}) == b.coefficient(Exponents{d}),
                  "routes differ at Q^" + std::to_string(d));
  return report;
}

Report verify_strip_oracle(const StripOracleOptions& o) {
  Report report;
  report.name = "strip-oracle";
  for (int N : o.sizes) {
    if (N < 1) throw InvariantError("strip size must be positive");
    for (int mask = 0; mask < (1 << N); ++mask) {
      std::vector<int> sigma;
      for (int n = 0; n < N; ++n) sigma.push_back(mask & (1 << n) ? -1 : 1);
      StripDiagram strip = StripDiagram::make(sigma);
      ContextPtr ctx = strip_context(strip, o.qdeg);
      std::vector<Partition> betas(static_cast<std::size_t>(N));
      std::function<void(int, int)> go = [&](int n, int budget) {
        if (n == N) {
          bool ok = glued_partition_function(strip, {Partition(), Partition(), betas}, ctx) ==
                    closed_partition_function(strip, betas, ctx);
          std::string tag = "sigma=";
          for (int s : sigma) tag += s > 0 ? "+" : "-";
          tag += " betas=";
          for (const auto& b : betas) tag += b.to_string();
          report.record(ok, "glued != closed at " + tag);
          return;
        }
        for_each_partition(budget, [&](const Partition& b) {
          betas[static_cast<std::size_t>(n)] = b;
          go(n + 1, budget - b.weight());
        });
      };
      go(0, o.beta_weight);
    }
  }
  return report;
}

Report verify_conifold_identity(int weight, int qdeg, int identity_qdeg) {
  Report report;
  report.name = "conifold-identity";
  StripDiagram strip = StripDiagram::conifold();
  ContextPtr ctx = strip_context(strip, qdeg);
  ContextPtr small = single_q(identity_qdeg);
  const auto parts = enumerate_partitions(weight);
  for (const auto& b1 : parts)
    for (const auto& b2 : parts) {
      const std::string tag = b1.to_string() + "," + b2.to_string();
      MultiSeries product = conifold_product(b1, b2, qdeg);
      MultiSeries glued = glued_partition_function(strip, {Partition(), Partition(), {b1, b2}}, ctx);
      report.record(glued == product, "glued != product at " + tag);
      report.record(conifold_alternative(b1, b2, qdeg) == product, "alternative != product at " + tag);
      report.record(closed_partition_function(strip, {b1, b2}, ctx) == product, "closed != product at " + tag);
      // product / prefactor == supersymmetric sum
      MultiSeries lhs = product.restricted(small) * conifold_prefactor(small, "Q").inverse();
      report.record(lhs == conifold_supersymmetric_sum(b1, b2, small, "Q"), "quotient identity at " + tag);
    }
  return report;
}

}  // namespace qv
