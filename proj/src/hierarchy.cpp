#include "qvertex/hierarchy.hpp"

#include <functional>

#include "qvertex/errors.hpp"
#include "qvertex/schur.hpp"
#include "qvertex/vertex.hpp"

namespace qv {

namespace {

Exponents power_of(const ContextPtr& ctx, const std::string& name, int d) {
  Exponents e(ctx->size(), 0);
  e[ctx->index_of(name)] = d;
  return e;
}

std::vector<std::string> family(const std::string& stem, int count) {
  std::vector<std::string> names;
  for (int i = 1; i <= count; ++i) names.push_back(stem + "_" + std::to_string(i));
  return names;
}

}  // namespace

MultiSeries c3_generating_function(int trunc) {
  if (trunc < 0) throw InvariantError("negative truncation");
  ContextPtr ctx = times_context(std::max(trunc, 1), trunc);
  MultiSeries exponent(ctx);
  for (int k = 1; k <= trunc; ++k) exponent.add_term(power_of(ctx, "t" + std::to_string(k), 1), inv_bracket(k));
  return exponent.exp();
}

MultiSeries c3_schur_route(int trunc) {
  if (trunc < 0) throw InvariantError("negative truncation");
  ContextPtr ctx = times_context(std::max(trunc, 1), trunc);
  MultiSeries total(ctx);
  for_each_partition(trunc, [&](const Partition& lambda) {
    total += schur_in_times(lambda, Partition(), ctx) * schur_hook(lambda);
  });
  return total;
}

MultiSeries quantum_dilog(int trunc) {
  if (trunc < 0) throw InvariantError("negative truncation");
  ContextPtr ctx = ContextBuilder().variable("x", trunc).build();
  MultiSeries exponent(ctx);
  for (int k = 1; k <= trunc; ++k)
    exponent.add_term(Exponents{k}, inv_one_minus_vpow(2 * k).shifted(k) * QRational(Rational(1, k)));
  return exponent.exp();
}

MultiSeries quantum_dilog_product(int trunc) {
  if (trunc < 0) throw InvariantError("negative truncation");
  ContextPtr ctx = ContextBuilder().variable("x", trunc).build();
  SpecEvaluator& rho = shifted_evaluator(Partition());
  MultiSeries total(ctx);
  for (int k = 0; k <= trunc; ++k) total.add_term(Exponents{k}, rho.h(k).dilated(-1));
  return total;
}

namespace {

// log prod_i F_{mu_i - i + 1}, F_k = prod_{j >= 1} (1 - M q^{k-j})^s, as a series in M.
void add_row_log(MultiSeries& log, const Exponents& m_monomial, int s, const Partition& mu) {
  const ContextPtr& ctx = log.context();
  const int l = mu.length();
  for (int d = 1;; ++d) {
    Exponents e = m_monomial;
    for (auto& x : e) x *= d;
    if (!ctx->admits(e)) break;
    // sum_i q^{d(mu_i - i + 1/2)}: finite rows plus the geometric remainder
    std::vector<std::pair<int, Rational>> rows;
    for (int i = 1; i <= l; ++i) rows.emplace_back(d * (2 * mu.part(i) - 2 * i + 1), Rational(1));
    QRational row_sum = QRational(LaurentPoly::from_terms(rows)) + inv_bracket(d).shifted(-2 * d * l);
    log.add_term(e, row_sum * inv_bracket(d) * QRational(Rational(-s, d)));
  }
}

}  // namespace

TauCoefficients tau_coefficients(const StripDiagram& strip, int n, int weight_cap, int qdeg) {
  const int N = strip.size();
  if (n < 1 || n > N) throw InvariantError("vertex index out of range");
  if (weight_cap < 0) throw InvariantError("negative weight cap");
  if (weight_cap > max_weight()) throw BlowUpError("weight cap exceeds QVERTEX_MAX_WEIGHT");
  ContextPtr ctx = strip_context(strip, qdeg);
  auto sig = [&](int m) { return strip.sigma[static_cast<std::size_t>(m - 1)]; };

  // pairs not touching n do not see lambda
  MultiSeries spectator(ctx);
  for (int m = 1; m <= N; ++m)
    for (int k = m + 1; k <= N; ++k) {
      if (m == n || k == n) continue;
      Exponents base = strip.kahler_monomial(ctx, m, k - 1);
      for (int d = 1;; ++d) {
        Exponents e = base;
        for (auto& x : e) x *= d;
        if (!ctx->admits(e)) break;
        spectator.add_term(e, inv_bracket(d).pow(2) * QRational(Rational(sig(m) * sig(k), d)));
      }
    }

  TauCoefficients out;
  for_each_partition(weight_cap, [&](const Partition& lambda) {
    const Partition lambda_t = lambda.conjugate();
    MultiSeries log = spectator;
    for (int m = 1; m <= N; ++m) {
      if (m == n) continue;
      Exponents M = m < n ? strip.kahler_monomial(ctx, m, n - 1) : strip.kahler_monomial(ctx, n, m - 1);
      if (sig(n) > 0) {
        // f from vertices on the left acts on rows, g from the right on columns
        add_row_log(log, M, -sig(m), m < n ? lambda : lambda_t);
      } else {
        add_row_log(log, M, sig(m), m > n ? lambda : lambda_t);
      }
    }
    out.emplace(lambda, log.exp() * schur_hook(lambda));
  });
  return out;
}

ContextPtr tau_context(const std::vector<std::string>& q_vars, int qdeg, int t_cap) {
  ContextBuilder b;
  if (!q_vars.empty()) b.group(q_vars, qdeg);
  b.group({"t1", "t2", "t3"}, t_cap, {1, 2, 3});
  return b.build();
}

MultiSeries tau_series(const TauCoefficients& coefficients, const ContextPtr& ctx) {
  int t_cap = 0;
  while (ctx->admits(power_of(ctx, "t1", t_cap + 1))) ++t_cap;
  ContextPtr tctx = times_context(3, t_cap);
  MultiSeries tau(ctx);
  for (const auto& [lambda, a] : coefficients) {
    if (lambda.weight() > t_cap) continue;
    MultiSeries s = schur_in_times(lambda, Partition(), tctx);
    if (s.is_zero()) continue;
    tau += a.embedded(ctx) * s.embedded(ctx);
  }
  return tau;
}

MultiSeries hirota_residual(const MultiSeries& tau, int t_degree) {
  const ContextPtr& ctx = tau.context();
  const std::size_t i1 = ctx->index_of("t1"), i2 = ctx->index_of("t2"), i3 = ctx->index_of("t3");
  // products only need t-weights <= t_degree
  std::vector<TruncationConstraint> cons = ctx->constraints();
  TruncationConstraint t_weight{std::vector<int>(ctx->size(), 0), t_degree};
  t_weight.weights[i1] = 1;
  t_weight.weights[i2] = 2;
  t_weight.weights[i3] = 3;
  cons.push_back(t_weight);
  ContextPtr small = std::make_shared<const SeriesContext>(ctx->variables(), cons);

  const MultiSeries t1 = tau.derivative(i1);
  const MultiSeries t11 = t1.derivative(i1);
  const MultiSeries t111 = t11.derivative(i1);
  const MultiSeries t1111 = t111.derivative(i1);
  const MultiSeries t2 = tau.derivative(i2);
  const MultiSeries t22 = t2.derivative(i2);
  const MultiSeries t3 = tau.derivative(i3);
  const MultiSeries t13 = t3.derivative(i1);
  auto r = [&](const MultiSeries& s) { return s.restricted(small); };
  const MultiSeries T = r(tau);
  MultiSeries res = T * r(t1111);
  res -= r(t1) * r(t111) * QRational(4L);
  res += r(t11) * r(t11) * QRational(3L);
  res += T * r(t22) * QRational(3L);
  res -= r(t2) * r(t2) * QRational(3L);
  res -= T * r(t13) * QRational(4L);
  res += r(t1) * r(t3) * QRational(4L);
  return res;
}

Report hirota_check(const MultiSeries& tau, int t_degree, const std::string& label) {
  if (t_degree < 4) throw InvariantError("Hirota check needs t-degree >= 4");
  Report report;
  report.name = "hirota " + label;
  MultiSeries res = hirota_residual(tau, t_degree);
  report.record(res.is_zero(), "nonzero residual " + res.to_string().substr(0, 200));
  return report;
}

MultiSeries trivial_tau(int t_degree) {
  const int cap = t_degree + 4;
  ContextPtr ctx = ContextBuilder().group({"c1", "c2", "c3"}, cap).group({"t1", "t2", "t3"}, cap, {1, 2, 3}).build();
  MultiSeries exponent(ctx);
  for (int k = 1; k <= 3; ++k) {
    Exponents e(ctx->size(), 0);
    e[ctx->index_of("c" + std::to_string(k))] = 1;
    e[ctx->index_of("t" + std::to_string(k))] = 1;
    exponent.add_term(e, QRational(1L));
  }
  return exponent.exp();
}

Report verify_hirota(const std::vector<StripDiagram>& strips, int t_degree, int qdeg) {
  Report report;
  report.name = "hirota";
  const int cap = t_degree + 4;
  report.merge(hirota_check(trivial_tau(t_degree), t_degree, "trivial"));

  TauCoefficients c3;
  ContextPtr empty = ContextBuilder().build();
  for_each_partition(cap, [&](const Partition& l) { c3.emplace(l, MultiSeries::constant(empty, schur_hook(l))); });
  report.merge(hirota_check(tau_series(c3, tau_context({}, 0, cap)), t_degree, "C3"));

  for (std::size_t s = 0; s < strips.size(); ++s) {
    const StripDiagram& strip = strips[s];
    ContextPtr ctx = tau_context(strip.kahler, qdeg, cap);
    for (int n = 1; n <= strip.size(); ++n) {
      TauCoefficients a = tau_coefficients(strip, n, cap, qdeg);
      std::string label = "strip" + std::to_string(s + 1) + " n=" + std::to_string(n);
      report.merge(hirota_check(tau_series(a, ctx), t_degree, label));
      if (s == 0 && n == 1) {
        auto& slot = a.at(Partition{2, 1});
        slot += MultiSeries::constant(slot.context(), QRational(1L));
        MultiSeries res = hirota_residual(tau_series(a, ctx), t_degree);
        report.record(!res.is_zero(), "mutated a_(2,1) not detected");
      }
    }
  }
  return report;
}

Report verify_hirota_vertex(const StripDiagram& strip, int n, int t_degree, int qdeg) {
  if (n < 1 || n > strip.size()) throw InvariantError("vertex index out of range");
  const int cap = t_degree + 4;
  const MultiSeries tau = tau_series(tau_coefficients(strip, n, cap, qdeg), tau_context(strip.kahler, qdeg, cap));
  Report report = hirota_check(tau, t_degree, "n=" + std::to_string(n));
  report.name = "hirota n=" + std::to_string(n);
  return report;
}

Report verify_tau_coefficients(const StripDiagram& strip, int n, int weight_cap, int qdeg) {
  Report report;
  report.name = "tau coefficients";
  ContextPtr ctx = strip_context(strip, qdeg);
  for (const auto& [lambda, a] : tau_coefficients(strip, n, weight_cap, qdeg)) {
    std::vector<Partition> betas(static_cast<std::size_t>(strip.size()));
    betas[static_cast<std::size_t>(n - 1)] = lambda;
    report.record(a == closed_partition_function(strip, betas, ctx), "a_" + lambda.to_string());
    // decoupling: Q = 0 leaves the hook formula
    report.record(a.constant_term() == schur_hook(lambda), "Q=0 limit of a_" + lambda.to_string());
  }
  return report;
}

std::string to_string(ConifoldRoute route) {
  switch (route) {
    case ConifoldRoute::product: return "product";
    case ConifoldRoute::exponential: return "exponential";
    case ConifoldRoute::schur_sum: return "schur-sum";
  }
  return "";
}

ConifoldRoute parse_conifold_route(const std::string& s) {
  if (s == "product") return ConifoldRoute::product;
  if (s == "exponential") return ConifoldRoute::exponential;
  if (s == "schur-sum" || s == "schur_sum") return ConifoldRoute::schur_sum;
  throw ParseError("unknown route '" + s + "'");
}

ContextPtr two_variable_context(const TwoVariableOptions& o) {
  if (o.variables < 1 || o.xdeg < 0 || o.qdeg < 0) throw InvariantError("bad two-variable truncation");
  if (o.qdeg > max_qdeg()) throw BlowUpError("Q-degree exceeds QVERTEX_MAX_QDEG");
  if (o.xdeg > max_weight()) throw BlowUpError("x-degree exceeds QVERTEX_MAX_WEIGHT");
  return ContextBuilder()
      .variable("Q", o.qdeg)
      .group(family("x1", o.variables), o.xdeg)
      .group(family("x2", o.variables), o.xdeg)
      .build();
}

MultiSeries conifold_two_variable(const TwoVariableOptions& o, ConifoldRoute route) {
  ContextPtr ctx = two_variable_context(o);
  const auto x1 = family("x1", o.variables), x2 = family("x2", o.variables);
  MultiSeries Q = MultiSeries::variable(ctx, "Q");
  MultiSeries one = MultiSeries::constant(ctx, QRational(1L));
  switch (route) {
    case ConifoldRoute::product: {
      SpecEvaluator& rho = shifted_evaluator(Partition());
      MultiSeries z = conifold_prefactor(ctx, "Q");
      std::vector<std::string> all = x1;
      all.insert(all.end(), x2.begin(), x2.end());
      for (const auto& name : all) {
        // prod_j (1 - Q x q^{-j+1/2}) / (1 - x q^{-j+1/2})
        MultiSeries x = MultiSeries::variable(ctx, name);
        MultiSeries up(ctx), down(ctx);
        MultiSeries xp = one, mqx = one;
        for (int k = 0; k <= o.xdeg; ++k) {
          down += xp * rho.h(k);
          up += mqx * rho.e(k);
          xp *= x;
          mqx *= -(Q * x);
        }
        z *= up * down;
      }
      for (const auto& a : x1)
        for (const auto& b : x2) z *= one - Q * MultiSeries::variable(ctx, a) * MultiSeries::variable(ctx, b);
      return z;
    }
    case ConifoldRoute::exponential: {
      MultiSeries exponent(ctx);
      for (int k = 1; k <= o.xdeg; ++k) {
        MultiSeries t1(ctx), t2(ctx);
        for (const auto& a : x1) t1 += MultiSeries::variable(ctx, a).pow(static_cast<unsigned>(k));
        for (const auto& b : x2) t2 += MultiSeries::variable(ctx, b).pow(static_cast<unsigned>(k));
        t1 *= QRational(Rational(1, k));
        t2 *= QRational(Rational(1, k));
        MultiSeries qk = Q.pow(static_cast<unsigned>(k));
        exponent += (one - qk) * (t1 + t2) * inv_bracket(k);
        exponent -= qk * t1 * t2 * QRational(static_cast<long>(k));
      }
      return conifold_prefactor(ctx, "Q") * exponent.exp();
    }
    case ConifoldRoute::schur_sum: {
      StripDiagram strip = StripDiagram::conifold();
      ContextPtr qctx = strip_context(strip, o.qdeg);
      MultiSeries total(ctx);
      std::map<Partition, MultiSeries> s1, s2;
      for_each_partition(o.xdeg, [&](const Partition& b) {
        if (b.length() > o.variables) return;
        s1.emplace(b, schur_in_variables(b, Partition(), ctx, x1));
        s2.emplace(b, schur_in_variables(b, Partition(), ctx, x2));
      });
      for (const auto& [b1, f1] : s1)
        for (const auto& [b2, f2] : s2)
          total += closed_partition_function(strip, {b1, b2}, qctx).embedded(ctx) * f1 * f2;
      return total;
    }
  }
  throw InvariantError("bad route");
}

Report verify_conifold_two_variable(const TwoVariableOptions& o) {
  Report report;
  report.name = "conifold two-variable";
  MultiSeries p = conifold_two_variable(o, ConifoldRoute::product);
  MultiSeries e = conifold_two_variable(o, ConifoldRoute::exponential);
  MultiSeries s = conifold_two_variable(o, ConifoldRoute::schur_sum);
  report.record(p == e, "product != exponential");
  report.record(p == s, "product != schur-sum");
  return report;
}

MultiSeries general_generating_function(const StripDiagram& strip, const GeneratingOptions& o) {
  if (o.variables < 1 || o.weight < 0) throw InvariantError("bad generating-function truncation");
  if (o.weight > max_weight()) throw BlowUpError("weight exceeds QVERTEX_MAX_WEIGHT");
  const int N = strip.size();
  ContextBuilder b;
  if (!strip.kahler.empty()) b.group(strip.kahler, o.qdeg);
  std::vector<std::vector<std::string>> families;
  if (o.kind == GeneratingKind::multi) {
    for (int n = 1; n <= N; ++n) families.push_back(family("x" + std::to_string(n), o.variables));
  } else {
    families.push_back(family("y", o.variables));
    families.push_back(family("z", o.variables));
  }
  for (const auto& f : families) b.group(f, o.weight);
  ContextPtr ctx = b.build();
  ContextPtr qctx = strip_context(strip, o.qdeg);

  std::vector<std::map<Partition, MultiSeries>> schurs(families.size());
  for (std::size_t f = 0; f < families.size(); ++f)
    for_each_partition(o.weight, [&](const Partition& p) {
      if (p.length() <= o.variables) schurs[f].emplace(p, schur_in_variables(p, Partition(), ctx, families[f]));
    });

  MultiSeries total(ctx);
  std::vector<Partition> chosen(families.size());
  std::function<void(std::size_t, MultiSeries)> go = [&](std::size_t f, MultiSeries weight) {
    if (f == families.size()) {
      BoundaryData data;
      if (o.kind == GeneratingKind::multi) {
        data.betas = chosen;
      } else {
        data.alpha0 = chosen[0];
        data.alphaN = chosen[1];
        data.betas = o.betas.empty() ? std::vector<Partition>(static_cast<std::size_t>(N)) : o.betas;
      }
      total += glued_partition_function(strip, data, qctx).embedded(ctx) * weight;
      return;
    }
    for (const auto& [p, s] : schurs[f]) {
      chosen[f] = p;
      go(f + 1, weight * s);
    }
  };
  go(0, MultiSeries::constant(ctx, QRational(1L)));
  return total;
}

}  // namespace qv
