#include "qvertex/vertex.hpp"

#include <map>
#include <memory>
#include <thread>
#include <tuple>

#include "qvertex/errors.hpp"

namespace qv {

SpecEvaluator& shifted_evaluator(const Partition& beta) {
  thread_local std::map<Partition, std::unique_ptr<SpecEvaluator>> cache;
  auto& slot = cache[beta];
  if (!slot) slot = std::make_unique<SpecEvaluator>(Spec::shifted(beta));
  return *slot;
}

QRational topological_vertex(const Partition& alpha, const Partition& beta, const Partition& gamma) {
  using Key = std::tuple<Partition, Partition, Partition>;
  thread_local std::map<Key, QRational> cache;
  Key key{alpha, beta, gamma};
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  const Partition beta_t = beta.conjugate();
  const Partition gamma_t = gamma.conjugate();
  SpecEvaluator& x = shifted_evaluator(beta_t);
  SpecEvaluator& y = shifted_evaluator(beta);
  QRational sum;
  for (const auto& nu : subpartitions(intersection(alpha, gamma_t))) {
    QRational a = skew_schur(alpha, nu, x);
    if (a.is_zero()) continue;
    sum += a * skew_schur(gamma_t, nu, y);
  }
  QRational value = schur_hook(beta) * sum.shifted(gamma.kappa());
  cache.emplace(std::move(key), value);
  return value;
}

std::string to_string(TwoLeg which) {
  switch (which) {
    case TwoLeg::ab0: return "ab0";
    case TwoLeg::zab: return "0ab";
    case TwoLeg::b0a: return "b0a";
  }
  return "";
}

TwoLeg parse_two_leg(const std::string& s) {
  if (s == "ab0") return TwoLeg::ab0;
  if (s == "0ab") return TwoLeg::zab;
  if (s == "b0a") return TwoLeg::b0a;
  throw ParseError("unknown two-leg form '" + s + "' (expected ab0, 0ab or b0a)");
}

namespace {

QRational rho_overlap(const Partition& a, const Partition& b) {
  // sum_nu s_{a/nu}(q^rho) s_{b/nu}(q^rho)
  SpecEvaluator& rho = shifted_evaluator(Partition());
  QRational sum;
  for (const auto& nu : subpartitions(intersection(a, b))) {
    QRational x = skew_schur(a, nu, rho);
    if (x.is_zero()) continue;
    sum += x * skew_schur(b, nu, rho);
  }
  return sum;
}

}  // namespace

QRational two_leg_form(const Partition& alpha, const Partition& beta, TwoLeg which) {
  switch (which) {
    case TwoLeg::ab0:
      return schur_hook(beta) * schur(alpha, shifted_evaluator(beta.conjugate()));
    case TwoLeg::zab:
      return schur_hook(alpha) * schur(beta.conjugate(), shifted_evaluator(alpha)).shifted(beta.kappa());
    case TwoLeg::b0a:
      return rho_overlap(beta, alpha.conjugate()).shifted(alpha.kappa());
  }
  throw InvariantError("bad two-leg form");
}

Report verify_cyclic(int weight_max, int jobs) {
  if (weight_max < 0) throw InvariantError("negative weight bound");
  const auto parts = enumerate_partitions(weight_max);
  const std::size_t n = parts.size();
  using Triple = std::tuple<std::size_t, std::size_t, std::size_t>;
  std::vector<Triple> triples;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) triples.emplace_back(a, b, c);

  if (jobs < 1) jobs = 1;
  std::vector<Report> partial(static_cast<std::size_t>(jobs));
  auto work = [&](std::size_t worker) {
    Report& r = partial[worker];
    for (std::size_t t = worker; t < triples.size(); t += static_cast<std::size_t>(jobs)) {
      const auto& [a, b, c] = triples[t];
      const Partition &x = parts[a], &y = parts[b], &z = parts[c];
      // each cyclic class is visited once, from its lexicographically smallest rotation
      if (std::make_tuple(b, c, a) < triples[t] || std::make_tuple(c, a, b) < triples[t]) continue;
      QRational v = topological_vertex(x, y, z);
      const std::string tag = "C" + x.to_string() + y.to_string() + z.to_string();
      r.record(v == topological_vertex(y, z, x), tag + " != C_bca");
      r.record(v == topological_vertex(z, x, y), tag + " != C_cab");
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < jobs; ++w) pool.emplace_back(work, static_cast<std::size_t>(w));
  work(0);
  for (auto& t : pool) t.join();

  Report report;
  report.name = "cyclic";
  for (auto& r : partial) {
    report.checks += r.checks;
    for (auto& f : r.failures) report.failures.push_back(std::move(f));
  }
  for (const auto& a : parts)
    for (const auto& b : parts) {
      const std::string tag = a.to_string() + "," + b.to_string();
      report.record(topological_vertex(a, b, Partition()) == two_leg_form(a, b, TwoLeg::ab0),
                    "C_ab0 closed form at " + tag);
      report.record(topological_vertex(Partition(), a, b) == two_leg_form(a, b, TwoLeg::zab),
                    "C_0ab closed form at " + tag);
      report.record(topological_vertex(b, Partition(), a) == two_leg_form(a, b, TwoLeg::b0a),
                    "C_b0a closed form at " + tag);
    }
  return report;
}

Report verify_two_leg_identity(int weight_max) {
  if (weight_max < 0) throw InvariantError("negative weight bound");
  Report report;
  report.name = "two-leg identity";
  const auto parts = enumerate_partitions(weight_max);
  for (const auto& a : parts)
    for (const auto& b : parts) {
      QRational left = schur_hook(a) * schur(b, shifted_evaluator(a));
      QRational middle = rho_overlap(a.conjugate(), b.conjugate()).shifted(a.kappa() + b.kappa());
      QRational right = schur_hook(b) * schur(a, shifted_evaluator(b));
      const std::string tag = a.to_string() + "," + b.to_string();
      report.record(left == middle, "left != middle at " + tag);
      report.record(middle == right, "middle != right at " + tag);
    }
  return report;
}

}  // namespace qv
