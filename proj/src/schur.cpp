#include "qvertex/schur.hpp"

#include <functional>

#include "qvertex/errors.hpp"

namespace qv {

Spec Spec::rho() {
  Spec s;
  s.tail_start = 1;
  return s;
}

Spec Spec::shifted(const Partition& beta) {
  Spec s;
  for (int i = 1; i <= beta.length(); ++i) s.head.emplace_back(Rational(1), 2 * beta.part(i) - 2 * i + 1);
  s.tail_start = beta.length() + 1;
  return s;
}

Spec Spec::finite(std::vector<std::pair<Rational, int>> variables) {
  Spec s;
  s.head = std::move(variables);
  return s;
}

Spec Spec::zero() { return Spec{}; }

Spec Spec::scaled(const QRational& c) const {
  Spec s = *this;
  s.scale *= c;
  return s;
}

SpecEvaluator::SpecEvaluator(Spec spec) : spec_(std::move(spec)) {
  if (spec_.tail_start && *spec_.tail_start < 1) throw InvariantError("tail must start at index >= 1");
}

const QRational& SpecEvaluator::h(int k) {
  if (k < 0) return zero_;
  if (static_cast<int>(h_.size()) <= k) extend(h_, k, false);
  return h_[static_cast<std::size_t>(k)];
}

const QRational& SpecEvaluator::e(int k) {
  if (k < 0) return zero_;
  if (static_cast<int>(e_.size()) <= k) extend(e_, k, true);
  return e_[static_cast<std::size_t>(k)];
}

void SpecEvaluator::extend(std::vector<QRational>& cache, int k, bool elementary) {
  const std::size_t n = static_cast<std::size_t>(k) + 1;
  // head part, one variable at a time
  std::vector<QRational> head(n);
  head[0] = QRational(1L);
  for (const auto& [c, ex] : spec_.head) {
    QRational x(LaurentPoly::monomial(c, ex));
    if (elementary) {
      for (std::size_t j = n; j-- > 1;) head[j] += x * head[j - 1];
    } else {
      for (std::size_t j = 1; j < n; ++j) head[j] += x * head[j - 1];
    }
  }
  std::vector<QRational> tail(n);
  if (spec_.tail_start) {
    // geometric tail a, a v^-2, a v^-4, ... with a = v^{-2s+1}
    const int a = -2 * *spec_.tail_start + 1;
    QRational denom(1L);
    tail[0] = QRational(1L);
    for (std::size_t j = 1; j < n; ++j) {
      const int jj = static_cast<int>(j);
      denom *= inv_one_minus_vpow(-2 * jj);
      const int shift = elementary ? a * jj - jj * (jj - 1) : a * jj;
      tail[j] = denom.shifted(shift);
    }
  } else {
    tail[0] = QRational(1L);
  }
  cache.assign(n, QRational());
  QRational scale_power(1L);
  for (std::size_t j = 0; j < n; ++j) {
    QRational acc;
    for (std::size_t i = 0; i <= j; ++i)
      if (!head[i].is_zero() && !tail[j - i].is_zero()) acc += head[i] * tail[j - i];
    cache[j] = acc * scale_power;
    scale_power *= spec_.scale;
  }
}

QRational SpecEvaluator::power_sum(int k) const {
  if (k < 1) throw InvariantError("power sums start at k = 1");
  QRational p;
  for (const auto& [c, ex] : spec_.head) {
    Rational ck = 1;
    for (int i = 0; i < k; ++i) ck *= c;
    p += QRational(LaurentPoly::monomial(ck, ex * k));
  }
  if (spec_.tail_start) {
    const int a = -2 * *spec_.tail_start + 1;
    p += inv_one_minus_vpow(-2 * k).shifted(a * k);
  }
  return p * spec_.scale.pow(k);
}

namespace {

template <class T, class Entry>
T jacobi_trudi(const Partition& lambda, const Partition& mu, Entry entry, const T& zero, const T& one) {
  if (!lambda.contains(mu)) return zero;
  const int n = lambda.length();
  std::vector<std::vector<T>> m(static_cast<std::size_t>(n), std::vector<T>(static_cast<std::size_t>(n), zero));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
          entry(lambda.part(i) - mu.part(j) - i + j);
  return subset_determinant(m, zero, one);
}

}  // namespace

QRational skew_schur(const Partition& lambda, const Partition& mu, SpecEvaluator& spec) {
  return jacobi_trudi<QRational>(lambda, mu, [&](int k) { return spec.h(k); }, QRational(), QRational(1L));
}

QRational schur(const Partition& lambda, SpecEvaluator& spec) { return skew_schur(lambda, Partition(), spec); }

QRational skew_schur_dual(const Partition& lambda, const Partition& mu, SpecEvaluator& spec) {
  return jacobi_trudi<QRational>(lambda.conjugate(), mu.conjugate(), [&](int k) { return spec.e(k); },
                                 QRational(), QRational(1L));
}

QRational schur_hook(const Partition& lambda) {
  QRational r = vpow(lambda.kappa() / 2);
  for (int h : lambda.hooks()) r *= inv_bracket(h);
  return r;
}

QRational skew_schur_tableaux(const Partition& lambda, const Partition& mu,
                              const std::vector<QRational>& variables) {
  if (!lambda.contains(mu)) return QRational();
  // strip off the cells holding the largest entry: lambda/nu is a horizontal strip
  std::function<QRational(const Partition&, std::size_t)> go = [&](const Partition& shape,
                                                                    std::size_t count) -> QRational {
    if (shape == mu) return QRational(1L);
    if (count == 0) return QRational();
    const QRational& x = variables[count - 1];
    QRational total;
    std::vector<int> parts = shape.parts();
    std::vector<int> nu(parts.size());
    std::function<void(std::size_t)> choose = [&](std::size_t i) {
      if (i == parts.size()) {
        std::vector<int> trimmed;
        for (int p : nu)
          if (p > 0) trimmed.push_back(p);
        Partition inner(trimmed);
        if (!inner.contains(mu)) return;
        total += go(inner, count - 1) * x.pow(shape.weight() - inner.weight());
        return;
      }
      const int lo = std::max(i + 1 < parts.size() ? parts[i + 1] : 0, mu.part(static_cast<int>(i) + 1));
      for (int p = lo; p <= parts[i]; ++p) {
        nu[i] = p;
        choose(i + 1);
      }
    };
    choose(0);
    return total;
  };
  return go(lambda, variables.size());
}

std::vector<std::string> time_variables(int m) {
  std::vector<std::string> names;
  for (int k = 1; k <= m; ++k) names.push_back("t" + std::to_string(k));
  return names;
}

ContextPtr times_context(int m, int cap) {
  std::vector<int> weights;
  for (int k = 1; k <= m; ++k) weights.push_back(k);
  return ContextBuilder().group(time_variables(m), cap, weights).build();
}

namespace {

// h_k in the times: k h_k = sum_j j t_j h_{k-j}.
std::vector<MultiSeries> complete_in_times(const ContextPtr& ctx, int kmax) {
  std::vector<MultiSeries> h;
  h.push_back(MultiSeries::constant(ctx, QRational(1L)));
  for (int k = 1; k <= kmax; ++k) {
    MultiSeries acc(ctx);
    for (int j = 1; j <= k; ++j) {
      const std::string name = "t" + std::to_string(j);
      if (!ctx->has(name)) continue;
      acc += MultiSeries::variable(ctx, name) * h[static_cast<std::size_t>(k - j)] * QRational(static_cast<long>(j));
    }
    h.push_back(acc * QRational(Rational(1, k)));
  }
  return h;
}

std::vector<MultiSeries> complete_in_variables(const ContextPtr& ctx, const std::vector<std::string>& names,
                                               int kmax) {
  std::vector<MultiSeries> h(static_cast<std::size_t>(kmax) + 1, MultiSeries(ctx));
  h[0] = MultiSeries::constant(ctx, QRational(1L));
  for (const auto& name : names) {
    MultiSeries x = MultiSeries::variable(ctx, name);
    for (std::size_t j = 1; j < h.size(); ++j) h[j] += x * h[j - 1];
  }
  return h;
}

MultiSeries jt_series(const Partition& lambda, const Partition& mu, const ContextPtr& ctx,
                      const std::vector<MultiSeries>& h) {
  MultiSeries zero(ctx);
  return jacobi_trudi<MultiSeries>(
      lambda, mu, [&](int k) { return k < 0 ? zero : h[static_cast<std::size_t>(k)]; }, zero,
      MultiSeries::constant(ctx, QRational(1L)));
}

}  // namespace

MultiSeries schur_in_times(const Partition& lambda, const Partition& mu, const ContextPtr& ctx) {
  const Partition lt = lambda.conjugate();
  if (lt.length() >= lambda.length()) return jt_series(lambda, mu, ctx, complete_in_times(ctx, lambda.weight()));
  // the e-determinant is smaller; e_k(t) = (-1)^k h_k(-t)
  std::vector<MultiSeries> e = complete_in_times(ctx, lambda.weight());
  std::vector<std::size_t> times;
  for (int j = 1; j <= lambda.weight(); ++j)
    if (ctx->has("t" + std::to_string(j))) times.push_back(ctx->index_of("t" + std::to_string(j)));
  for (std::size_t k = 0; k < e.size(); ++k)
    e[k] = e[k].map_coefficients([k, &times](const Exponents& x, const QRational& c) {
      int total = static_cast<int>(k);
      for (std::size_t i : times) total += x[i];
      return total % 2 ? -c : c;
    });
  return jt_series(lt, mu.conjugate(), ctx, e);
}

MultiSeries schur_in_variables(const Partition& lambda, const Partition& mu, const ContextPtr& ctx,
                               const std::vector<std::string>& names) {
  return jt_series(lambda, mu, ctx, complete_in_variables(ctx, names, lambda.weight()));
}

MultiSeries FormalScale::power(int d) const {
  Exponents e(ctx->size(), 0);
  e[ctx->index_of(variable)] = d;
  return MultiSeries::monomial(ctx, e, coefficient.pow(d));
}

QRational supersymmetric_skew(const Partition& lambda, const Partition& mu, SpecEvaluator& x,
                              SpecEvaluator& y) {
  QRational total;
  const Partition mut = mu.conjugate();
  for (const auto& nu : subpartitions(lambda)) {
    if (!nu.contains(mu)) continue;
    QRational b = skew_schur(nu.conjugate(), mut, y);
    if (b.is_zero()) continue;
    total += skew_schur(lambda, nu, x) * b;
  }
  return total;
}

MultiSeries supersymmetric_skew(const Partition& lambda, const Partition& mu, SpecEvaluator& x,
                                SpecEvaluator& y, const FormalScale& y_scale) {
  MultiSeries total(y_scale.ctx);
  const Partition mut = mu.conjugate();
  for (const auto& nu : subpartitions(lambda)) {
    if (!nu.contains(mu)) continue;
    QRational b = skew_schur(nu.conjugate(), mut, y);
    if (b.is_zero()) continue;
    total += y_scale.power(nu.weight() - mu.weight()) * (skew_schur(lambda, nu, x) * b);
  }
  return total;
}

std::string to_string(CauchyIdentity id) {
  switch (id) {
    case CauchyIdentity::plain: return "plain";
    case CauchyIdentity::dual: return "dual";
    case CauchyIdentity::skew: return "skew";
    case CauchyIdentity::skew_dual: return "skew-dual";
  }
  return "";
}

CauchyIdentity parse_cauchy_identity(const std::string& s) {
  if (s == "plain") return CauchyIdentity::plain;
  if (s == "dual") return CauchyIdentity::dual;
  if (s == "skew") return CauchyIdentity::skew;
  if (s == "skew-dual" || s == "skew_dual") return CauchyIdentity::skew_dual;
  throw ParseError("unknown Cauchy identity '" + s + "'");
}

Report verify_cauchy(const CauchyOptions& o) {
  if (o.degree < 0) throw InvariantError("negative Cauchy degree");
  const bool dual = o.identity == CauchyIdentity::dual || o.identity == CauchyIdentity::skew_dual;
  const bool skew = o.identity == CauchyIdentity::skew || o.identity == CauchyIdentity::skew_dual;
  const Partition mu = skew ? o.mu : Partition();
  const Partition nu = skew ? o.nu : Partition();
  const Partition nut = nu.conjugate();

  ContextPtr ctx = ContextBuilder().variable("Q", o.degree).build();
  FormalScale Q{ctx, "Q", o.scale};
  SpecEvaluator x(o.x), y(o.y);

  MultiSeries lhs(ctx);
  for_each_partition(o.degree, [&](const Partition& lambda) {
    QRational a = skew_schur(lambda, mu, x);
    if (a.is_zero()) return;
    QRational b = dual ? skew_schur(lambda.conjugate(), nut, y) : skew_schur(lambda, nu, y);
    if (b.is_zero()) return;
    lhs += Q.power(lambda.weight()) * (a * b);
  });

  MultiSeries exponent(ctx);
  for (int d = 1; d <= o.degree; ++d) {
    QRational c = x.power_sum(d) * y.power_sum(d) * QRational(Rational(1, d));
    if (dual && d % 2 == 0) c = -c;
    exponent += Q.power(d) * c;
  }
  MultiSeries rhs = exponent.exp();
  if (skew) {
    // finite correction: sum over tau inside mu and nu
    MultiSeries correction(ctx);
    for (const auto& tau : subpartitions(intersection(mu, nu))) {
      QRational a = skew_schur(nu, tau, x);
      QRational b = dual ? skew_schur(mu.conjugate(), tau.conjugate(), y) : skew_schur(mu, tau, y);
      if (a.is_zero() || b.is_zero()) continue;
      correction += Q.power(mu.weight() + nu.weight() - tau.weight()) * (a * b);
    }
    rhs *= correction;
  }

  Report report;
  report.name = "cauchy " + to_string(o.identity);
  for (int d = 0; d <= o.degree; ++d) {
    const QRational l = lhs.coefficient(Exponents{d});
    const QRational r = rhs.coefficient(Exponents{d});
    report.record(l == r, "Q^" + std::to_string(d) + ": " + l.to_string() + " != " + r.to_string());
  }
  return report;
}

Report verify_cauchy_suite(int degree) {
  Report report;
  report.name = "cauchy";
  const Spec two_a = Spec::finite({{Rational(1), 1}, {Rational(2), -1}});
  const Spec two_b = Spec::finite({{Rational(1), 0}, {Rational(-1, 3), 2}});
  const std::vector<std::pair<Spec, Spec>> pairs{{two_a, two_b},
                                                 {two_a, Spec::rho()},
                                                 {Spec::rho(), Spec::rho()},
                                                 {Spec::shifted(Partition{1}), Spec::rho()},
                                                 {two_b, Spec::shifted(Partition{2, 1})}};
  const std::vector<std::pair<Partition, Partition>> shapes{
      {Partition{1}, Partition()}, {Partition(), Partition{1}}, {Partition{1}, Partition{1}},
      {Partition{2}, Partition{1, 1}}, {Partition{2, 1}, Partition{1}}};
  const std::vector<QRational> scales{QRational(1L), QRational(Rational(-1, 2))};
  for (CauchyIdentity id : {CauchyIdentity::plain, CauchyIdentity::dual, CauchyIdentity::skew,
                            CauchyIdentity::skew_dual}) {
    const bool skew = id == CauchyIdentity::skew || id == CauchyIdentity::skew_dual;
    for (std::size_t p = 0; p < pairs.size(); ++p)
      for (std::size_t c = 0; c < scales.size(); ++c)
        for (std::size_t s = 0; s < (skew ? shapes.size() : 1); ++s) {
          CauchyOptions o;
          o.identity = id;
          o.x = pairs[p].first;
          o.y = pairs[p].second;
          o.scale = scales[c];
          o.degree = degree;
          if (skew) {
            o.mu = shapes[s].first;
            o.nu = shapes[s].second;
          }
          Report r = verify_cauchy(o);
          r.name += " specs#" + std::to_string(p) + " scale#" + std::to_string(c) +
                    (skew ? " mu=" + o.mu.to_string() + " nu=" + o.nu.to_string() : "");
          report.merge(r);
        }
  }
  return report;
}

}  // namespace qv
