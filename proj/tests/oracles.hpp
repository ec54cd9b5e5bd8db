#pragma once

// Independent reference computations used only by the tests.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <vector>

#include "qvertex/partition.hpp"
#include "qvertex/qrational.hpp"

namespace oracle {

using qv::Partition;
using qv::Rational;

/// Number of plane partitions of each volume 0..max_volume, by direct enumeration
/// of stacked rows (each row a partition dominated entrywise by the row above).
inline std::vector<long> plane_partition_counts(int max_volume) {
  std::vector<long> counts(static_cast<std::size_t>(max_volume) + 1, 0);
  std::function<void(const std::vector<int>&, int)> rows = [&](const std::vector<int>& above, int used) {
    ++counts[static_cast<std::size_t>(used)];
    std::vector<int> r;
    // every nonempty prefix r is one candidate for the next row
    std::function<void(std::size_t, int)> extend = [&](std::size_t i, int total) {
      if (i >= above.size()) return;
      const int cap = r.empty() ? above[i] : std::min(r.back(), above[i]);
      for (int a = 1; a <= cap && used + total + a <= max_volume; ++a) {
        r.push_back(a);
        rows(r, used + total + a);
        extend(i + 1, total + a);
        r.pop_back();
      }
    };
    extend(0, 0);
  };
  rows(std::vector<int>(static_cast<std::size_t>(max_volume), max_volume), 0);
  return counts;
}

inline Rational eval(const qv::LaurentPoly& p, const Rational& v) {
  Rational total = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational power = 1;
    const Rational base = e >= 0 ? v : Rational(1) / v;
    for (int i = 0; i < std::abs(e); ++i) power *= base;
    total += c * power;
  }
  return total;
}

/// Exact value at a rational point v.
inline Rational eval(const qv::QRational& r, const Rational& v) {
  auto [n, d] = r.canonical();
  return eval(n, v) / eval(d, v);
}

/// s_{lambda/mu}(x_1..x_M) by adding one variable at a time: lambda/nu must be
/// a horizontal strip, weight x^{|lambda/nu|}.
inline long double skew_schur_numeric(const Partition& lambda, const Partition& mu,
                                      const std::vector<long double>& x) {
  if (!lambda.contains(mu)) return 0;
  const std::vector<Partition> shapes = qv::subpartitions(lambda);
  std::map<Partition, long double> value;
  for (const auto& s : shapes) value[s] = s == mu ? 1 : 0;
  for (long double xi : x) {
    std::map<Partition, long double> next;
    for (const auto& outer : shapes) {
      long double total = 0;
      for (const auto& inner : shapes) {
        if (!outer.contains(inner) || value[inner] == 0) continue;
        // horizontal strip: outer_{i+1} <= inner_i <= outer_i
        bool strip = true;
        for (int i = 1; i <= outer.length(); ++i)
          if (inner.part(i) < outer.part(i + 1)) strip = false;
        if (!strip) continue;
        total += value[inner] * std::pow(xi, outer.weight() - inner.weight());
      }
      next[outer] = total;
    }
    value.swap(next);
  }
  return value[lambda];
}

/// The first M variables of q^{beta+rho} at a numeric v > 1: v^{2 beta_i - 2i + 1}.
inline std::vector<long double> shifted_point(const Partition& beta, long double v, int M = 48) {
  std::vector<long double> x;
  for (int i = 1; i <= M; ++i) x.push_back(std::pow(v, 2 * beta.part(i) - 2 * i + 1));
  return x;
}

inline long double to_ld(const Rational& c) { return static_cast<long double>(c.get_d()); }

}  // namespace oracle
