#pragma once

#include <cstddef>
#include <vector>

#include "qvertex/errors.hpp"

namespace qv {

template <class T>
T subset_determinant(const std::vector<std::vector<T>>& m, const T& zero, const T& one) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  if (n > 20) throw BlowUpError("determinant too large for subset expansion");
  for (const auto& row : m)
    if (row.size() != n) throw InvariantError("determinant of a non-square matrix");
  // partial[S]: signed sum over bijections of the first |S| rows onto the column set S
  std::vector<T> partial(std::size_t{1} << n, zero);
  std::vector<bool> live(std::size_t{1} << n, false);
  partial[0] = one;
  live[0] = true;
  for (std::size_t s = 0; s + 1 < (std::size_t{1} << n); ++s) {
    if (!live[s]) continue;
    const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(s));
    int above = 0;  // columns of s greater than the candidate column
    for (std::size_t j = n; j-- > 0;) {
      const std::size_t bit = std::size_t{1} << j;
      if (s & bit) {
        ++above;
        continue;
      }
      if (m[row][j] == zero) continue;
      T term = partial[s] * m[row][j];
      if (above % 2) term = -term;
      const std::size_t t = s | bit;
      if (live[t]) partial[t] += term;
      else partial[t] = std::move(term);
      live[t] = true;
    }
  }
  return partial.back();
}

}  // namespace qv
