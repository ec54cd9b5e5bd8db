#include <doctest.h>

#include <functional>
#include <set>

#include "qvertex/errors.hpp"
#include "qvertex/json_io.hpp"
#include "qvertex/partition.hpp"

using namespace qv;

namespace {

// p(n) by Euler's pentagonal recurrence.
std::vector<long> partition_numbers(int n_max) {
  std::vector<long> p(static_cast<std::size_t>(n_max) + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= n_max; ++n)
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const long sign = k % 2 ? 1 : -1;
      p[static_cast<std::size_t>(n)] += sign * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) p[static_cast<std::size_t>(n)] += sign * p[static_cast<std::size_t>(n - g2)];
    }
  return p;
}

// Standard Young tableaux by removing corners.
long count_syt(const Partition& lambda) {
  if (lambda.weight() == 0) return 1;
  long total = 0;
  std::vector<int> parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i + 1 < parts.size() && parts[i + 1] == parts[i]) continue;
    std::vector<int> smaller = parts;
    if (--smaller[i] == 0) smaller.pop_back();
    total += count_syt(Partition(smaller));
  }
  return total;
}

}  // namespace

TEST_CASE("partition counts") {
  const auto p = partition_numbers(15);
  for (int n = 0; n <= 15; ++n) {
    const auto all = partitions_of(n);
    CHECK(static_cast<long>(all.size()) == p[static_cast<std::size_t>(n)]);
    CHECK(std::set<Partition>(all.begin(), all.end()).size() == all.size());
  }
  CHECK(partitions_of(4).front() == Partition{4});
  long total = 0;
  for (int n = 0; n <= 6; ++n) total += p[static_cast<std::size_t>(n)];
  CHECK(static_cast<long>(enumerate_partitions(6).size()) == total);
}

TEST_CASE("conjugation, kappa and hooks") {
  for (const auto& l : enumerate_partitions(8)) {
    CHECK(l.conjugate().conjugate() == l);
    CHECK(l.conjugate().weight() == l.weight());
    CHECK(l.kappa() % 2 == 0);
    CHECK(l.conjugate().kappa() == -l.kappa());
    // hook length formula
    long n_fact = 1;
    for (int i = 2; i <= l.weight(); ++i) n_fact *= i;
    long hooks = 1;
    for (int h : l.hooks()) hooks *= h;
    CHECK(n_fact / hooks == count_syt(l));
  }
  CHECK(Partition{3, 1}.kappa() == 3 * 2 + 1 * (1 - 4 + 1));
  CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
}

TEST_CASE("containment and subpartitions") {
  const Partition l{3, 2};
  const auto subs = subpartitions(l);
  // shapes inside a 2-row diagram: 0 <= b <= a, a <= 3, b <= 2
  CHECK(subs.size() == 9);
  for (const auto& s : subs) CHECK(l.contains(s));
  CHECK(intersection(Partition{3, 1}, Partition{2, 2, 1}) == Partition{2, 1});
  CHECK_FALSE(Partition{2}.contains(Partition{1, 1}));
}

TEST_CASE("parsing") {
  CHECK(parse_partition("[3,1]") == Partition{3, 1});
  CHECK(parse_partition("3,1") == Partition{3, 1});
  CHECK(parse_partition("[]").empty());
  CHECK(parse_partition("").empty());
  CHECK_THROWS_AS(parse_partition("[1,3]"), Error);
  CHECK_THROWS_AS(parse_partition("[a]"), Error);
  CHECK(to_json(Partition{2, 2}).dump() == "[2,2]");
  CHECK(Partition::column(3) == Partition{1, 1, 1});
  CHECK(Partition::row(0).empty());
}
