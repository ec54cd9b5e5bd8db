#include "qvertex/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qvertex/errors.hpp"

namespace qv {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvariantError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvariantError("partition parts must be weakly decreasing");
  }
}

Partition Partition::row(int k) {
  if (k < 0) throw InvariantError("negative row length");
  return k == 0 ? Partition() : Partition(std::vector<int>{k});
}

Partition Partition::column(int k) {
  if (k < 0) throw InvariantError("negative column length");
  return Partition(std::vector<int>(static_cast<std::size_t>(k), 1));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::kappa() const {
  int k = 0;
  for (int i = 1; i <= length(); ++i) k += part(i) * (part(i) - 2 * i + 1);
  return k;
}

Partition Partition::conjugate() const {
  std::vector<int> cols;
  if (!parts_.empty()) {
    cols.assign(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(cols));
}

std::vector<int> Partition::hooks() const {
  Partition c = conjugate();
  std::vector<int> h;
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= part(i); ++j) h.push_back(part(i) - i + c.part(j) - j + 1);
  return h;
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (part(i) < mu.part(i)) return false;
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << "]";
  return os.str();
}

PartitionStatistics statistics(const Partition& p) { return {p.length(), p.weight(), p.kappa()}; }

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

void sub_rec(const Partition& lambda, int i, int bound, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (i > lambda.length()) {
    out.emplace_back(prefix);
    return;
  }
  int hi = std::min(lambda.part(i), bound);
  // zero ends the partition
  out.emplace_back(prefix);
  for (int p = 1; p <= hi; ++p) {
    prefix.push_back(p);
    sub_rec(lambda, i + 1, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw InvariantError("negative partition weight");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

std::vector<Partition> enumerate_partitions(int weight_max) {
  std::vector<Partition> out;
  for_each_partition(weight_max, [&out](const Partition& p) { out.push_back(p); });
  return out;
}

void for_each_partition(int weight_max, const std::function<void(const Partition&)>& visit) {
  if (weight_max < 0) throw InvariantError("negative weight bound");
  for (int n = 0; n <= weight_max; ++n)
    for (const auto& p : partitions_of(n)) visit(p);
}

std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  if (lambda.empty()) return {Partition()};
  sub_rec(lambda, 1, lambda.part(1), prefix, out);
  return out;
}

Partition intersection(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  for (int i = 1; i <= std::min(a.length(), b.length()); ++i) parts.push_back(std::min(a.part(i), b.part(i)));
  return Partition(std::move(parts));
}

}  // namespace qv
