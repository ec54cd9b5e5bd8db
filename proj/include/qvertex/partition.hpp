#pragma once

#include <compare>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace qv {

/// Integer partition stored as its weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws InvariantError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Row partition (k); empty for k = 0.
  static Partition row(int k);
  /// Column partition (1^k).
  static Partition column(int k);

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  /// Second Casimir value: sum lambda_i (lambda_i - 2i + 1). Always even.
  int kappa() const;
  /// lambda_i with 1-based i; 0 beyond the length.
  int part(int i) const { return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0; }

  Partition conjugate() const;
  /// Hook lengths of all cells, row by row.
  std::vector<int> hooks() const;
  /// lambda contains mu (lambda_i >= mu_i for all i).
  bool contains(const Partition& mu) const;

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

struct PartitionStatistics {
  int length;
  int weight;
  int kappa;
  friend bool operator==(const PartitionStatistics&, const PartitionStatistics&) = default;
};

PartitionStatistics statistics(const Partition& p);

/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);
/// All partitions with weight <= weight_max, grouped by increasing weight.
std::vector<Partition> enumerate_partitions(int weight_max);
/// Visits every partition with weight <= weight_max, grouped by weight.
void for_each_partition(int weight_max, const std::function<void(const Partition&)>& visit);
/// All nu with nu contained in lambda (including empty and lambda itself).
std::vector<Partition> subpartitions(const Partition& lambda);
/// Componentwise minimum: the largest partition contained in both.
Partition intersection(const Partition& a, const Partition& b);

}  // namespace qv
