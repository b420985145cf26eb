#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace catpart {

/// Default upper bound on the number of structures any enumeration may produce.
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// A weakly decreasing sequence of positive integers with at least one part.
///
/// Indexing through operator() is 1-based: `mu(1)` is the largest part. The
/// partition doubles as a decreasing function [n] -> [largest part].
class Partition {
 public:
  explicit Partition(std::vector<int> parts);

  std::size_t size() const noexcept { return parts_.size(); }
  int operator()(std::size_t i) const;
  int first() const noexcept { return parts_.front(); }
  int last() const noexcept { return parts_.back(); }
  const std::vector<int>& parts() const noexcept { return parts_; }

  /// Comma-separated, largest part first: "3,1,1".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// A partition together with the bound k it lives under (an element of P^{n,k}).
/// The bound matters: tau is defined relative to it.
class BoundedPartition {
 public:
  BoundedPartition(Partition partition, int bound);
  BoundedPartition(std::vector<int> parts, int bound);

  const Partition& partition() const noexcept { return partition_; }
  const std::vector<int>& parts() const noexcept { return partition_.parts(); }
  int bound() const noexcept { return bound_; }
  std::size_t size() const noexcept { return partition_.size(); }
  int operator()(std::size_t i) const { return partition_(i); }
  int first() const noexcept { return partition_.first(); }
  int last() const noexcept { return partition_.last(); }
  std::string to_string() const { return partition_.to_string(); }

  friend bool operator==(const BoundedPartition&, const BoundedPartition&) = default;
  friend auto operator<=>(const BoundedPartition&, const BoundedPartition&) = default;

 private:
  Partition partition_;
  int bound_;
};

/// An element of P^k_sq: k parts, largest part k, smallest part 1.
class SquarePartition {
 public:
  explicit SquarePartition(BoundedPartition value);
  explicit SquarePartition(std::vector<int> parts);

  int k() const noexcept { return value_.bound(); }
  const BoundedPartition& value() const noexcept { return value_; }
  const std::vector<int>& parts() const noexcept { return value_.parts(); }
  int operator()(std::size_t i) const { return value_(i); }
  std::string to_string() const { return value_.to_string(); }

  friend bool operator==(const SquarePartition&, const SquarePartition&) = default;
  friend auto operator<=>(const SquarePartition&, const SquarePartition&) = default;

 private:
  BoundedPartition value_;
};

/// Lexicographically decreasing order on part sequences; the canonical
/// order used for every enumeration and rendered family.
struct CanonicalOrder {
  bool operator()(const BoundedPartition& a, const BoundedPartition& b) const {
    return a.parts() > b.parts();
  }
};

/// i -> m + 1 - i on [m].
int gamma(int m, int i);

/// (mu_1, ..., mu_n) -> (k+1-mu_n, ..., k+1-mu_1) where k is the bound.
BoundedPartition tau(const BoundedPartition& mu);
SquarePartition tau(const SquarePartition& lambda);

bool is_square(const BoundedPartition& mu);
bool is_self_dual(const SquarePartition& lambda);

/// All of P^{n,k}, lexicographically decreasing.
std::vector<BoundedPartition> enumerate_pnk(int n, int k,
                                            std::uint64_t cap = kDefaultEnumerationCap);

/// All of P^k_sq, lexicographically decreasing.
std::vector<SquarePartition> enumerate_square(int k, std::uint64_t cap = kDefaultEnumerationCap);

/// Parses "7,6,5,3" (whitespace around parts tolerated).
Partition parse_partition(std::string_view csv);

}  // namespace catpart
