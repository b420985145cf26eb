#pragma once

#include "catpart/partition.hpp"

#include <cstdint>
#include <set>
#include <variant>
#include <vector>

namespace catpart {

/// A deduplicated set of partitions sharing part count ell and bound,
/// iterated in canonical (lexicographically decreasing) order.
class PartitionSet {
 public:
  using container = std::set<BoundedPartition, CanonicalOrder>;

  PartitionSet(int ell, int bound);

  /// Returns false when mu was already present.
  bool insert(BoundedPartition mu);
  bool contains(const BoundedPartition& mu) const;

  int ell() const noexcept { return ell_; }
  int bound() const noexcept { return bound_; }
  std::size_t size() const noexcept { return elements_.size(); }
  container::const_iterator begin() const { return elements_.begin(); }
  container::const_iterator end() const { return elements_.end(); }
  std::vector<BoundedPartition> to_vector() const { return {begin(), end()}; }

  friend bool operator==(const PartitionSet&, const PartitionSet&) = default;

 private:
  int ell_;
  int bound_;
  container elements_;
};

/// P^ell(lambda) for a square core lambda in P^k_sq, ell >= k.
struct SquareCoreFamily {
  SquarePartition lambda;
  int ell;
};

/// P^ell(Omega_m): grown from the one-part partitions (1), ..., (m).
struct OmegaFamily {
  int m;
  int ell;
};

using FamilyDescriptor = std::variant<SquareCoreFamily, OmegaFamily>;

/// Throws invalid_argument when ell < k (square) or m, ell < 1 (omega).
void validate(const FamilyDescriptor& family);

/// ell for square families, ell + m - 1 for omega families.
int family_bound(const FamilyDescriptor& family);

/// (nu_1, ..., nu_n) -> (nu_1, ..., nu_n, j); the result's bound is nu.bound() + 1,
/// which is how both recursions move from one level to the next.
BoundedPartition augment(const BoundedPartition& nu, int j);

/// Level-by-level generation: base {lambda, tau_k(lambda)}, then augment every
/// member in every legal way and close under tau_ell. Throws cap_exceeded if any
/// level grows beyond `cap` members.
PartitionSet grow_square_family(const SquarePartition& lambda, int ell,
                                std::uint64_t cap = kDefaultEnumerationCap);

/// Same recursion starting from Omega_m inside P^{ell, ell+m-1}.
PartitionSet grow_omega_family(int m, int ell, std::uint64_t cap = kDefaultEnumerationCap);

PartitionSet generate(const FamilyDescriptor& family, std::uint64_t cap = kDefaultEnumerationCap);

/// One square core per tau-orbit of P^k_sq: the lexicographically larger of {lambda, tau(lambda)}.
std::vector<SquarePartition> orbit_representatives(int k, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace catpart
