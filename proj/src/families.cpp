#include "catpart/families.hpp"

#include "catpart/error.hpp"

#include <string>

namespace catpart {
namespace {

void check_level(const PartitionSet& level, std::uint64_t cap) {
  if (level.size() > cap) {
    throw cap_exceeded("family level with " + std::to_string(level.ell()) + " parts holds " +
                       std::to_string(level.size()) + " partitions, over the enumeration cap of " +
                       std::to_string(cap));
  }
}

// P^{n+1}_d from P^n, then the tau closure at the new bound.
PartitionSet next_level(const PartitionSet& level, std::uint64_t cap) {
  PartitionSet next(level.ell() + 1, level.bound() + 1);
  for (const auto& nu : level) {
    for (int j = 1; j <= nu.last(); ++j) {
      auto mu = augment(nu, j);
      auto dual = tau(mu);
      next.insert(std::move(mu));
      next.insert(std::move(dual));
    }
    check_level(next, cap);
  }
  return next;
}

}  // namespace

PartitionSet::PartitionSet(int ell, int bound) : ell_(ell), bound_(bound) {
  if (ell < 1 || bound < 1) throw invalid_argument("PartitionSet: ell and bound must be positive");
}

bool PartitionSet::insert(BoundedPartition mu) {
  if (static_cast<int>(mu.size()) != ell_ || mu.bound() != bound_) {
    throw invalid_argument("PartitionSet member " + mu.to_string() + " does not have " +
                           std::to_string(ell_) + " parts and bound " + std::to_string(bound_));
  }
  return elements_.insert(std::move(mu)).second;
}

bool PartitionSet::contains(const BoundedPartition& mu) const {
  return mu.bound() == bound_ && elements_.contains(mu);
}

void validate(const FamilyDescriptor& family) {
  if (const auto* sq = std::get_if<SquareCoreFamily>(&family)) {
    if (sq->ell < sq->lambda.k()) {
      throw invalid_argument("square family needs ell >= k, got ell=" + std::to_string(sq->ell) +
                             " k=" + std::to_string(sq->lambda.k()));
    }
  } else {
    const auto& om = std::get<OmegaFamily>(family);
    if (om.m < 1 || om.ell < 1) throw invalid_argument("omega family needs m >= 1 and ell >= 1");
  }
}

int family_bound(const FamilyDescriptor& family) {
  if (const auto* sq = std::get_if<SquareCoreFamily>(&family)) return sq->ell;
  const auto& om = std::get<OmegaFamily>(family);
  return om.ell + om.m - 1;
}

BoundedPartition augment(const BoundedPartition& nu, int j) {
  if (j < 1 || j > nu.last()) {
    throw invalid_argument("augment: part " + std::to_string(j) + " must lie in [1, " +
                           std::to_string(nu.last()) + "]");
  }
  auto parts = nu.parts();
  parts.push_back(j);
  return {std::move(parts), nu.bound() + 1};
}

PartitionSet grow_square_family(const SquarePartition& lambda, int ell, std::uint64_t cap) {
  validate(SquareCoreFamily{lambda, ell});
  PartitionSet level(lambda.k(), lambda.k());
  level.insert(lambda.value());
  level.insert(tau(lambda.value()));
  while (level.ell() < ell) level = next_level(level, cap);
  return level;
}

PartitionSet grow_omega_family(int m, int ell, std::uint64_t cap) {
  validate(OmegaFamily{m, ell});
  PartitionSet level(1, m);
  for (int j = 1; j <= m; ++j) level.insert(BoundedPartition({j}, m));
  check_level(level, cap);
  while (level.ell() < ell) level = next_level(level, cap);
  return level;
}

PartitionSet generate(const FamilyDescriptor& family, std::uint64_t cap) {
  if (const auto* sq = std::get_if<SquareCoreFamily>(&family)) {
    return grow_square_family(sq->lambda, sq->ell, cap);
  }
  const auto& om = std::get<OmegaFamily>(family);
  return grow_omega_family(om.m, om.ell, cap);
}

std::vector<SquarePartition> orbit_representatives(int k, std::uint64_t cap) {
  std::vector<SquarePartition> out;
  for (auto& lambda : enumerate_square(k, cap)) {
    if (lambda.parts() >= tau(lambda).parts()) out.push_back(std::move(lambda));
  }
  return out;
}

}  // namespace catpart
