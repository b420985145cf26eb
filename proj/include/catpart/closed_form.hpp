#pragma once

#include "catpart/partition.hpp"

#include <vector>

namespace catpart {

/// Locates the embedded k x k square of a partition mu in P^ell.
///
/// b and b+k-1 are the smallest and largest fixed points of mu∘mu, and
/// core(i) = mu(b+i-1) - b + 1 for i in [k] is the square partition mu reduces to.
struct SquareCoreWitness {
  int b;
  int k;
  SquarePartition core;
};

/// Fixed point of the increasing sequence j_1 = 1, j_{n+1} = mu(mu(j_n)).
/// Requires mu.size() == mu.bound(). Never fails for valid input.
SquareCoreWitness find_square_core(const BoundedPartition& mu);

/// Literal check of the ordering conditions for a candidate (b, k):
///   mu(b) = b+k-1 and mu(b+k-1) = b;  mu(mu(i)) > i for i < b;
///   mu(mu(i)) < i for b+k-1 < i <= ell.
/// Returns false (rather than throwing) when b or b+k-1 falls outside [ell].
bool satisfies_square_conditions(const BoundedPartition& mu, int b, int k);

/// True iff mu belongs to P^ell(lambda): core extraction followed by
/// comparison against {lambda, tau(lambda)}.
bool member_square(const BoundedPartition& mu, const SquarePartition& lambda);

/// Collapses the k x k square of mu to a single fixed point; the result lies
/// in P^{ell-k+1}((1)).
BoundedPartition theta(const BoundedPartition& mu);

/// Every mu in P^ell(lambda) with theta(mu) = nu, where ell = nu.size() + k - 1.
/// One element when lambda is self-dual, two otherwise (canonical order).
std::vector<BoundedPartition> theta_fiber(const BoundedPartition& nu, const SquarePartition& lambda);

/// Squeezes the ell x (ell+m-1) index rectangle onto [ell]:
/// s if s < r; r if r <= s <= r+m-1; s-m+1 otherwise.
int compress_t(int r, int s, int ell, int m);

/// mu~(i) = t(i, mu(i)). Not a partition in general.
struct CompressedMap {
  std::vector<int> values;  // values[i-1] = mu~(i)
  int m;

  int operator()(std::size_t i) const { return values.at(i - 1); }
  std::size_t size() const noexcept { return values.size(); }
};

/// Requires mu.bound() == mu.size() + m - 1.
CompressedMap mu_tilde(const BoundedPartition& mu, int m);

/// mu~(i) > i implies mu~(mu~(i)) > i, for every i.
bool satisfies_tilde_condition_up(const CompressedMap& mt);
/// mu~(i) < i implies mu~(mu~(i)) < i, for every i.
bool satisfies_tilde_condition_down(const CompressedMap& mt);

/// True iff mu belongs to P^ell(Omega_m); both tilde conditions must hold.
bool member_omega(const BoundedPartition& mu, int m);

}  // namespace catpart
