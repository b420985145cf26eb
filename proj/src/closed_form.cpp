#include "catpart/closed_form.hpp"

#include "catpart/error.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace catpart {
namespace {

void require_square_shape(const BoundedPartition& mu, const char* what) {
  if (static_cast<int>(mu.size()) != mu.bound()) {
    throw invalid_argument(std::string(what) + ": expected an element of P^ell (parts == bound), got " +
                           mu.to_string() + " with bound " + std::to_string(mu.bound()));
  }
}

void require_omega_shape(const BoundedPartition& mu, int m, const char* what) {
  if (m < 1) throw invalid_argument(std::string(what) + ": m must be positive");
  if (mu.bound() != static_cast<int>(mu.size()) + m - 1) {
    throw invalid_argument(std::string(what) + ": bound " + std::to_string(mu.bound()) +
                           " does not equal ell + m - 1 = " +
                           std::to_string(static_cast<int>(mu.size()) + m - 1));
  }
}

}  // namespace

SquareCoreWitness find_square_core(const BoundedPartition& mu) {
  require_square_shape(mu, "find_square_core");
  const auto ell = static_cast<int>(mu.size());
  int j = 1;
  for (int step = 0; step <= ell; ++step) {
    const int next = mu(mu(j));
    if (next == j) break;
    j = next;
  }
  if (mu(mu(j)) != j) throw internal_error("find_square_core: mu∘mu did not stabilise on " + mu.to_string());
  const int b = j;
  const int k = mu(b) - b + 1;
  // The characterization ranges b over [ell-k+1]; flag rather than accept anything else.
  if (k < 1 || b > ell - k + 1 || mu(b + k - 1) != b) {
    throw internal_error("find_square_core: inconsistent witness b=" + std::to_string(b) +
                         " k=" + std::to_string(k) + " for " + mu.to_string());
  }
  std::vector<int> core(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) core[i - 1] = mu(b + i - 1) - b + 1;
  SquareCoreWitness witness{b, k, SquarePartition(std::move(core))};
  assert(satisfies_square_conditions(mu, b, k));
  return witness;
}

bool satisfies_square_conditions(const BoundedPartition& mu, int b, int k) {
  require_square_shape(mu, "satisfies_square_conditions");
  const auto ell = static_cast<int>(mu.size());
  const int top = b + k - 1;
  if (b < 1 || k < 1 || top > ell) return false;
  if (mu(b) != top || mu(top) != b) return false;
  for (int i = 1; i < b; ++i) {
    if (mu(mu(i)) <= i) return false;
  }
  for (int i = top + 1; i <= ell; ++i) {
    if (mu(mu(i)) >= i) return false;
  }
  return true;
}

bool member_square(const BoundedPartition& mu, const SquarePartition& lambda) {
  require_square_shape(mu, "member_square");
  if (static_cast<int>(mu.size()) < lambda.k()) {
    throw invalid_argument("member_square: ell=" + std::to_string(mu.size()) + " is below k=" +
                           std::to_string(lambda.k()));
  }
  const auto witness = find_square_core(mu);
  if (witness.k != lambda.k()) return false;
  return witness.core == lambda || witness.core == tau(lambda);
}

BoundedPartition theta(const BoundedPartition& mu) {
  const auto [b, k, core] = find_square_core(mu);
  const auto ell = static_cast<int>(mu.size());
  const int reduced = ell - k + 1;
  std::vector<int> out(static_cast<std::size_t>(reduced));
  for (int i = 1; i <= b; ++i) out[i - 1] = mu(i) - k + 1;
  for (int i = b + 1; i <= reduced; ++i) out[i - 1] = mu(i + k - 1);
  return {std::move(out), reduced};
}

std::vector<BoundedPartition> theta_fiber(const BoundedPartition& nu, const SquarePartition& lambda) {
  const auto witness = find_square_core(nu);
  if (witness.k != 1) {
    throw domain_error("theta_fiber: " + nu.to_string() + " is not in P^ell((1)) (its core has k=" +
                       std::to_string(witness.k) + ")");
  }
  const int b = witness.b;
  const int k = lambda.k();
  const auto reduced = static_cast<int>(nu.size());
  const int ell = reduced + k - 1;

  std::vector<SquarePartition> cores{lambda};
  if (!is_self_dual(lambda)) cores.push_back(tau(lambda));

  std::vector<BoundedPartition> fiber;
  for (const auto& core : cores) {
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(ell));
    for (int i = 1; i < b; ++i) parts.push_back(nu(i) + k - 1);
    for (int i = 1; i <= k; ++i) parts.push_back(core(i) + b - 1);
    for (int i = b + 1; i <= reduced; ++i) parts.push_back(nu(i));
    BoundedPartition mu(std::move(parts), ell);
    if (theta(mu) != nu) {
      throw internal_error("theta_fiber: theta(" + mu.to_string() + ") != " + nu.to_string());
    }
    fiber.push_back(std::move(mu));
  }
  std::sort(fiber.begin(), fiber.end(), CanonicalOrder{});
  return fiber;
}

int compress_t(int r, int s, int ell, int m) {
  if (ell < 1 || m < 1 || r < 1 || r > ell || s < 1 || s > ell + m - 1) {
    throw invalid_argument("compress_t: (" + std::to_string(r) + ", " + std::to_string(s) +
                           ") outside [" + std::to_string(ell) + "] x [" + std::to_string(ell + m - 1) +
                           "]");
  }
  if (s < r) return s;
  if (s <= m + r - 1) return r;
  return s - m + 1;
}

CompressedMap mu_tilde(const BoundedPartition& mu, int m) {
  require_omega_shape(mu, m, "mu_tilde");
  const auto ell = static_cast<int>(mu.size());
  CompressedMap out{std::vector<int>(mu.size()), m};
  for (int i = 1; i <= ell; ++i) out.values[i - 1] = compress_t(i, mu(i), ell, m);
  return out;
}

bool satisfies_tilde_condition_up(const CompressedMap& mt) {
  for (std::size_t i = 1; i <= mt.size(); ++i) {
    const auto v = static_cast<std::size_t>(mt(i));
    if (v > i && static_cast<std::size_t>(mt(v)) <= i) return false;
  }
  return true;
}

bool satisfies_tilde_condition_down(const CompressedMap& mt) {
  for (std::size_t i = 1; i <= mt.size(); ++i) {
    const auto v = static_cast<std::size_t>(mt(i));
    if (v < i && static_cast<std::size_t>(mt(v)) >= i) return false;
  }
  return true;
}

bool member_omega(const BoundedPartition& mu, int m) {
  const auto mt = mu_tilde(mu, m);
  return satisfies_tilde_condition_up(mt) && satisfies_tilde_condition_down(mt);
}

}  // namespace catpart
