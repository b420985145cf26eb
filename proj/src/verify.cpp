#include "catpart/verify.hpp"

#include "catpart/closed_form.hpp"
#include "catpart/counting.hpp"
#include "catpart/error.hpp"
#include "catpart/families.hpp"
#include "catpart/trees.hpp"

#include <json.hpp>

#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace catpart {
namespace {

using counting::ballot;
using counting::binomial;
using counting::catalan;

constexpr const char* kFlipOmegaInequality = "flip-omega-inequality";

std::string show(const BoundedPartition& mu) { return "(" + mu.to_string() + ")/" + std::to_string(mu.bound()); }

// Records checks for one suite; the first failure pins the counterexample.
class Probe {
 public:
  explicit Probe(SuiteResult& result) : result_(result) {}

  bool check(bool ok, const std::function<std::string()>& counterexample) {
    ++result_.examined;
    if (!ok) fail(counterexample());
    return ok;
  }

  void fail(const std::string& counterexample) {
    if (result_.status != SuiteStatus::fail) {
      result_.status = SuiteStatus::fail;
      result_.counterexample = counterexample;
    }
  }

  bool failed() const { return result_.status == SuiteStatus::fail; }

 private:
  SuiteResult& result_;
};

class Harness {
 public:
  explicit Harness(const VerifyOptions& options) : opt_(options) {
    if (opt_.mutation == std::optional<std::string>(kFlipOmegaInequality)) {
      omega_member_ = [](const BoundedPartition& mu, int m) {
        const auto mt = mu_tilde(mu, m);
        for (std::size_t i = 1; i <= mt.size(); ++i) {
          const auto v = static_cast<std::size_t>(mt(i));
          if (v > i && static_cast<std::size_t>(mt(v)) >= i) return false;  // flipped
        }
        return satisfies_tilde_condition_down(mt);
      };
    } else {
      omega_member_ = member_omega;
    }
  }

  VerifyReport run() {
    VerifyReport report;
    report.options = opt_;
    for (const auto& [name, needs_omega, range, body] : suites()) {
      SuiteResult result;
      result.name = name;
      result.range = range;
      if (needs_omega && opt_.max_m == 0) {
        result.status = SuiteStatus::skipped;
        result.detail = "skipped: max_m = 0";
        report.suites.push_back(std::move(result));
        continue;
      }
      result.status = SuiteStatus::pass;
      const auto start = std::chrono::steady_clock::now();
      Probe probe(result);
      try {
        body(probe, result);
      } catch (const Error& e) {
        if (e.code() == Errc::cap_exceeded) throw;
        probe.fail(std::string("exception: ") + e.what());
      }
      result.millis =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      report.suites.push_back(std::move(result));
    }
    return report;
  }

  struct Suite {
    std::string name;
    bool needs_omega;
    std::string range;
    std::function<void(Probe&, SuiteResult&)> body;
  };

  std::vector<Suite> suites() {
    const int P = opt_.max_parts;
    const int M = opt_.max_m;
    const std::string ell_range = "ell<=" + std::to_string(P);
    const std::string omega_range = ell_range + ", m<=" + std::to_string(M);
    using namespace std::placeholders;
    return {
        {"gamma-involution", false, "m<=" + std::to_string(P), [this](Probe& p, SuiteResult&) { gamma_involution(p); }},
        {"tau-involution", false, "n,k<=" + std::to_string(P), [this](Probe& p, SuiteResult&) { tau_involution(p); }},
        {"pnk-cardinality", false, "n,k<=" + std::to_string(P), [this](Probe& p, SuiteResult&) { pnk_cardinality(p); }},
        {"square-cardinality", false, ell_range, [this](Probe& p, SuiteResult&) { square_cardinality(p); }},
        {"square-tau-stability", false, ell_range, [this](Probe& p, SuiteResult&) { square_tau_stability(p); }},
        {"covering-disjointness", false, ell_range, [this](Probe& p, SuiteResult& r) { covering(p, r); }},
        {"omega-cardinality", true, omega_range, [this](Probe& p, SuiteResult&) { omega_cardinality(p); }},
        {"omega-tau-stability", true, omega_range, [this](Probe& p, SuiteResult&) { omega_tau_stability(p); }},
        {"omega-square-coincidence", false, ell_range, [this](Probe& p, SuiteResult&) { omega_square_coincidence(p); }},
        {"witness-uniqueness", false, ell_range, [this](Probe& p, SuiteResult&) { witness_uniqueness(p); }},
        {"witness-tau-symmetry", false, ell_range, [this](Probe& p, SuiteResult&) { witness_tau_symmetry(p); }},
        {"closed-form-square", false, ell_range, [this](Probe& p, SuiteResult&) { closed_form_square(p); }},
        {"closed-form-omega", true, omega_range, [this](Probe& p, SuiteResult&) { closed_form_omega(p); }},
        {"compression-lemma", true, omega_range, [this](Probe& p, SuiteResult&) { compression_lemma(p); }},
        {"condition-swap", true, omega_range, [this](Probe& p, SuiteResult&) { condition_swap(p); }},
        {"m1-equivalence", false, ell_range, [this](Probe& p, SuiteResult&) { m1_equivalence(p); }},
        {"theta-fibers", false, ell_range, [this](Probe& p, SuiteResult&) { theta_fibers(p); }},
        {"pair-bijection", false, ell_range, [this](Probe& p, SuiteResult&) { pair_bijection(p); }},
        {"tau-equivariance", false, ell_range, [this](Probe& p, SuiteResult&) { tau_equivariance(p); }},
        {"forest-bijection", true, omega_range, [this](Probe& p, SuiteResult&) { forest_bijection(p); }},
        {"lmh-intervals", true, omega_range, [this](Probe& p, SuiteResult&) { lmh_intervals(p); }},
        {"cut-attach", false, "edges<=" + std::to_string(P), [this](Probe& p, SuiteResult&) { cut_attach(p); }},
        {"counting-identities", false, "n<=30 plus forests " + omega_range,
         [this](Probe& p, SuiteResult&) { counting_identities(p); }},
    };
  }

 private:
  const PartitionSet& square_family(const SquarePartition& lambda, int ell) {
    auto rep = lambda;
    if (tau(lambda).parts() > lambda.parts()) rep = tau(lambda);
    auto key = std::make_pair(rep.parts(), ell);
    auto it = square_cache_.find(key);
    if (it == square_cache_.end()) it = square_cache_.emplace(key, grow_square_family(rep, ell, opt_.cap)).first;
    return it->second;
  }

  const PartitionSet& omega_family(int m, int ell) {
    auto key = std::make_pair(m, ell);
    auto it = omega_cache_.find(key);
    if (it == omega_cache_.end()) it = omega_cache_.emplace(key, grow_omega_family(m, ell, opt_.cap)).first;
    return it->second;
  }

  std::vector<BoundedPartition> pnk(int n, int k) { return enumerate_pnk(n, k, opt_.cap); }

  void gamma_involution(Probe& p) {
    for (int m = 1; m <= opt_.max_parts; ++m) {
      for (int i = 1; i <= m; ++i) {
        if (!p.check(gamma(m, gamma(m, i)) == i, [&] { return "gamma_" + std::to_string(m) + " not involutive at " + std::to_string(i); }))
          return;
        for (int j = i + 1; j <= m; ++j) {
          if (!p.check(gamma(m, i) > gamma(m, j), [&] { return "gamma_" + std::to_string(m) + " not order-reversing"; }))
            return;
        }
      }
    }
  }

  void tau_involution(Probe& p) {
    for (int n = 1; n <= opt_.max_parts; ++n) {
      for (int k = 1; k <= opt_.max_parts; ++k) {
        for (const auto& mu : pnk(n, k)) {
          const auto t = tau(mu);
          bool pointwise = true;
          for (int i = 1; i <= n; ++i) pointwise = pointwise && t(i) == gamma(k, mu(gamma(n, i)));
          if (!p.check(tau(t) == mu && t.bound() == k && static_cast<int>(t.size()) == n && pointwise,
                       [&] { return show(mu); }))
            return;
        }
      }
      std::set<std::vector<int>> squares;
      std::set<std::vector<int>> images;
      for (const auto& lambda : enumerate_square(n, opt_.cap)) {
        squares.insert(lambda.parts());
        images.insert(tau(lambda.value()).parts());
      }
      if (!p.check(squares == images, [&] { return "tau does not permute P^" + std::to_string(n) + "_sq"; })) return;
    }
  }

  void pnk_cardinality(Probe& p) {
    for (int n = 1; n <= opt_.max_parts; ++n) {
      for (int k = 1; k <= opt_.max_parts; ++k) {
        const auto all = pnk(n, k);
        bool strictly_decreasing = true;
        for (std::size_t i = 1; i < all.size(); ++i) strictly_decreasing = strictly_decreasing && all[i - 1].parts() > all[i].parts();
        if (!p.check(all.size() == binomial(n + k - 1, n) && strictly_decreasing,
                     [&] { return "P^{" + std::to_string(n) + "," + std::to_string(k) + "} has " + std::to_string(all.size()); }))
          return;
      }
      std::vector<std::vector<int>> filtered;
      for (const auto& mu : pnk(n, n)) {
        if (is_square(mu)) filtered.push_back(mu.parts());
      }
      std::vector<std::vector<int>> direct;
      for (const auto& lambda : enumerate_square(n, opt_.cap)) direct.push_back(lambda.parts());
      if (!p.check(filtered == direct, [&] { return "enumerate_square(" + std::to_string(n) + ") disagrees with filtering"; })) return;
    }
  }

  void square_cardinality(Probe& p) {
    for (int ell = 1; ell <= opt_.max_parts; ++ell) {
      for (int k = 1; k <= ell; ++k) {
        for (const auto& lambda : enumerate_square(k, opt_.cap)) {
          const auto expected = (is_self_dual(lambda) ? 1 : 2) * catalan(ell - k + 1);
          const auto& family = square_family(lambda, ell);
          if (!p.check(family.size() == expected, [&] {
                return "|P^" + std::to_string(ell) + "(" + lambda.to_string() + ")| = " + std::to_string(family.size()) +
                       ", expected " + counting::to_decimal(expected);
              }))
            return;
        }
      }
    }
  }

  void square_tau_stability(Probe& p) {
    for (int ell = 1; ell <= opt_.max_parts; ++ell) {
      for (int k = 1; k <= ell; ++k) {
        for (const auto& lambda : orbit_representatives(k, opt_.cap)) {
          const auto& family = square_family(lambda, ell);
          PartitionSet image(ell, ell);
          for (const auto& mu : family) image.insert(tau(mu));
          const auto from_dual = grow_square_family(tau(lambda), ell, opt_.cap);
          if (!p.check(image == family && from_dual == family,
                       [&] { return "P^" + std::to_string(ell) + "(" + lambda.to_string() + ") not tau-stable"; }))
            return;
        }
      }
    }
  }

  void covering(Probe& p, SuiteResult& result) {
    std::ostringstream detail;
    for (int ell = 1; ell <= opt_.max_parts; ++ell) {
      PartitionSet seen(ell, ell);
      std::vector<std::string> per_k;
      for (int k = 1; k <= ell; ++k) {
        std::size_t self_dual = 0, paired = 0;
        for (const auto& lambda : orbit_representatives(k, opt_.cap)) {
          for (const auto& mu : square_family(lambda, ell)) {
            if (!p.check(seen.insert(mu), [&] { return show(mu) + " lies in two families (second core " + lambda.to_string() + ")"; }))
              return;
            ++(is_self_dual(lambda) ? self_dual : paired);
          }
        }
        // (self-dual orbits + paired orbits) when a core size has both kinds
        per_k.push_back(self_dual && paired ? "(" + std::to_string(self_dual) + "+" + std::to_string(paired) + ")"
                                            : std::to_string(self_dual + paired));
      }
      const auto all = pnk(ell, ell);
      bool covered = seen.size() == all.size();
      for (const auto& mu : all) covered = covered && seen.contains(mu);
      if (!p.check(covered, [&] { return "families do not cover P^" + std::to_string(ell); })) return;
      detail << (ell > 1 ? "; " : "") << "P^" << ell << ": " << all.size() << " =";
      for (std::size_t i = 0; i < per_k.size(); ++i) detail << (i ? "+" : " ") << per_k[i];
    }
    result.detail = detail.str();
  }

  void omega_cardinality(Probe& p) {
    for (int ell = 1; ell <= opt_.max_parts; ++ell) {
      for (int m = 1; m <= opt_.max_m; ++m) {
        const auto& family = omega_family(m, ell);
        if (!p.check(family.size() == ballot(ell, m - 1), [&] {
              return "|P^" + std::to_string(ell) + "(Omega_" + std::to_string(m) + ")| = " + std::to_string(family.size());
            }))
          return;
      }
    }
  }

  void omega_tau_stability(Probe& p) {
    for (int ell = 1; ell <= opt_.max_parts; ++ell) {
      for (int m = 1; m <= opt_.max_m; ++m) {
        const auto& family = omega_family(m, ell);
        PartitionSet image(ell, family.bound());
        for (const auto& mu : family) image.insert(tau(mu));
        if (!p.check(image == family, [&] { return "P^" + std::to_string(ell) + "(Omega_" + std::to_string(m) + ") not tau-stable"; }))
          return;
      }
    }
  }

  void omega_square_coincidence(Probe& p) {
    const SquarePartition unit(std::vector<int>{1});
    for (int ell = 1; ell <= opt_.max_parts; ++ell) {
      if (!p.check(grow_omega_family(1, ell, opt_.cap) == square_family(unit, ell),
                   [&] { return "P^" + std::to_string(ell) + "(Omega_1) != P^" + std::to_string(ell) + "((1))"; }))
        return;
    }
  }

  void witness_uniqueness(Probe& p) {
    for (int ell = 1; ell <= opt_.max_parts; ++ell) {
      for (const auto& mu : pnk(ell, ell)) {
        const auto w = find_square_core(mu);
        int matches = 0;
        bool found = false;
        for (int b = 1; b <= ell; ++b) {
          for (int k = 1; b + k - 1 <= ell; ++k) {
            if (satisfies_square_conditions(mu, b, k)) {
              ++matches;
              found = found || (b == w.b && k == w.k);
            }
          }
        }
        if (!p.check(matches == 1 && found && w.b <= ell - w.k + 1, [&] { return show(mu); })) return;
      }
    }
  }

  void witness_tau_symmetry(Probe& p) {
    for (int ell = 1; ell <= opt_.max_parts; ++ell) {
      for (const auto& mu : pnk(ell, ell)) {
        const auto w = find_square_core(mu);
        const auto wd = find_square_core(tau(mu));
        if (!p.check(wd.k == w.k && wd.b == ell - w.k - w.b + 2 && wd.core == tau(w.core), [&] { return show(mu); })) return;
      }
    }
  }

  void closed_form_square(Probe& p) {
    for (int ell = 1; ell <= opt_.max_parts; ++ell) {
      const auto all = pnk(ell, ell);
      for (int k = 1; k <= ell; ++k) {
        for (const auto& lambda : enumerate_square(k, opt_.cap)) {
          const auto& family = square_family(lambda, ell);
          for (const auto& mu : all) {
            if (!p.check(member_square(mu, lambda) == family.contains(mu),
                         [&] { return show(mu) + " vs core (" + lambda.to_string() + ")"; }))
              return;
          }
        }
      }
    }
  }

  void closed_form_omega(Probe& p) {
    for (int ell = 1; ell <= opt_.max_parts; ++ell) {
      for (int m = 1; m <= opt_.max_m; ++m) {
        const auto& family = omega_family(m, ell);
        for (const auto& mu : pnk(ell, ell + m - 1)) {
          if (!p.check(omega_member_(mu, m) == family.contains(mu), [&] { return show(mu) + " with m=" + std::to_string(m); }))
            return;
        }
      }
    }
  }

  void compression_lemma(Probe& p) {
    for (int ell = 1; ell <= opt_.max_parts; ++ell) {
      for (int m = 1; m <= opt_.max_m; ++m) {
        const int width = ell + m - 1;
        for (int r = 1; r <= ell; ++r) {
          for (int s = 1; s <= width; ++s) {
            const int t = compress_t(r, s, ell, m);
            const bool a = ((t < r) == (s < r)) && ((t > r) == (s > r + m - 1));
            const bool b = compress_t(gamma(ell, r), gamma(width, s), ell, m) == gamma(ell, t);
            if (!p.check(a && b, [&] { return "t(" + std::to_string(r) + "," + std::to_string(s) + ") ell=" + std::to_string(ell) + " m=" + std::to_string(m); }))
              return;
          }
        }
        for (const auto& mu : pnk(ell, width)) {
          const auto mt = mu_tilde(mu, m);
          const auto dual = mu_tilde(tau(mu), m);
          bool ok = true;
          for (int i = 1; i <= ell; ++i) ok = ok && gamma(ell, dual(i)) == mt(gamma(ell, i));
          if (!p.check(ok, [&] { return show(mu) + " with m=" + std::to_string(m); })) return;
        }
      }
    }
  }

  void condition_swap(Probe& p) {
    for (int ell = 1; ell <= opt_.max_parts; ++ell) {
      for (int m = 1; m <= opt_.max_m; ++m) {
        for (const auto& mu : pnk(ell, ell + m - 1)) {
          const bool down = satisfies_tilde_condition_down(mu_tilde(mu, m));
          const bool dual_up = satisfies_tilde_condition_up(mu_tilde(tau(mu), m));
          if (!p.check(down == dual_up, [&] { return show(mu) + " with m=" + std::to_string(m); })) return;
        }
      }
    }
  }

  void m1_equivalence(Probe& p) {
    const SquarePartition unit(std::vector<int>{1});
    for (int ell = 1; ell <= opt_.max_parts; ++ell) {
      for (const auto& mu : pnk(ell, ell)) {
        if (!p.check(mu_tilde(mu, 1).values == mu.parts() && member_omega(mu, 1) == member_square(mu, unit),
                     [&] { return show(mu); }))
          return;
      }
    }
  }

  void theta_fibers(Probe& p) {
    const SquarePartition unit(std::vector<int>{1});
    for (int ell = 1; ell <= opt_.max_parts; ++ell) {
      for (int k = 1; k <= ell; ++k) {
        for (const auto& lambda : orbit_representatives(k, opt_.cap)) {
          std::map<std::vector<int>, std::vector<BoundedPartition>> fibers;
          for (const auto& mu : square_family(lambda, ell)) fibers[theta(mu).parts()].push_back(mu);
          const auto& target = square_family(unit, ell - k + 1);
          const std::size_t fiber_size = is_self_dual(lambda) ? 1 : 2;
          if (!p.check(fibers.size() == target.size(), [&] { return "theta on P^" + std::to_string(ell) + "(" + lambda.to_string() + ") is not onto"; }))
            return;
          for (const auto& [image, members] : fibers) {
            const BoundedPartition nu(image, ell - k + 1);
            auto expected = members;
            std::sort(expected.begin(), expected.end(), CanonicalOrder{});
            if (!p.check(target.contains(nu) && members.size() == fiber_size && theta_fiber(nu, lambda) == expected,
                         [&] { return "fiber over " + show(nu) + " for core (" + lambda.to_string() + ")"; }))
              return;
          }
        }
      }
    }
  }

  void pair_bijection(Probe& p) {
    const SquarePartition unit(std::vector<int>{1});
    for (int ell = 1; ell <= opt_.max_parts; ++ell) {
      PartitionSet image(ell, ell);
      const auto pairs = enumerate_pairs(ell - 1, opt_.cap);
      for (const auto& pair : pairs) {
        const auto mu = pair_to_partition(pair, ell);
        const auto back = partition_to_pair(mu);
        image.insert(mu);
        if (!p.check(back.shape() == pair && label_pair(pair, ell) == back && labeled_pair_to_partition(back) == mu,
                     [&] { return pair.encode() + " -> " + show(mu); }))
          return;
      }
      if (!p.check(image.size() == pairs.size() && image == square_family(unit, ell),
                   [&] { return "pair bijection image differs from P^" + std::to_string(ell) + "((1))"; }))
        return;
    }
  }

  void tau_equivariance(Probe& p) {
    for (int ell = 1; ell <= opt_.max_parts; ++ell) {
      for (const auto& pair : enumerate_pairs(ell - 1, opt_.cap)) {
        const auto labeled = label_pair(pair, ell);
        const auto mu = labeled_pair_to_partition(labeled);
        const auto dual = tau_on_pair(labeled);
        const bool ok = pair_to_partition(dual.shape(), ell) == tau(mu) && label_pair(dual.shape(), ell) == dual &&
                        labeled_pair_to_partition(dual) == tau(mu) && tau_on_pair(dual) == labeled;
        if (!p.check(ok, [&] { return pair.encode(); })) return;
      }
    }
  }

  void forest_bijection(Probe& p) {
    for (int ell = 1; ell <= opt_.max_parts; ++ell) {
      for (int m = 1; m <= opt_.max_m; ++m) {
        const auto& family = omega_family(m, ell);
        PartitionSet image(ell, ell + m - 1);
        const auto forests = enumerate_forests(m, ell, opt_.cap);
        for (const auto& forest : forests) {
          const auto mu = forest_to_partition(forest, m);
          image.insert(mu);
          const auto back = partition_to_forest(mu, m);
          if (!p.check(back == forest && back.edge_count() == static_cast<std::size_t>(ell),
                       [&] { return forest.encode() + " with m=" + std::to_string(m); }))
            return;
        }
        if (!p.check(image.size() == forests.size() && image == family,
                     [&] { return "forest bijection image differs from P^" + std::to_string(ell) + "(Omega_" + std::to_string(m) + ")"; }))
          return;
        if (m == 1) {
          for (const auto& mu : family) {
            if (!p.check(partition_to_forest(mu, 1).slots().front() == attach(partition_to_pair(mu).shape()),
                         [&] { return "m=1 forest differs from the attached pair for " + show(mu); }))
              return;
          }
        }
      }
    }
  }

  void lmh_intervals(Probe& p) {
    for (int ell = 1; ell <= opt_.max_parts; ++ell) {
      for (int m = 1; m <= opt_.max_m; ++m) {
        for (const auto& mu : omega_family(m, ell)) {
          const auto mt = mu_tilde(mu, m);
          // classes must read L...L M...M H...H
          int phase = 0;
          bool intervals = true;
          int low = 0, mid = 0, high = 0;
          for (int i = 1; i <= ell; ++i) {
            const int cls = mt(i) > i ? 0 : mt(i) == i ? 1 : 2;
            intervals = intervals && cls >= phase;
            phase = cls;
            (cls == 0 ? low : cls == 1 ? mid : high)++;
          }
          const auto forest = partition_to_forest(mu, m);
          std::size_t nonempty = 0;
          for (const auto& slot : forest.slots()) nonempty += slot.is_empty() ? 0 : 1;
          if (!p.check(intervals && forest.edge_count() == static_cast<std::size_t>(low + mid + high) &&
                           nonempty == static_cast<std::size_t>(mid),
                       [&] { return show(mu) + " with m=" + std::to_string(m); }))
            return;
        }
      }
    }
  }

  void cut_attach(Probe& p) {
    for (int n = 0; n <= opt_.max_parts; ++n) {
      const auto trees = enumerate_trees(n, opt_.cap);
      if (!p.check(trees.size() == catalan(n), [&] { return "tree count at " + std::to_string(n) + " edges"; })) return;
      for (const auto& tree : trees) {
        if (n >= 1 && !p.check(attach(cut(tree)) == tree, [&] { return tree.encode(); })) return;
        if (!p.check(cut(attach(TreePair(tree, RootedPlaneTree()))) == TreePair(tree, RootedPlaneTree()),
                     [&] { return tree.encode() + "|()"; }))
          return;
      }
      if (n >= 1) {
        for (const auto& pair : enumerate_pairs(n - 1, opt_.cap)) {
          if (!p.check(cut(attach(pair)) == pair, [&] { return pair.encode(); })) return;
        }
      }
    }
  }

  void counting_identities(Probe& p) {
    std::vector<ExactInteger> segner{1};
    for (int n = 0; n < 30; ++n) {
      ExactInteger next = 0;
      for (int i = 0; i <= n; ++i) next += segner[i] * segner[n - i];
      segner.push_back(next);
    }
    for (int n = 0; n <= 30; ++n) {
      if (!p.check(catalan(n) == segner[n], [&] { return "catalan(" + std::to_string(n) + ")"; })) return;
    }
    for (int n = 1; n <= 20; ++n) {
      if (!p.check(ballot(n, 0) == catalan(n) && counting::generalized_catalan(2, 1, n) == catalan(n),
                   [&] { return "ballot/generalized catalan at n=" + std::to_string(n); }))
        return;
    }
    for (int ell = 1; ell <= 10; ++ell) {
      for (int m = 1; m <= 6; ++m) {
        if (!p.check(counting::generalized_catalan(2, m, ell) == ballot(ell, m - 1),
                     [&] { return "C_{2," + std::to_string(m) + "}(" + std::to_string(ell) + ")"; }))
          return;
      }
    }
    for (int ell = 1; ell <= opt_.max_parts; ++ell) {
      for (int m = 1; m <= std::max(opt_.max_m, 1); ++m) {
        if (!p.check(enumerate_forests(m, ell, opt_.cap).size() == ballot(ell, m - 1),
                     [&] { return "forest count m=" + std::to_string(m) + " ell=" + std::to_string(ell); }))
          return;
      }
    }
  }

  VerifyOptions opt_;
  std::function<bool(const BoundedPartition&, int)> omega_member_;
  std::map<std::pair<std::vector<int>, int>, PartitionSet> square_cache_;
  std::map<std::pair<int, int>, PartitionSet> omega_cache_;
};

std::string_view status_name(SuiteStatus status) {
  switch (status) {
    case SuiteStatus::pass: return "PASS";
    case SuiteStatus::fail: return "FAIL";
    case SuiteStatus::skipped: return "SKIP";
  }
  return "?";
}

}  // namespace

bool VerifyReport::passed() const {
  for (const auto& suite : suites) {
    if (suite.status == SuiteStatus::fail) return false;
  }
  return true;
}

// Wall times are left out of the text form so repeated runs print identical bytes.
std::string VerifyReport::to_text() const {
  std::ostringstream out;
  int pass = 0, fail = 0, skip = 0;
  for (const auto& suite : suites) {
    out << status_name(suite.status) << "  " << suite.name << "  [" << suite.range << "]  examined=" << suite.examined;
    if (!suite.detail.empty()) out << "  " << suite.detail;
    out << "\n";
    if (suite.status == SuiteStatus::fail) out << "      counterexample: " << suite.counterexample << "\n";
    (suite.status == SuiteStatus::pass ? pass : suite.status == SuiteStatus::fail ? fail : skip)++;
  }
  out << "verify max_parts=" << options.max_parts << " max_m=" << options.max_m << ": " << suites.size()
      << " suites, " << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
  return out.str();
}

std::string VerifyReport::to_json() const {
  nlohmann::json doc;
  doc["max_parts"] = options.max_parts;
  doc["max_m"] = options.max_m;
  doc["passed"] = passed();
  if (options.mutation) doc["mutation"] = *options.mutation;
  auto& list = doc["suites"] = nlohmann::json::array();
  for (const auto& suite : suites) {
    nlohmann::json entry{{"name", suite.name},
                         {"range", suite.range},
                         {"examined", suite.examined},
                         {"status", status_name(suite.status)},
                         {"wall_ms", suite.millis}};
    if (!suite.detail.empty()) entry["detail"] = suite.detail;
    if (suite.status == SuiteStatus::fail) entry["counterexample"] = suite.counterexample;
    list.push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

std::vector<std::string> verify_suite_names() {
  Harness harness(VerifyOptions{});
  std::vector<std::string> names;
  for (const auto& suite : harness.suites()) names.push_back(suite.name);
  return names;
}

std::vector<std::string> known_mutations() { return {kFlipOmegaInequality}; }

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.max_parts < 1) throw invalid_argument("verify: max_parts must be at least 1");
  if (options.max_m < 0) throw invalid_argument("verify: max_m must be nonnegative");
  if (options.mutation) {
    const auto known = known_mutations();
    if (std::find(known.begin(), known.end(), *options.mutation) == known.end()) {
      throw invalid_argument("verify: unknown mutation '" + *options.mutation + "'");
    }
  }
  return Harness(options).run();
}

}  // namespace catpart
