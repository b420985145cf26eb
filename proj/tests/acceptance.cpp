// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include "catpart/closed_form.hpp"
#include "catpart/counting.hpp"
#include "catpart/families.hpp"
#include "catpart/partition.hpp"
#include "catpart/trees.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace catpart;

namespace {

// Wall-clock budgets, seconds.
constexpr double kBudgetCatalan = 60.0;
constexpr double kBudgetBallot = 120.0;
constexpr double kBudgetRoundTrips = 60.0;
constexpr double kBudgetDefault = 300.0;

// Collects the first few failed expectations of one criterion.
class Ledger {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ = failed_ || !ok;
  }
  bool failed() const { return failed_; }
  std::size_t checks() const { return checks_; }
  std::string summary() const {
    std::string out;
    for (const auto& f : failures_) out += "\n      " + f;
    return out;
  }

 private:
  bool failed_ = false;
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
};

std::string show(const std::vector<int>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + std::to_string(parts[i]);
  return out + ")";
}

SquarePartition sq(std::vector<int> parts) { return SquarePartition(std::move(parts)); }

void catalan_cardinality(Ledger& L) {
  const std::vector<long> expected{1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
  for (int ell = 1; ell <= 10; ++ell) {
    const auto size = grow_square_family(sq({1}), ell).size();
    L.expect(size == counting::catalan(ell) && static_cast<long>(size) == expected[ell - 1],
             "ell=" + std::to_string(ell) + ": " + std::to_string(size));
  }
}

void doubling(Ledger& L) {
  for (int ell = 3; ell <= 9; ++ell) {
    const auto paired = grow_square_family(sq({3, 1, 1}), ell).size();
    const auto single = grow_square_family(sq({3, 2, 1}), ell).size();
    L.expect(paired == 2 * counting::catalan(ell - 2), "(3,1,1) ell=" + std::to_string(ell));
    L.expect(single == counting::catalan(ell - 2), "(3,2,1) ell=" + std::to_string(ell));
  }
}

void ballot_cardinality(Ledger& L) {
  for (int ell = 1; ell <= 8; ++ell) {
    for (int m = 1; m <= 6; ++m) {
      const auto size = grow_omega_family(m, ell).size();
      L.expect(size == counting::ballot(ell, m - 1),
               "ell=" + std::to_string(ell) + " m=" + std::to_string(m) + ": " + std::to_string(size));
    }
  }
}

void covering(Ledger& L) {
  const auto rows = oracle::pascal(20);
  for (int ell = 1; ell <= 7; ++ell) {
    PartitionSet seen(ell, ell);
    std::map<int, std::vector<std::size_t>> orbit_sizes;
    for (int k = 1; k <= ell; ++k) {
      for (const auto& rep : orbit_representatives(k)) {
        const auto family = grow_square_family(rep, ell);
        for (const auto& mu : family) L.expect(seen.insert(mu), "overlap at " + show(mu.parts()));
        orbit_sizes[k].push_back(family.size());
      }
    }
    const auto all = enumerate_pnk(ell, ell);
    bool covered = seen.size() == all.size();
    for (const auto& mu : all) covered = covered && seen.contains(mu);
    L.expect(covered && all.size() == oracle::choose(rows, 2 * ell - 1, ell), "cover ell=" + std::to_string(ell));
    if (ell == 4) {
      std::vector<std::size_t> per_k;
      for (auto& [k, sizes] : orbit_sizes) {
        std::size_t total = 0;
        for (auto s : sizes) total += s;
        per_k.push_back(total);
      }
      auto k3 = orbit_sizes[3];
      std::sort(k3.begin(), k3.end());
      L.expect(per_k == std::vector<std::size_t>{14, 5, 6, 10}, "ell=4 per-k sums");
      L.expect(k3 == std::vector<std::size_t>{2, 4}, "ell=4 k=3 orbit split");
      L.expect(seen.size() == 35, "ell=4 total");
    }
  }
}

void closed_forms(Ledger& L) {
  for (int ell = 1; ell <= 7; ++ell) {
    const auto all = enumerate_pnk(ell, ell);
    for (int k = 1; k <= ell; ++k) {
      for (const auto& lambda : enumerate_square(k)) {
        const auto family = grow_square_family(lambda, ell);
        for (const auto& mu : all) {
          L.expect(member_square(mu, lambda) == family.contains(mu), show(mu.parts()) + " core " + lambda.to_string());
        }
      }
    }
  }
  for (int ell = 1; ell <= 6; ++ell) {
    for (int m = 1; m <= 4; ++m) {
      const auto family = grow_omega_family(m, ell);
      for (const auto& mu : enumerate_pnk(ell, ell + m - 1)) {
        L.expect(member_omega(mu, m) == family.contains(mu), show(mu.parts()) + " m=" + std::to_string(m));
      }
    }
  }
}

void worked_examples(Ledger& L) {
  // deep square witness
  const BoundedPartition deep({7, 6, 5, 3, 3, 3, 3, 3, 3, 1}, 10);
  const auto w = find_square_core(deep);
  L.expect(w.b == 3 && w.k == 3 && w.core == sq({3, 1, 1}), "deep witness witness");
  L.expect(theta(deep).parts() == std::vector<int>{5, 4, 3, 3, 3, 3, 3, 1}, "deep witness theta");

  // 14-part pair round trip
  const BoundedPartition mu14({11, 11, 11, 11, 10, 9, 9, 9, 9, 9, 9, 7, 7, 3}, 14);
  const TreePair pair14_shape(parse_tree("((()()(())())(()))"), parse_tree("(()(()())())"));
  const auto labeled = partition_to_pair(mu14);
  L.expect(labeled.b == 9 && labeled.to_string() == "9-(11(1 2 3(14) 4) 10(5)) | 9+(6 7(13 12) 8)",
           "pair14 labels: " + labeled.to_string());
  L.expect(pair_to_partition(pair14_shape, 14) == mu14, "pair14 pair -> partition");

  // dual of the 14-part pair
  const BoundedPartition mu14_dual({12, 8, 8, 6, 6, 6, 6, 6, 6, 5, 4, 4, 4, 4}, 14);
  const auto dual = tau_on_pair(labeled);
  L.expect(tau(mu14) == mu14_dual, "pair14 dual tau(mu)");
  L.expect(labeled_pair_to_partition(dual) == mu14_dual && pair_to_partition(dual.shape(), 14) == mu14_dual,
           "pair14 dual pair -> tau(mu)");
  L.expect(dual.b == 6 && dual.to_string() == "6-(9 8(2 3) 7) | 6+(4(14 13 12(1) 11) 5(10))",
           "pair14 dual labels: " + dual.to_string());

  // the fourteen pairs of P^4((1))
  const std::vector<std::tuple<const char*, const char*, std::vector<int>>> listed{
      {"()", "((()()))", {2, 2, 1, 1}}, {"()", "((())())", {3, 3, 3, 1}}, {"()", "(()(()))", {3, 3, 3, 2}},
      {"()", "(((())))", {4, 3, 3, 2}}, {"()", "(()()())", {4, 4, 4, 4}}, {"(((())))", "()", {3, 2, 2, 1}},
      {"((()()))", "()", {4, 4, 3, 3}}, {"((()))", "(())", {4, 3, 3, 3}}, {"(())", "((()))", {2, 2, 2, 1}},
      {"(())", "(()())", {3, 3, 3, 3}}, {"((())())", "()", {4, 2, 2, 2}}, {"(()(()))", "()", {3, 2, 2, 2}},
      {"(()())", "(())", {2, 2, 2, 2}}, {"(()()())", "()", {1, 1, 1, 1}}};
  PartitionSet images(4, 4);
  for (const auto& [minus, plus, parts] : listed) {
    const TreePair pair(parse_tree(minus), parse_tree(plus));
    const auto mu = pair_to_partition(pair, 4);
    L.expect(mu.parts() == parts, std::string(minus) + "|" + plus + " -> " + show(mu.parts()));
    images.insert(mu);
  }
  L.expect(images == grow_square_family(sq({1}), 4), "the 14 listed partitions are P^4((1))");

  // the 24-part Omega_4 example
  const BoundedPartition omega({22, 22, 22, 21, 21, 21, 21, 20, 17, 17, 17, 16, 16, 15, 15, 15, 14, 14, 13, 12, 6, 3,
                                3, 3},
                               27);
  L.expect(member_omega(omega, 4), "24-part mu is in P^24(Omega_4)");
  L.expect(mu_tilde(omega, 4).values == std::vector<int>{19, 19, 19, 18, 18, 18, 18, 17, 14, 14, 14, 13, 13, 14, 15,
                                                         15, 14, 14, 13, 12, 6, 3, 3, 3},
           "mu~ table");
  const auto parts = decompose(omega, 4);
  L.expect(parts.low_count == 12 && parts.mid_count == 3 && parts.high_count == 9, "L=[1,12] M=[13,15] H=[16,24]");
  const bool positions = parts.pairs.size() == 4 && parts.pairs[0] && !parts.pairs[1] && parts.pairs[2] &&
                         parts.pairs[3] && parts.pairs[0]->b == 13 && parts.pairs[2]->b == 14 &&
                         parts.pairs[3]->b == 15;
  L.expect(positions, "pairs rooted at 13, 14, 15 in slots 1, 3, 4; slot 2 empty");
  if (positions) {
    // Pairs follow the edge rules applied to the mu~ table (20 -> mu~(20) = 12).
    L.expect(parts.pairs[0]->to_string() == "13-(19(1 2 3(24 23 22))) | 13+(12(20))", parts.pairs[0]->to_string());
    L.expect(parts.pairs[2]->to_string() == "14-(18(4 5 6(21) 7) 17(8)) | 14+(9 10 11)", parts.pairs[2]->to_string());
    L.expect(parts.pairs[3]->to_string() == "15-(16) | 15+", parts.pairs[3]->to_string());
  }
  const auto forest = partition_to_forest(omega, 4);
  L.expect(forest.edge_count() == 24 && forest.slots()[1].is_empty(), "forest has 24 edges and an empty T2");
  L.expect(forest.slots()[3] == parse_tree("(()())"), "T4");
  L.expect(forest_to_partition(forest, 4) == omega, "forest -> 24-part mu");
}

void round_trips(Ledger& L) {
  for (int ell = 1; ell <= 8; ++ell) {
    const auto pairs = enumerate_pairs(ell - 1);
    PartitionSet image(ell, ell);
    for (const auto& pair : pairs) {
      const auto mu = pair_to_partition(pair, ell);
      image.insert(mu);
      L.expect(partition_to_pair(mu).shape() == pair, pair.encode());
    }
    L.expect(image.size() == pairs.size() && pairs.size() == counting::catalan(ell),
             "pair count ell=" + std::to_string(ell));
    if (ell == 8) L.expect(pairs.size() == 1430, "1430 pairs at ell=8");
  }
  for (int ell = 1; ell <= 6; ++ell) {
    for (int m = 1; m <= 4; ++m) {
      const auto forests = enumerate_forests(m, ell);
      L.expect(forests.size() == counting::ballot(ell, m - 1), "forest count");
      for (const auto& forest : forests) {
        L.expect(partition_to_forest(forest_to_partition(forest, m), m) == forest, forest.encode());
      }
      for (const auto& mu : grow_omega_family(m, ell)) {
        L.expect(forest_to_partition(partition_to_forest(mu, m), m) == mu, show(mu.parts()));
      }
    }
  }
  for (int n = 1; n <= 7; ++n) {
    for (const auto& tree : enumerate_trees(n)) L.expect(attach(cut(tree)) == tree, tree.encode());
  }
}

void structural(Ledger& L) {
  for (int n = 1; n <= 7; ++n) {
    for (int k = 1; k <= 7; ++k) {
      for (const auto& mu : enumerate_pnk(n, k)) L.expect(tau(tau(mu)) == mu, "tau involution " + show(mu.parts()));
    }
  }
  for (int ell = 1; ell <= 8; ++ell) {
    for (const auto& pair : enumerate_pairs(ell - 1)) {
      const auto labeled = label_pair(pair, ell);
      L.expect(labeled_pair_to_partition(tau_on_pair(labeled)) == tau(labeled_pair_to_partition(labeled)),
               "tau-equivariance " + pair.encode());
    }
    for (const auto& mu : enumerate_pnk(ell, ell)) {
      L.expect(member_omega(mu, 1) == member_square(mu, sq({1})), "m=1 equivalence " + show(mu.parts()));
    }
  }
  for (int ell = 1; ell <= 5; ++ell) {
    for (int m = 1; m <= 4; ++m) {
      const int width = ell + m - 1;
      for (int r = 1; r <= ell; ++r) {
        for (int s = 1; s <= width; ++s) {
          const int t = compress_t(r, s, ell, m);
          L.expect((t < r) == (s < r) && (t > r) == (s > r + m - 1), "t-property (a)");
        }
      }
      for (const auto& mu : enumerate_pnk(ell, width)) {
        const auto mt = mu_tilde(mu, m);
        const auto md = mu_tilde(tau(mu), m);
        bool c = true;
        for (int i = 1; i <= ell; ++i) c = c && gamma(ell, md(i)) == mt(gamma(ell, i));
        L.expect(c, "t-property (c) " + show(mu.parts()));
        L.expect(satisfies_tilde_condition_down(mt) == satisfies_tilde_condition_up(md),
                 "condition swap " + show(mu.parts()));
      }
    }
  }
  for (int ell = 1; ell <= 6; ++ell) {
    for (int m = 1; m <= 4; ++m) {
      for (const auto& mu : grow_omega_family(m, ell)) {
        const auto mt = mu_tilde(mu, m);
        int phase = 0;
        bool ordered = true;
        for (int i = 1; i <= ell; ++i) {
          const int cls = mt(i) > i ? 0 : mt(i) == i ? 1 : 2;
          ordered = ordered && cls >= phase;
          phase = cls;
        }
        L.expect(ordered, "L/M/H intervals " + show(mu.parts()));
      }
    }
  }
}

void exact_arithmetic(Ledger& L) {
  const auto segner = oracle::segner(100);
  L.expect(counting::catalan(100) == segner[100], "catalan(100) vs convolution recurrence");
  const auto rows = oracle::pascal(250);
  const auto difference = oracle::choose(rows, 250, 100) - oracle::choose(rows, 250, 99);
  L.expect(counting::ballot(100, 50) == difference, "ballot(100,50) vs Pascal binomial difference");
  L.expect(counting::ballot(100, 50) == oracle::forest_count(51, 100), "ballot(100,50) vs forest convolution");
  L.expect(counting::to_decimal(counting::catalan(100)) == "896519947090131496687170070074100632420837521538745909320",
           "catalan(100) digits");
}

struct Criterion {
  int id;
  const char* title;
  double budget;
  std::function<void(Ledger&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Catalan cardinality of P^ell((1)), ell = 1..10", kBudgetCatalan, catalan_cardinality},
      {2, "doubling for (3,1,1), single count for (3,2,1), ell = 3..9", kBudgetDefault, doubling},
      {3, "ballot cardinality of P^ell(Omega_m), ell <= 8, m <= 6", kBudgetBallot, ballot_cardinality},
      {4, "covering and disjointness, ell = 1..7; 35 = 14+5+(2+4)+10 at ell = 4", kBudgetDefault, covering},
      {5, "closed forms equal recursive membership (square ell <= 7; omega ell <= 6, m <= 4)", kBudgetDefault,
       closed_forms},
      {6, "worked examples reproduce exactly", kBudgetDefault, worked_examples},
      {7, "bijection round-trips (pairs ell <= 8, forests ell <= 6 m <= 4, cut/attach <= 7 edges)",
       kBudgetRoundTrips, round_trips},
      {8, "structural lemma sweeps", kBudgetDefault, structural},
      {9, "exact arithmetic at n = 100", kBudgetDefault, exact_arithmetic},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Ledger ledger;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.run(ledger);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool over_budget = seconds > c.budget;
    const bool ok = !ledger.failed() && error.empty() && !over_budget;
    failed += ok ? 0 : 1;
    std::printf("criterion %d %s: %s [%zu checks, %.2fs of %.0fs]%s%s%s\n", c.id, ok ? "PASS" : "FAIL", c.title,
                ledger.checks(), seconds, c.budget, ledger.summary().c_str(),
                error.empty() ? "" : ("\n      exception: " + error).c_str(), over_budget ? "\n      over budget" : "");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
