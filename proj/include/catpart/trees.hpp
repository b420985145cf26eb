#pragma once

#include "catpart/partition.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace catpart {

/// An ordered (plane) rooted tree, or the explicit empty tree used for
/// zero-edge forest slots. Equality is structural and order-sensitive.
class RootedPlaneTree {
 public:
  /// A single root with the given ordered subtrees. Children must be nonempty.
  explicit RootedPlaneTree(std::vector<RootedPlaneTree> children = {});

  static RootedPlaneTree empty();
  static RootedPlaneTree single_vertex() { return RootedPlaneTree(); }

  bool is_empty() const noexcept { return empty_; }
  const std::vector<RootedPlaneTree>& children() const noexcept { return children_; }
  std::size_t edge_count() const noexcept;
  std::size_t vertex_count() const noexcept;

  /// Balanced parentheses, root outermost: "(()(()))". The empty tree is "_".
  std::string encode() const;

  friend bool operator==(const RootedPlaneTree&, const RootedPlaneTree&) = default;

 private:
  bool empty_ = false;
  std::vector<RootedPlaneTree> children_;
};

/// Parses the balanced-parenthesis form; "_" yields the empty tree.
RootedPlaneTree parse_tree(std::string_view text);

/// (T-, T+): both trees nonempty.
struct TreePair {
  RootedPlaneTree minus;
  RootedPlaneTree plus;

  TreePair(RootedPlaneTree minus_tree, RootedPlaneTree plus_tree);
  std::size_t edge_count() const noexcept { return minus.edge_count() + plus.edge_count(); }
  /// "T-|T+" in balanced parentheses.
  std::string encode() const { return minus.encode() + "|" + plus.encode(); }

  friend bool operator==(const TreePair&, const TreePair&) = default;
};

/// Accepts "T-|T+" or a single tree, which is cut into a pair.
TreePair parse_pair(std::string_view text);

/// Removes the root's rightmost branch: T+ is that subtree, T- the remainder.
TreePair cut(const RootedPlaneTree& tree);
/// Hangs T+ as the new rightmost subtree of T-'s root.
RootedPlaneTree attach(const TreePair& pair);

/// All plane trees with n_edges edges (catalan(n_edges) of them).
std::vector<RootedPlaneTree> enumerate_trees(int n_edges, std::uint64_t cap = kDefaultEnumerationCap);
/// All pairs with the given total edge count; cut() of every tree with one more edge.
std::vector<TreePair> enumerate_pairs(int total_edges, std::uint64_t cap = kDefaultEnumerationCap);

/// A vertex carrying its label. Roots carry the fixed point b; which of b-/b+
/// they stand for is given by their position in the pair.
struct LabeledNode {
  int label = 0;
  std::vector<LabeledNode> children;

  RootedPlaneTree shape() const;
  friend bool operator==(const LabeledNode&, const LabeledNode&) = default;
};

/// A tree pair labeled by [ell]: non-root labels are [ell] \ {b}, both roots are b.
struct LabeledTreePair {
  int ell = 0;
  int b = 0;
  LabeledNode minus;
  LabeledNode plus;

  TreePair shape() const { return {minus.shape(), plus.shape()}; }
  /// "9-(11(1 2 3(14) 4) 10(5)) | 9+(6 7(13 12) 8)"
  std::string to_string() const;
  friend bool operator==(const LabeledTreePair&, const LabeledTreePair&) = default;
};

/// Level labeling of a pair with ell-1 total edges (deepest level first; odd
/// levels of T- and even levels of T+ take 1, 2, ...; the rest take ell, ell-1, ...).
LabeledTreePair label_pair(const TreePair& pair, int ell);

/// mu(i) = parent label of i, mu(b) = b. Result lies in P^ell((1)).
BoundedPartition pair_to_partition(const TreePair& pair, int ell);

/// Reads mu straight off the labels; validates that they form a labeling of [ell].
BoundedPartition labeled_pair_to_partition(const LabeledTreePair& pair);

/// Inverse of pair_to_partition. mu must lie in P^ell((1)).
LabeledTreePair partition_to_pair(const BoundedPartition& mu);

/// Swaps the trees and relabels i -> ell+1-i (b- -> (ell+1-b)+, b+ -> (ell+1-b)-).
LabeledTreePair tau_on_pair(const LabeledTreePair& pair);

/// An ordered forest of m slots. Zero-edge slots are stored as the empty tree,
/// so a bare root and "_" denote the same slot.
class Forest {
 public:
  explicit Forest(std::vector<RootedPlaneTree> slots);

  const std::vector<RootedPlaneTree>& slots() const noexcept { return slots_; }
  int m() const noexcept { return static_cast<int>(slots_.size()); }
  std::size_t edge_count() const noexcept;
  /// Semicolon-separated slot encodings, "_" for empty slots.
  std::string encode() const;

  friend bool operator==(const Forest&, const Forest&) = default;

 private:
  std::vector<RootedPlaneTree> slots_;
};

Forest parse_forest(std::string_view text);

/// All forests with m slots and ell total edges (ballot(ell, m-1) of them for ell >= 1).
std::vector<Forest> enumerate_forests(int m, int ell, std::uint64_t cap = kDefaultEnumerationCap);

/// The intermediate data of the forest bijection for mu in P^ell(Omega_m).
struct ForestDecomposition {
  int ell = 0;
  int m = 0;
  std::vector<int> tilde;  // tilde[i-1] = mu~(i)
  int low_count = 0;       // |L|; L = [1, |L|]
  int mid_count = 0;       // |M|; M follows L
  int high_count = 0;      // |H|; H = the rest
  /// pairs[p-1] holds the labeled pair placed in slot p, if any.
  std::vector<std::optional<LabeledTreePair>> pairs;
};

ForestDecomposition decompose(const BoundedPartition& mu, int m);
Forest partition_to_forest(const BoundedPartition& mu, int m);
/// Inverse of partition_to_forest. forest.m() must equal m.
BoundedPartition forest_to_partition(const Forest& forest, int m);
/// Labels the cut pairs of a forest jointly; the inverse half of decompose().
ForestDecomposition label_forest(const Forest& forest);

}  // namespace catpart
