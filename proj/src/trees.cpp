#include "catpart/trees.hpp"

#include "catpart/closed_form.hpp"
#include "catpart/counting.hpp"
#include "catpart/error.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace catpart {
namespace {

void check_cap(const ExactInteger& predicted, std::uint64_t cap, const char* what) {
  if (predicted > cap) {
    throw cap_exceeded(std::string(what) + ": " + counting::to_decimal(predicted) +
                       " structures exceed the enumeration cap of " + std::to_string(cap));
  }
}

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  RootedPlaneTree parse() {
    if (text_ == "_") return RootedPlaneTree::empty();
    auto tree = node();
    if (pos_ != text_.size()) fail("trailing characters");
    return tree;
  }

 private:
  RootedPlaneTree node() {
    expect('(');
    std::vector<RootedPlaneTree> children;
    while (pos_ < text_.size() && text_[pos_] == '(') children.push_back(node());
    expect(')');
    return RootedPlaneTree(std::move(children));
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw invalid_argument("cannot parse tree '" + std::string(text_) + "' at offset " +
                           std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

LabeledNode blank_copy(const RootedPlaneTree& tree) {
  LabeledNode node;
  node.children.reserve(tree.children().size());
  for (const auto& child : tree.children()) node.children.push_back(blank_copy(child));
  return node;
}

// levels[d] lists the vertices at depth d (root = depth 1) left to right.
using Levels = std::vector<std::vector<LabeledNode*>>;

Levels collect_levels(LabeledNode& root) {
  Levels levels(2);
  levels[1].push_back(&root);
  for (std::size_t d = 1; d < levels.size(); ++d) {
    std::vector<LabeledNode*> next;
    for (auto* node : levels[d]) {
      for (auto& child : node->children) next.push_back(&child);
    }
    if (!next.empty()) levels.push_back(std::move(next));
  }
  return levels;
}

struct JointLabeling {
  std::vector<LabeledTreePair> pairs;  // slot order
  std::vector<int> tilde;              // tilde[i-1]
  int low_count = 0;
  int high_count = 0;
};

// Labels a sequence of pairs jointly. Depth runs deepest first. At a given
// depth the T- trees are read in slot order and the T+ trees in reverse slot
// order, each tree left to right; for a single pair this is the plain
// deepest-first, left-to-right rule.
JointLabeling label_jointly(const std::vector<TreePair>& shapes, int ell) {
  const std::size_t r = shapes.size();
  std::size_t non_roots = 0;
  for (const auto& pair : shapes) non_roots += pair.edge_count();
  if (ell < 1 || non_roots + r != static_cast<std::size_t>(ell)) {
    throw invalid_argument("tree pairs carry " + std::to_string(non_roots) + " edges across " +
                           std::to_string(r) + " pair(s), which does not match ell=" +
                           std::to_string(ell));
  }

  JointLabeling out;
  out.pairs.resize(r);
  std::vector<Levels> minus_levels(r);
  std::vector<Levels> plus_levels(r);
  std::size_t depth = 1;
  for (std::size_t j = 0; j < r; ++j) {
    out.pairs[j].ell = ell;
    out.pairs[j].minus = blank_copy(shapes[j].minus);
    out.pairs[j].plus = blank_copy(shapes[j].plus);
    minus_levels[j] = collect_levels(out.pairs[j].minus);
    plus_levels[j] = collect_levels(out.pairs[j].plus);
    depth = std::max({depth, minus_levels[j].size() - 1, plus_levels[j].size() - 1});
  }

  auto visit = [&](std::vector<Levels>& side, std::size_t d, bool reversed, auto&& assign) {
    for (std::size_t n = 0; n < r; ++n) {
      const std::size_t j = reversed ? r - 1 - n : n;
      if (d < side[j].size()) {
        for (auto* node : side[j][d]) assign(*node);
      }
    }
  };

  int next_low = 1;
  int next_high = ell;
  for (std::size_t d = depth; d >= 2; --d) {
    if (d % 2 == 1) {
      visit(minus_levels, d, false, [&](LabeledNode& v) { v.label = next_low++; });
    } else {
      visit(plus_levels, d, true, [&](LabeledNode& v) { v.label = next_low++; });
    }
  }
  for (std::size_t d = depth; d >= 2; --d) {
    if (d % 2 == 0) {
      visit(minus_levels, d, false, [&](LabeledNode& v) { v.label = next_high--; });
    } else {
      visit(plus_levels, d, true, [&](LabeledNode& v) { v.label = next_high--; });
    }
  }
  out.low_count = next_low - 1;
  out.high_count = ell - next_high;

  out.tilde.assign(static_cast<std::size_t>(ell), 0);
  std::function<void(const LabeledNode&)> record = [&](const LabeledNode& node) {
    for (const auto& child : node.children) {
      out.tilde[child.label - 1] = node.label;
      record(child);
    }
  };
  for (std::size_t j = 0; j < r; ++j) {
    const int b = out.low_count + 1 + static_cast<int>(j);
    auto& pair = out.pairs[j];
    pair.b = b;
    pair.minus.label = b;
    pair.plus.label = b;
    out.tilde[b - 1] = b;
    record(pair.minus);
    record(pair.plus);
  }
  return out;
}

enum class LabelClass { low, mid, high };

// Rebuilds the labeled pairs from mu~ given the interval split L | M | H.
// Children are ordered increasingly when they lie in L and decreasingly when
// they lie in H; every vertex must receive children of a single class, the
// class opposite to its own.
std::vector<LabeledTreePair> build_labeled_pairs(const std::vector<int>& tilde, int low_count,
                                                 int mid_count) {
  const auto ell = static_cast<int>(tilde.size());
  auto class_of = [&](int i) {
    if (i <= low_count) return LabelClass::low;
    if (i <= low_count + mid_count) return LabelClass::mid;
    return LabelClass::high;
  };

  std::vector<std::vector<int>> kids(static_cast<std::size_t>(ell) + 1);
  std::vector<std::vector<int>> plus_kids(static_cast<std::size_t>(ell) + 1);
  std::vector<std::vector<int>> minus_kids(static_cast<std::size_t>(ell) + 1);
  for (int i = 1; i <= ell; ++i) {
    const auto cls = class_of(i);
    if (cls == LabelClass::mid) continue;
    const int parent = tilde[i - 1];
    const auto parent_cls = class_of(parent);
    if (parent_cls == cls) {
      throw internal_error("vertex " + std::to_string(i) + " and its parent " + std::to_string(parent) +
                           " fall in the same label class");
    }
    if (parent_cls == LabelClass::mid) {
      (cls == LabelClass::low ? plus_kids : minus_kids)[parent].push_back(i);
    } else {
      kids[parent].push_back(i);
    }
  }

  auto order = [&](std::vector<int>& v) {
    if (!v.empty() && class_of(v.front()) == LabelClass::high) {
      std::sort(v.begin(), v.end(), std::greater<>());
    } else {
      std::sort(v.begin(), v.end());
    }
  };

  std::size_t built = 0;
  std::function<LabeledNode(int, const std::vector<int>&)> build = [&](int label,
                                                                       const std::vector<int>& children) {
    LabeledNode node{label, {}};
    auto sorted = children;
    order(sorted);
    for (int c : sorted) {
      ++built;
      if (built > static_cast<std::size_t>(ell)) throw internal_error("cycle in parent map");
      node.children.push_back(build(c, kids[c]));
    }
    return node;
  };

  std::vector<LabeledTreePair> pairs;
  for (int b = low_count + 1; b <= low_count + mid_count; ++b) {
    LabeledTreePair pair;
    pair.ell = ell;
    pair.b = b;
    pair.minus = build(b, minus_kids[b]);
    pair.plus = build(b, plus_kids[b]);
    pairs.push_back(std::move(pair));
  }
  if (built + static_cast<std::size_t>(mid_count) != static_cast<std::size_t>(ell)) {
    throw internal_error("parent map does not form a forest rooted at the fixed points");
  }
  return pairs;
}

void relabel_dual(LabeledNode& node, int ell) {
  node.label = ell + 1 - node.label;
  for (auto& child : node.children) relabel_dual(child, ell);
}

std::string node_string(const LabeledNode& node) {
  std::string out = std::to_string(node.label);
  if (!node.children.empty()) {
    out += '(';
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      if (i) out += ' ';
      out += node_string(node.children[i]);
    }
    out += ')';
  }
  return out;
}

std::string children_string(const LabeledNode& root) {
  std::string s = node_string(root);
  const auto open = s.find('(');
  return open == std::string::npos ? std::string() : s.substr(open);
}

BoundedPartition to_partition_checked(std::vector<int> parts, int bound, const char* what) {
  try {
    return BoundedPartition(std::move(parts), bound);
  } catch (const Error& e) {
    throw internal_error(std::string(what) + " produced a non-partition: " + e.what());
  }
}

}  // namespace

RootedPlaneTree::RootedPlaneTree(std::vector<RootedPlaneTree> children) : children_(std::move(children)) {
  for (const auto& child : children_) {
    if (child.is_empty()) throw invalid_argument("a subtree cannot be the empty tree");
  }
}

RootedPlaneTree RootedPlaneTree::empty() {
  RootedPlaneTree tree;
  tree.empty_ = true;
  return tree;
}

std::size_t RootedPlaneTree::edge_count() const noexcept {
  if (empty_) return 0;
  return vertex_count() - 1;
}

std::size_t RootedPlaneTree::vertex_count() const noexcept {
  if (empty_) return 0;
  std::size_t n = 1;
  for (const auto& child : children_) n += child.vertex_count();
  return n;
}

std::string RootedPlaneTree::encode() const {
  if (empty_) return "_";
  std::string out = "(";
  for (const auto& child : children_) out += child.encode();
  out += ')';
  return out;
}

RootedPlaneTree parse_tree(std::string_view text) {
  const auto compact = strip_spaces(text);
  return TreeParser(compact).parse();
}

TreePair::TreePair(RootedPlaneTree minus_tree, RootedPlaneTree plus_tree)
    : minus(std::move(minus_tree)), plus(std::move(plus_tree)) {
  if (minus.is_empty() || plus.is_empty()) throw invalid_argument("both trees of a pair must be nonempty");
}

TreePair parse_pair(std::string_view text) {
  const auto compact = strip_spaces(text);
  const auto bar = compact.find('|');
  if (bar == std::string::npos) return cut(parse_tree(compact));
  return {parse_tree(compact.substr(0, bar)), parse_tree(compact.substr(bar + 1))};
}

TreePair cut(const RootedPlaneTree& tree) {
  if (tree.is_empty() || tree.children().empty()) {
    throw invalid_argument("cut: tree " + tree.encode() + " has no branch to cut");
  }
  auto rest = tree.children();
  auto plus = std::move(rest.back());
  rest.pop_back();
  return {RootedPlaneTree(std::move(rest)), std::move(plus)};
}

RootedPlaneTree attach(const TreePair& pair) {
  auto children = pair.minus.children();
  children.push_back(pair.plus);
  return RootedPlaneTree(std::move(children));
}

std::vector<RootedPlaneTree> enumerate_trees(int n_edges, std::uint64_t cap) {
  if (n_edges < 0) throw invalid_argument("enumerate_trees: edge count must be nonnegative");
  check_cap(counting::catalan(n_edges), cap, "enumerate_trees");
  // sequences[n]: ordered child lists whose subtrees total n vertices.
  std::vector<std::vector<std::vector<RootedPlaneTree>>> sequences(static_cast<std::size_t>(n_edges) + 1);
  std::vector<std::vector<RootedPlaneTree>> trees(static_cast<std::size_t>(n_edges) + 1);
  sequences[0] = {{}};
  for (int n = 0; n <= n_edges; ++n) {
    if (n > 0) {
      for (int first = 0; first < n; ++first) {
        for (const auto& head : trees[first]) {
          for (const auto& rest : sequences[n - 1 - first]) {
            std::vector<RootedPlaneTree> seq;
            seq.reserve(rest.size() + 1);
            seq.push_back(head);
            seq.insert(seq.end(), rest.begin(), rest.end());
            sequences[n].push_back(std::move(seq));
          }
        }
      }
    }
    for (const auto& seq : sequences[n]) trees[n].emplace_back(seq);
  }
  return std::move(trees[n_edges]);
}

std::vector<TreePair> enumerate_pairs(int total_edges, std::uint64_t cap) {
  std::vector<TreePair> out;
  for (const auto& tree : enumerate_trees(total_edges + 1, cap)) out.push_back(cut(tree));
  return out;
}

RootedPlaneTree LabeledNode::shape() const {
  std::vector<RootedPlaneTree> kids;
  kids.reserve(children.size());
  for (const auto& child : children) kids.push_back(child.shape());
  return RootedPlaneTree(std::move(kids));
}

std::string LabeledTreePair::to_string() const {
  const auto root = std::to_string(b);
  return root + "-" + children_string(minus) + " | " + root + "+" + children_string(plus);
}

LabeledTreePair label_pair(const TreePair& pair, int ell) {
  auto joint = label_jointly({pair}, ell);
  return std::move(joint.pairs.front());
}

BoundedPartition pair_to_partition(const TreePair& pair, int ell) {
  auto joint = label_jointly({pair}, ell);
  auto mu = to_partition_checked(std::move(joint.tilde), ell, "pair_to_partition");
  if (!member_square(mu, SquarePartition(std::vector<int>{1}))) {
    throw internal_error("pair_to_partition: " + mu.to_string() + " is not in P^ell((1))");
  }
  return mu;
}

BoundedPartition labeled_pair_to_partition(const LabeledTreePair& pair) {
  const int ell = pair.ell;
  if (ell < 1 || pair.b < 1 || pair.b > ell || pair.minus.label != pair.b || pair.plus.label != pair.b) {
    throw invalid_argument("labeled pair roots must both carry b in [1, ell]");
  }
  std::vector<int> parent(static_cast<std::size_t>(ell), 0);
  parent[pair.b - 1] = pair.b;
  std::function<void(const LabeledNode&)> walk = [&](const LabeledNode& node) {
    for (const auto& child : node.children) {
      if (child.label < 1 || child.label > ell || parent[child.label - 1] != 0) {
        throw invalid_argument("labeled pair uses label " + std::to_string(child.label) +
                               " twice or outside [1, " + std::to_string(ell) + "]");
      }
      parent[child.label - 1] = node.label;
      walk(child);
    }
  };
  walk(pair.minus);
  walk(pair.plus);
  if (std::find(parent.begin(), parent.end(), 0) != parent.end()) {
    throw invalid_argument("labeled pair does not use every label of [ell]");
  }
  return BoundedPartition(std::move(parent), ell);
}

LabeledTreePair partition_to_pair(const BoundedPartition& mu) {
  const SquarePartition unit(std::vector<int>{1});
  if (static_cast<int>(mu.size()) != mu.bound() || !member_square(mu, unit)) {
    throw domain_error("partition_to_pair: " + mu.to_string() + " is not in P^ell((1))");
  }
  const int b = find_square_core(mu).b;
  auto pairs = build_labeled_pairs(mu.parts(), b - 1, 1);
  return std::move(pairs.front());
}

LabeledTreePair tau_on_pair(const LabeledTreePair& pair) {
  LabeledTreePair out;
  out.ell = pair.ell;
  out.b = pair.ell + 1 - pair.b;
  out.minus = pair.plus;
  out.plus = pair.minus;
  relabel_dual(out.minus, pair.ell);
  relabel_dual(out.plus, pair.ell);
  return out;
}

Forest::Forest(std::vector<RootedPlaneTree> slots) : slots_(std::move(slots)) {
  if (slots_.empty()) throw invalid_argument("a forest needs at least one slot");
  for (auto& slot : slots_) {
    if (slot.edge_count() == 0) slot = RootedPlaneTree::empty();
  }
}

std::size_t Forest::edge_count() const noexcept {
  std::size_t n = 0;
  for (const auto& slot : slots_) n += slot.edge_count();
  return n;
}

std::string Forest::encode() const {
  std::string out;
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (i) out += ';';
    out += slots_[i].encode();
  }
  return out;
}

Forest parse_forest(std::string_view text) {
  const auto compact = strip_spaces(text);
  std::vector<RootedPlaneTree> slots;
  std::size_t pos = 0;
  while (true) {
    const auto semi = compact.find(';', pos);
    slots.push_back(parse_tree(std::string_view(compact).substr(pos, semi == std::string::npos
                                                                          ? std::string::npos
                                                                          : semi - pos)));
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  return Forest(std::move(slots));
}

std::vector<Forest> enumerate_forests(int m, int ell, std::uint64_t cap) {
  if (m < 1 || ell < 0) throw invalid_argument("enumerate_forests: need m >= 1 and ell >= 0");
  check_cap(counting::generalized_catalan(2, m, ell), cap, "enumerate_forests");
  std::vector<std::vector<RootedPlaneTree>> by_edges;
  for (int e = 0; e <= ell; ++e) by_edges.push_back(e == 0 ? std::vector{RootedPlaneTree::empty()}
                                                           : enumerate_trees(e, cap));
  std::vector<Forest> out;
  std::vector<RootedPlaneTree> slots;
  std::function<void(int)> fill = [&](int remaining) {
    if (static_cast<int>(slots.size()) == m - 1) {
      for (const auto& t : by_edges[remaining]) {
        slots.push_back(t);
        out.emplace_back(slots);
        slots.pop_back();
      }
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      for (const auto& t : by_edges[e]) {
        slots.push_back(t);
        fill(remaining - e);
        slots.pop_back();
      }
    }
  };
  fill(ell);
  return out;
}

ForestDecomposition decompose(const BoundedPartition& mu, int m) {
  if (!member_omega(mu, m)) {
    throw domain_error("partition_to_forest: " + mu.to_string() + " is not in P^ell(Omega_" +
                       std::to_string(m) + ")");
  }
  const auto ell = static_cast<int>(mu.size());
  ForestDecomposition out;
  out.ell = ell;
  out.m = m;
  out.tilde = mu_tilde(mu, m).values;
  for (int i = 1; i <= ell; ++i) {
    const int v = out.tilde[i - 1];
    auto& count = v > i ? out.low_count : v == i ? out.mid_count : out.high_count;
    ++count;
    // L, M, H must be consecutive intervals in that order.
    if ((v > i && (out.mid_count || out.high_count)) || (v == i && out.high_count)) {
      throw internal_error("L/M/H are not intervals for " + mu.to_string());
    }
  }
  auto pairs = build_labeled_pairs(out.tilde, out.low_count, out.mid_count);
  out.pairs.resize(static_cast<std::size_t>(m));
  int previous = 0;
  for (auto& pair : pairs) {
    const int slot = m - mu(pair.b) + pair.b;
    if (slot <= previous || slot > m) {
      throw internal_error("slot positions are not strictly increasing within [m] for " + mu.to_string());
    }
    previous = slot;
    out.pairs[slot - 1] = std::move(pair);
  }
  return out;
}

Forest partition_to_forest(const BoundedPartition& mu, int m) {
  const auto parts = decompose(mu, m);
  std::vector<RootedPlaneTree> slots;
  for (const auto& pair : parts.pairs) {
    slots.push_back(pair ? attach(pair->shape()) : RootedPlaneTree::empty());
  }
  Forest forest(std::move(slots));
  if (forest.edge_count() != static_cast<std::size_t>(parts.ell)) {
    throw internal_error("partition_to_forest: edge count differs from ell");
  }
  return forest;
}

ForestDecomposition label_forest(const Forest& forest) {
  const int ell = static_cast<int>(forest.edge_count());
  if (ell < 1) throw invalid_argument("forest must carry at least one edge");
  std::vector<TreePair> shapes;
  std::vector<int> positions;
  for (int p = 1; p <= forest.m(); ++p) {
    const auto& tree = forest.slots()[p - 1];
    if (tree.is_empty()) continue;
    shapes.push_back(cut(tree));
    positions.push_back(p);
  }
  auto joint = label_jointly(shapes, ell);
  ForestDecomposition out;
  out.ell = ell;
  out.m = forest.m();
  out.tilde = std::move(joint.tilde);
  out.low_count = joint.low_count;
  out.mid_count = static_cast<int>(shapes.size());
  out.high_count = joint.high_count;
  out.pairs.resize(static_cast<std::size_t>(forest.m()));
  for (std::size_t j = 0; j < shapes.size(); ++j) out.pairs[positions[j] - 1] = std::move(joint.pairs[j]);
  return out;
}

BoundedPartition forest_to_partition(const Forest& forest, int m) {
  if (forest.m() != m) {
    throw invalid_argument("forest has " + std::to_string(forest.m()) + " slots, expected m=" +
                           std::to_string(m));
  }
  const auto parts = label_forest(forest);
  std::vector<int> mu(parts.tilde.size());
  for (int i = 1; i <= parts.ell; ++i) {
    const int v = parts.tilde[i - 1];
    mu[i - 1] = v > i ? v + m - 1 : v;
  }
  for (int p = 1; p <= m; ++p) {
    if (const auto& pair = parts.pairs[p - 1]) mu[pair->b - 1] = m - p + pair->b;
  }
  auto result = to_partition_checked(std::move(mu), parts.ell + m - 1, "forest_to_partition");
  if (!member_omega(result, m)) {
    throw internal_error("forest_to_partition: " + result.to_string() + " is not in P^ell(Omega_m)");
  }
  return result;
}

}  // namespace catpart
