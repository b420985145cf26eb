#include "catpart/formats.hpp"

#include "catpart/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <regex>
#include <sstream>

namespace catpart {
namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

json partition_json(const BoundedPartition& mu) { return {{"parts", mu.parts()}, {"bound", mu.bound()}}; }

std::string young(const BoundedPartition& mu) {
  std::string out;
  for (int part : mu.parts()) {
    for (int c = 0; c < part; ++c) out += "[]";
    out += '\n';
  }
  return out;
}

json tree_json(const RootedPlaneTree& tree) {
  if (tree.is_empty()) return nullptr;
  json children = json::array();
  for (const auto& child : tree.children()) children.push_back(tree_json(child));
  return {{"children", children}};
}

json node_json(const LabeledNode& node) {
  json children = json::array();
  for (const auto& child : node.children) children.push_back(node_json(child));
  return {{"label", node.label}, {"children", children}};
}

json pair_json(const LabeledTreePair& pair) {
  return {{"ell", pair.ell}, {"b", pair.b}, {"minus", node_json(pair.minus)}, {"plus", node_json(pair.plus)}};
}

RootedPlaneTree tree_from_json(const json& j) {
  if (j.is_null()) return RootedPlaneTree::empty();
  if (!j.is_object()) throw invalid_argument("tree JSON must be an object or null");
  std::vector<RootedPlaneTree> children;
  if (j.contains("children")) {
    for (const auto& child : j.at("children")) children.push_back(tree_from_json(child));
  }
  return RootedPlaneTree(std::move(children));
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

// Emits every vertex of a tree as a DOT node plus ordinal-tagged edges.
class DotWriter {
 public:
  explicit DotWriter(std::ostringstream& out) : out_(out) {}

  std::string shape_tree(const RootedPlaneTree& tree, const std::string& indent) {
    const std::string id = "n" + std::to_string(next_++);
    out_ << indent << id << " [label=\"\"];\n";
    for (std::size_t i = 0; i < tree.children().size(); ++i) {
      const auto child = shape_tree(tree.children()[i], indent);
      out_ << indent << id << " -> " << child << " [ordinal=" << i + 1 << "];\n";
    }
    return id;
  }

  void labeled(const LabeledNode& node, const std::string& id, const std::string& indent) {
    out_ << indent << '"' << id << "\" [label=\"" << id << "\"];\n";
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      const auto child = std::to_string(node.children[i].label);
      out_ << indent << '"' << id << "\" -> \"" << child << "\" [ordinal=" << i + 1 << "];\n";
      labeled(node.children[i], child, indent);
    }
  }

  void pair_body(const LabeledTreePair& pair, const std::string& indent) {
    labeled(pair.minus, std::to_string(pair.b) + "-", indent);
    labeled(pair.plus, std::to_string(pair.b) + "+", indent);
  }

 private:
  std::ostringstream& out_;
  int next_ = 0;
};

void require_not(Format format, Format banned, const char* what) {
  if (format == banned) {
    throw invalid_argument(std::string(format_name(format)) + " output does not apply to " + what);
  }
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "young-ascii") return Format::young_ascii;
  if (name == "dot") return Format::dot;
  return std::nullopt;
}

std::string_view format_name(Format format) {
  switch (format) {
    case Format::text: return "text";
    case Format::json: return "json";
    case Format::young_ascii: return "young-ascii";
    case Format::dot: return "dot";
  }
  return "unknown";
}

std::string render_partition(const BoundedPartition& mu, Format format) {
  require_not(format, Format::dot, "partitions");
  switch (format) {
    case Format::json: return partition_json(mu).dump() + "\n";
    case Format::young_ascii: return young(mu);
    default: return mu.to_string() + "\n";
  }
}

std::string render_family(const PartitionSet& family, Format format) {
  require_not(format, Format::dot, "partitions");
  std::string out;
  if (format == Format::json) {
    json members = json::array();
    for (const auto& mu : family) members.push_back(partition_json(mu));
    json doc{{"ell", family.ell()}, {"bound", family.bound()}, {"size", family.size()}, {"members", members}};
    return doc.dump(2) + "\n";
  }
  for (const auto& mu : family) {
    if (format == Format::young_ascii) {
      out += "(" + mu.to_string() + ")\n" + young(mu) + "\n";
    } else {
      out += mu.to_string() + "\n";
    }
  }
  return out;
}

BoundedPartition parse_partition_input(std::string_view text, std::optional<int> bound) {
  const auto body = trim(text);
  if (!body.empty() && body.front() == '{') {
    const auto j = parse_json(body);
    try {
      auto parts = j.at("parts").get<std::vector<int>>();
      const int b = j.contains("bound") ? j.at("bound").get<int>() : bound.value_or(parts.empty() ? 1 : parts.front());
      if (bound && *bound != b) {
        throw invalid_argument("partition JSON bound " + std::to_string(b) + " conflicts with expected bound " +
                               std::to_string(*bound));
      }
      return BoundedPartition(std::move(parts), b);
    } catch (const json::exception& e) {
      throw invalid_argument(std::string("partition JSON must hold integer \"parts\": ") + e.what());
    }
  }
  auto partition = parse_partition(body);
  const int b = bound.value_or(partition.first());
  return BoundedPartition(std::move(partition), b);
}

std::string render_tree(const RootedPlaneTree& tree, Format format) {
  require_not(format, Format::young_ascii, "trees");
  if (format == Format::json) return tree_json(tree).dump() + "\n";
  if (format == Format::dot) {
    std::ostringstream out;
    out << "digraph tree {\n";
    if (!tree.is_empty()) DotWriter(out).shape_tree(tree, "  ");
    out << "}\n";
    return out.str();
  }
  return tree.encode() + "\n";
}

std::string render_pair(const LabeledTreePair& pair, Format format) {
  require_not(format, Format::young_ascii, "tree pairs");
  if (format == Format::json) return pair_json(pair).dump(2) + "\n";
  if (format == Format::dot) {
    std::ostringstream out;
    out << "digraph labeled_pair {\n  ell=" << pair.ell << ";\n  b=" << pair.b << ";\n";
    DotWriter(out).pair_body(pair, "  ");
    out << "}\n";
    return out.str();
  }
  return pair.to_string() + "\n";
}

std::string render_forest(const Forest& forest, Format format) {
  require_not(format, Format::young_ascii, "forests");
  if (format == Format::json) {
    json slots = json::array();
    for (const auto& tree : forest.slots()) slots.push_back(tree_json(tree));
    return json{{"slots", slots}}.dump() + "\n";
  }
  if (format == Format::dot) {
    std::ostringstream out;
    out << "digraph forest {\n";
    DotWriter writer(out);
    for (int p = 1; p <= forest.m(); ++p) {
      out << "  subgraph cluster_slot" << p << " {\n    label=\"slot " << p << "\";\n";
      const auto& tree = forest.slots()[p - 1];
      if (tree.is_empty()) {
        out << "    empty" << p << " [label=\"_\", shape=plaintext];\n";
      } else {
        writer.shape_tree(tree, "    ");
      }
      out << "  }\n";
    }
    out << "}\n";
    return out.str();
  }
  return forest.encode() + "\n";
}

std::string render_decomposition(const ForestDecomposition& parts, Format format) {
  require_not(format, Format::young_ascii, "forests");
  const int low_end = parts.low_count;
  const int mid_end = parts.low_count + parts.mid_count;
  if (format == Format::json) {
    json slots = json::array();
    for (const auto& pair : parts.pairs) slots.push_back(pair ? pair_json(*pair) : json(nullptr));
    json doc{{"ell", parts.ell},
             {"m", parts.m},
             {"tilde", parts.tilde},
             {"L", {1, low_end}},
             {"M", {low_end + 1, mid_end}},
             {"H", {mid_end + 1, parts.ell}},
             {"slots", slots}};
    return doc.dump(2) + "\n";
  }
  if (format == Format::dot) {
    std::ostringstream out;
    out << "digraph labeled_forest {\n  ell=" << parts.ell << ";\n  m=" << parts.m << ";\n";
    DotWriter writer(out);
    for (int p = 1; p <= parts.m; ++p) {
      out << "  subgraph cluster_slot" << p << " {\n    label=\"slot " << p << "\";\n";
      if (const auto& pair = parts.pairs[p - 1]) {
        writer.pair_body(*pair, "    ");
      } else {
        out << "    empty" << p << " [label=\"_\", shape=plaintext];\n";
      }
      out << "  }\n";
    }
    out << "}\n";
    return out.str();
  }
  std::ostringstream out;
  out << "L=[1," << low_end << "] M=[" << low_end + 1 << "," << mid_end << "] H=[" << mid_end + 1 << ","
      << parts.ell << "]\n";
  for (int p = 1; p <= parts.m; ++p) {
    out << "slot " << p << ": ";
    if (const auto& pair = parts.pairs[p - 1]) {
      out << pair->to_string() << "\n";
    } else {
      out << "_\n";
    }
  }
  return out.str();
}

LabeledTreePair parse_pair_dot(std::string_view dot) {
  static const std::regex graph_attr(R"(^\s*(ell|b)\s*=\s*(\d+)\s*;)");
  static const std::regex edge(R"re(^\s*"([0-9]+[-+]?)"\s*->\s*"([0-9]+)"\s*\[\s*ordinal\s*=\s*(\d+)\s*\])re");
  std::optional<int> ell;
  std::optional<int> b;
  // parent id -> (ordinal, child label)
  std::map<std::string, std::vector<std::pair<int, int>>> kids;
  std::istringstream in{std::string(dot)};
  std::string line;
  std::smatch match;
  while (std::getline(in, line)) {
    if (std::regex_search(line, match, graph_attr)) {
      (match[1] == "ell" ? ell : b) = std::stoi(match[2]);
    } else if (std::regex_search(line, match, edge)) {
      kids[match[1]].emplace_back(std::stoi(match[3]), std::stoi(match[2]));
    }
  }
  if (!ell || !b) throw invalid_argument("DOT pair lacks ell/b graph attributes");

  std::size_t used = 0;
  auto build = [&](auto&& self, const std::string& id, int label) -> LabeledNode {
    LabeledNode node{label, {}};
    auto it = kids.find(id);
    if (it == kids.end()) return node;
    auto children = it->second;
    std::sort(children.begin(), children.end());
    for (std::size_t i = 0; i < children.size(); ++i) {
      if (children[i].first != static_cast<int>(i) + 1) {
        throw invalid_argument("DOT ordinals under " + id + " are not 1..n");
      }
      if (++used > static_cast<std::size_t>(*ell)) throw invalid_argument("DOT pair has too many vertices");
      node.children.push_back(self(self, std::to_string(children[i].second), children[i].second));
    }
    return node;
  };
  LabeledTreePair pair;
  pair.ell = *ell;
  pair.b = *b;
  pair.minus = build(build, std::to_string(*b) + "-", *b);
  pair.plus = build(build, std::to_string(*b) + "+", *b);
  labeled_pair_to_partition(pair);  // validates the labeling
  return pair;
}

TreePair parse_pair_input(std::string_view text) {
  const auto body = trim(text);
  if (!body.empty() && body.front() == '{') {
    const auto j = parse_json(body);
    if (!j.contains("minus") || !j.contains("plus")) {
      throw invalid_argument("pair JSON needs \"minus\" and \"plus\" trees");
    }
    return {tree_from_json(j.at("minus")), tree_from_json(j.at("plus"))};
  }
  return parse_pair(body);
}

Forest parse_forest_input(std::string_view text) {
  const auto body = trim(text);
  if (!body.empty() && body.front() == '{') {
    const auto j = parse_json(body);
    if (!j.contains("slots") || !j.at("slots").is_array()) {
      throw invalid_argument("forest JSON needs a \"slots\" array");
    }
    std::vector<RootedPlaneTree> slots;
    for (const auto& slot : j.at("slots")) slots.push_back(tree_from_json(slot));
    return Forest(std::move(slots));
  }
  return parse_forest(body);
}

}  // namespace catpart
