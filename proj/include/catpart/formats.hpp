#pragma once

#include "catpart/families.hpp"
#include "catpart/partition.hpp"
#include "catpart/trees.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace catpart {

enum class Format { text, json, young_ascii, dot };

/// "text", "json", "young-ascii", "dot".
std::optional<Format> parse_format(std::string_view name);
std::string_view format_name(Format format);

// Partitions: text is the comma-separated form, json is {"parts":[...],"bound":k},
// young-ascii draws row i as parts[i] cells "[]", first part on top.
std::string render_partition(const BoundedPartition& mu, Format format);
std::string render_family(const PartitionSet& family, Format format);

/// Accepts "7,6,5" (bound taken from `bound`, or the largest part when absent)
/// or a JSON object {"parts":[...],"bound":k}.
BoundedPartition parse_partition_input(std::string_view text, std::optional<int> bound = std::nullopt);

// Trees use the nested {"label":optional,"children":[...]} schema in JSON.
// DOT output numbers each edge with an `ordinal` attribute giving the child's
// left-to-right position, since DOT itself does not fix sibling order.
std::string render_tree(const RootedPlaneTree& tree, Format format);
std::string render_pair(const LabeledTreePair& pair, Format format);
/// Forest JSON is {"slots":[tree|null,...]}, null standing for an empty slot.
std::string render_forest(const Forest& forest, Format format);
/// The labeled pairs behind a forest, slot by slot.
std::string render_decomposition(const ForestDecomposition& parts, Format format);

/// Parses the DOT written by render_pair(..., Format::dot).
LabeledTreePair parse_pair_dot(std::string_view dot);

/// Accepts a tree/pair in text form ("T-|T+" or a single tree to be cut) or
/// JSON {"minus":tree,"plus":tree}.
TreePair parse_pair_input(std::string_view text);
/// Accepts "a;b;_" or JSON {"slots":[...]}.
Forest parse_forest_input(std::string_view text);

}  // namespace catpart
