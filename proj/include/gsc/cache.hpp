#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gsc/code_graph.hpp"

namespace gsc {

struct WordSplit {
  std::string original;
  std::vector<std::string> words;
};

// Splits an identifier on underscores, lower-to-upper transitions and
// acronym-to-word transitions ("XMLParser" -> xml, parser). Digits stay with
// the preceding segment. Words are lowercased.
WordSplit split_name(std::string_view name);

enum class CacheMode { kFullGsc, kPointerSentinelNoEdges };

inline constexpr std::string_view kCacheConstruct = "CacheNode";

// Adds one cache node per distinct word over all variable-node names, in
// sorted word order. In kFullGsc mode each cache node gets a WORD_USE edge to
// every variable node whose name contains the word. Returns the number of
// cache nodes added. Throws std::logic_error if the graph already has cache
// nodes or reversed edges.
std::size_t build_cache(CodeGraph& graph, CacheMode mode);

}  // namespace gsc
