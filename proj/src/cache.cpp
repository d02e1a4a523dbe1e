#include "gsc/cache.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace gsc {

namespace {

bool is_upper(char ch) { return std::isupper(static_cast<unsigned char>(ch)) != 0; }
bool is_lower(char ch) { return std::islower(static_cast<unsigned char>(ch)) != 0; }
bool is_digit(char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; }

}  // namespace

WordSplit split_name(std::string_view name) {
  WordSplit result{std::string(name), {}};
  std::string current;
  auto flush = [&] {
    if (!current.empty()) result.words.push_back(std::move(current));
    current.clear();
  };
  for (std::size_t i = 0; i < name.size(); ++i) {
    const char ch = name[i];
    if (!is_upper(ch) && !is_lower(ch) && !is_digit(ch)) {
      flush();
      continue;
    }
    if (is_upper(ch) && !current.empty()) {
      const char prev = name[i - 1];
      const bool after_lower = is_lower(prev) || is_digit(prev);
      const bool acronym_end = is_upper(prev) && i + 1 < name.size() && is_lower(name[i + 1]);
      if (after_lower || acronym_end) flush();
    }
    current.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  flush();
  return result;
}

std::size_t build_cache(CodeGraph& graph, CacheMode mode) {
  if (graph.has_reverse_edges()) throw std::logic_error("cache must be built before reverse edges");
  std::map<std::string, std::vector<std::size_t>> users;
  for (std::size_t id = 0; id < graph.nodes.size(); ++id) {
    const GraphNode& n = graph.nodes[id];
    if (n.kind == NodeKind::kCache) throw std::logic_error("graph already has cache nodes");
    if (n.kind != NodeKind::kVariable || !n.name) continue;
    auto words = split_name(*n.name).words;
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    for (auto& w : words) users[w].push_back(id);
  }
  for (const auto& [word, vars] : users) {
    GraphNode cache;
    cache.kind = NodeKind::kCache;
    cache.construct = std::string(kCacheConstruct);
    cache.name = word;
    cache.type = std::string(kCacheNodeType);
    const std::size_t cid = graph.add_node(std::move(cache));
    if (mode == CacheMode::kFullGsc) {
      for (std::size_t v : vars) graph.add_edge(cid, v, EdgeType::kWordUse);
    }
  }
  return users.size();
}

}  // namespace gsc
