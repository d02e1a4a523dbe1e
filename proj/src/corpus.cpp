#include "gsc/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "gsc/lexer.hpp"
#include "gsc/random.hpp"

namespace gsc {

namespace fs = std::filesystem;

ScanResult scan_corpus(const fs::path& root, std::string_view extension) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) throw std::runtime_error("corpus root is not a readable directory: " + root.string());
  ScanResult result;
  std::vector<fs::path> files;
  for (auto it = fs::recursive_directory_iterator(root, fs::directory_options::skip_permission_denied, ec);
       it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (ec) {
      result.warnings.push_back({it->path().string(), ec.message()});
      ec.clear();
      continue;
    }
    const fs::path& p = it->path();
    if (p.extension() != extension) continue;
    if (it->is_directory(ec)) continue;
    files.push_back(p);
  }
  for (const fs::path& p : files) {
    const fs::path rel = p.lexically_relative(root);
    auto part = rel.begin();
    std::string repo = part->string();
    fs::path rest;
    for (++part; part != rel.end(); ++part) rest /= *part;
    if (rest.empty()) {
      rest = repo;
      repo = ".";
    }
    std::ifstream in(p, std::ios::binary);
    if (!in) {
      result.warnings.push_back({rel.generic_string(), "unreadable file"});
      continue;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    if (std::all_of(text.begin(), text.end(), [](unsigned char ch) { return std::isspace(ch); })) {
      result.warnings.push_back({rel.generic_string(), "empty file"});
      continue;
    }
    result.units.push_back({repo, rest.generic_string(), std::move(text)});
  }
  if (result.units.empty()) throw std::runtime_error("empty corpus");
  std::sort(result.units.begin(), result.units.end(), [](const SourceUnit& a, const SourceUnit& b) {
    return std::tie(a.repo_id, a.path) < std::tie(b.repo_id, b.path);
  });
  return result;
}

nlohmann::json DatasetSplit::to_json() const {
  return {{"seed", seed},
          {"train", train},
          {"validation", validation},
          {"seen_test", seen_test},
          {"unseen_test", unseen_test}};
}

DatasetSplit DatasetSplit::from_json(const nlohmann::json& j) {
  DatasetSplit s;
  s.seed = j.at("seed").get<std::uint64_t>();
  s.train = j.at("train").get<std::vector<std::string>>();
  s.validation = j.at("validation").get<std::vector<std::string>>();
  s.seen_test = j.at("seen_test").get<std::vector<std::string>>();
  s.unseen_test = j.at("unseen_test").get<std::vector<std::string>>();
  return s;
}

DatasetSplit split_dataset(const std::vector<SourceUnit>& units, std::size_t unseen_repo_count,
                           double seen_file_fraction, double val_fraction, std::uint64_t seed) {
  auto in_open_unit = [](double f) { return f > 0.0 && f < 1.0; };
  if (!in_open_unit(seen_file_fraction) || !in_open_unit(val_fraction)) {
    throw std::invalid_argument("split fractions must lie in (0, 1)");
  }
  std::set<std::string> repo_set;
  for (const auto& u : units) repo_set.insert(u.repo_id);
  if (repo_set.size() < unseen_repo_count + 1) {
    throw std::invalid_argument("need at least " + std::to_string(unseen_repo_count + 1) + " repos, found " +
                                std::to_string(repo_set.size()));
  }
  std::vector<std::string> repos(repo_set.begin(), repo_set.end());
  Rng repo_rng(derive_seed(seed, "repos"));
  repo_rng.shuffle(repos);
  const std::set<std::string> unseen(repos.begin(), repos.begin() + static_cast<std::ptrdiff_t>(unseen_repo_count));

  DatasetSplit split;
  split.seed = seed;
  std::vector<std::string> remaining;
  for (const auto& u : units) {
    (unseen.count(u.repo_id) ? split.unseen_test : remaining).push_back(u.key());
  }
  std::sort(remaining.begin(), remaining.end());
  Rng file_rng(derive_seed(seed, "files"));
  file_rng.shuffle(remaining);
  const auto n_seen = static_cast<std::size_t>(std::llround(seen_file_fraction * static_cast<double>(remaining.size())));
  const auto n_val =
      static_cast<std::size_t>(std::llround(val_fraction * static_cast<double>(remaining.size() - n_seen)));
  for (std::size_t i = 0; i < remaining.size(); ++i) {
    auto& dst = i < n_seen ? split.seen_test : (i < n_seen + n_val ? split.validation : split.train);
    dst.push_back(remaining[i]);
  }
  for (auto* list : {&split.train, &split.validation, &split.seen_test, &split.unseen_test}) {
    std::sort(list->begin(), list->end());
  }
  return split;
}

std::vector<LineToken> line_tokens(std::string_view text) {
  std::vector<LineToken> out;
  try {
    for (auto& t : tokenize(text)) out.push_back({std::move(t.text), t.line});
    return out;
  } catch (const ParseError&) {
    out.clear();
  }
  int line = 1;
  std::string cur;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) out.push_back({std::move(cur), line});
      cur.clear();
      if (ch == '\n') ++line;
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back({std::move(cur), line});
  return out;
}

nlohmann::json DuplicationReport::to_json() const {
  nlohmann::json locs = nlohmann::json::array();
  for (const auto& r : locations) locs.push_back({{"file", r.file}, {"first_line", r.first_line}, {"last_line", r.last_line}});
  return {{"fraction", fraction},
          {"total_lines", total_lines},
          {"duplicated_lines", duplicated_lines},
          {"locations", std::move(locs)}};
}

DuplicationReport detect_duplication(const std::vector<SourceUnit>& units, std::size_t min_token_run) {
  if (min_token_run < 1) throw std::invalid_argument("min_token_run must be at least 1");
  const std::size_t w = min_token_run;
  std::vector<std::vector<LineToken>> files;
  std::vector<std::vector<std::uint64_t>> hashes;
  for (const auto& u : units) {
    files.push_back(line_tokens(u.text));
    std::vector<std::uint64_t> h;
    for (const auto& t : files.back()) h.push_back(fnv1a(t.text));
    hashes.push_back(std::move(h));
  }

  // Polynomial rolling hash over token hashes; buckets hold (file, start).
  constexpr std::uint64_t kBase = 1000003ULL;
  std::uint64_t base_pow = 1;
  for (std::size_t i = 1; i < w; ++i) base_pow *= kBase;
  std::unordered_map<std::uint64_t, std::vector<std::pair<std::size_t, std::size_t>>> buckets;
  for (std::size_t f = 0; f < files.size(); ++f) {
    const auto& h = hashes[f];
    if (h.size() < w) continue;
    std::uint64_t roll = 0;
    for (std::size_t i = 0; i < w; ++i) roll = roll * kBase + h[i];
    buckets[roll].push_back({f, 0});
    for (std::size_t s = 1; s + w <= h.size(); ++s) {
      roll = (roll - h[s - 1] * base_pow) * kBase + h[s + w - 1];
      buckets[roll].push_back({f, s});
    }
  }

  auto same_window = [&](std::pair<std::size_t, std::size_t> a, std::pair<std::size_t, std::size_t> b) {
    for (std::size_t i = 0; i < w; ++i) {
      if (files[a.first][a.second + i].text != files[b.first][b.second + i].text) return false;
    }
    return true;
  };
  std::vector<std::vector<bool>> covered(files.size());
  for (std::size_t f = 0; f < files.size(); ++f) covered[f].assign(files[f].size(), false);
  for (const auto& [hash, windows] : buckets) {
    if (windows.size() < 2) continue;
    // Group exact-equal windows; a collision never merges distinct windows.
    std::vector<bool> matched(windows.size(), false);
    for (std::size_t i = 0; i < windows.size(); ++i) {
      for (std::size_t j = i + 1; j < windows.size(); ++j) {
        if ((matched[i] && matched[j]) || !same_window(windows[i], windows[j])) continue;
        matched[i] = matched[j] = true;
      }
    }
    for (std::size_t i = 0; i < windows.size(); ++i) {
      if (!matched[i]) continue;
      auto& cov = covered[windows[i].first];
      std::fill(cov.begin() + static_cast<std::ptrdiff_t>(windows[i].second),
                cov.begin() + static_cast<std::ptrdiff_t>(windows[i].second + w), true);
    }
  }

  DuplicationReport report;
  for (std::size_t f = 0; f < files.size(); ++f) {
    std::map<int, bool> lines;  // line -> duplicated
    for (std::size_t i = 0; i < files[f].size(); ++i) lines[files[f][i].line] |= covered[f][i];
    report.total_lines += lines.size();
    std::optional<DuplicateRange> open;
    for (const auto& [line, dup] : lines) {
      if (!dup) continue;
      ++report.duplicated_lines;
      if (open && open->last_line + 1 >= line) {
        open->last_line = line;
        continue;
      }
      if (open) report.locations.push_back(*open);
      open = DuplicateRange{units[f].key(), line, line};
    }
    if (open) report.locations.push_back(*open);
  }
  report.fraction =
      report.total_lines ? static_cast<double>(report.duplicated_lines) / static_cast<double>(report.total_lines) : 0.0;
  return report;
}

}  // namespace gsc
