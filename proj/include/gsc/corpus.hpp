#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace gsc {

struct SourceUnit {
  std::string repo_id;
  std::string path;  // relative to the repo directory
  std::string text;

  std::string key() const { return repo_id + "/" + path; }
};

struct ScanWarning {
  std::string path;
  std::string message;
};

struct ScanResult {
  std::vector<SourceUnit> units;
  std::vector<ScanWarning> warnings;
};

// Reads every file with `extension` below `root`. The first directory
// component is the repo id. Units are ordered by (repo_id, path). Unreadable
// or blank files become warnings; an empty result throws std::runtime_error.
ScanResult scan_corpus(const std::filesystem::path& root, std::string_view extension = ".java");

struct DatasetSplit {
  std::uint64_t seed = 0;
  std::vector<std::string> train;
  std::vector<std::string> validation;
  std::vector<std::string> seen_test;
  std::vector<std::string> unseen_test;

  nlohmann::json to_json() const;
  static DatasetSplit from_json(const nlohmann::json& j);
};

// Holds out `unseen_repo_count` whole repos, then `seen_file_fraction` of the
// remaining files as seen_test and `val_fraction` of what is left after that
// as validation. Entries are "repo_id/path", each list sorted.
DatasetSplit split_dataset(const std::vector<SourceUnit>& units, std::size_t unseen_repo_count,
                           double seen_file_fraction, double val_fraction, std::uint64_t seed);

struct DuplicateRange {
  std::string file;
  int first_line = 0;
  int last_line = 0;
};

struct DuplicationReport {
  double fraction = 0.0;
  std::size_t total_lines = 0;       // lines holding at least one token
  std::size_t duplicated_lines = 0;  // of those, lines covered by a repeated window
  std::vector<DuplicateRange> locations;

  nlohmann::json to_json() const;
};

// Marks every token window of length `min_token_run` whose exact token text
// sequence occurs at least twice in the corpus.
DuplicationReport detect_duplication(const std::vector<SourceUnit>& units, std::size_t min_token_run = 150);

// Token texts and their lines; falls back to whitespace splitting when the
// lexer rejects the file.
struct LineToken {
  std::string text;
  int line;
};
std::vector<LineToken> line_tokens(std::string_view text);

}  // namespace gsc
