#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linkpred/graph.hpp"

namespace linkpred {

// One registered network: where its edge list lives and the node/edge counts
// it must load to. The counts act as a cheap provenance checksum against
// wrong-version downloads.
struct DatasetEntry {
  std::string id;
  std::string path;  // resolved against the registry file's directory
  std::int64_t expected_n = 0;
  std::int64_t expected_m = 0;
};

class DatasetRegistry {
 public:
  // Registry file format: one dataset per line, `id path expected_N
  // expected_M`, '#' comments. Throws ParseError on malformed lines.
  static DatasetRegistry load(const std::string& path);

  const DatasetEntry* find(const std::string& id) const;
  const std::vector<DatasetEntry>& entries() const { return entries_; }

  // Whether the edge-list file is present on disk (datasets are often
  // user-supplied and absent).
  bool available(const DatasetEntry& e) const;
  std::string resolved_path(const DatasetEntry& e) const;

  // Parse and validate against the recorded (N, M); a mismatch aborts with a
  // ParameterError describing the provenance failure.
  Graph load_graph(const DatasetEntry& e) const;

 private:
  std::string base_dir_;
  std::vector<DatasetEntry> entries_;
};

}  // namespace linkpred
