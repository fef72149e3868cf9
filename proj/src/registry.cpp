#include "linkpred/registry.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "linkpred/errors.hpp"

namespace linkpred {

DatasetRegistry DatasetRegistry::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open registry: " + path);
  DatasetRegistry reg;
  reg.base_dir_ = std::filesystem::path(path).parent_path().string();
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    DatasetEntry e;
    if (!(ls >> e.id)) continue;
    if (e.id[0] == '#') continue;
    if (!(ls >> e.path >> e.expected_n >> e.expected_m))
      throw ParseError("registry line " + std::to_string(line_no) +
                       ": expected `id path expected_N expected_M`");
    reg.entries_.push_back(std::move(e));
  }
  return reg;
}

const DatasetEntry* DatasetRegistry::find(const std::string& id) const {
  for (const auto& e : entries_)
    if (e.id == id) return &e;
  return nullptr;
}

std::string DatasetRegistry::resolved_path(const DatasetEntry& e) const {
  std::filesystem::path p(e.path);
  if (p.is_absolute() || base_dir_.empty()) return p.string();
  return (std::filesystem::path(base_dir_) / p).string();
}

bool DatasetRegistry::available(const DatasetEntry& e) const {
  return std::filesystem::exists(resolved_path(e));
}

Graph DatasetRegistry::load_graph(const DatasetEntry& e) const {
  Graph g = parse_edge_list_file(resolved_path(e));
  if (g.node_count() != e.expected_n || g.edge_count() != e.expected_m)
    throw ParameterError(
        "dataset '" + e.id + "' failed provenance check: loaded N=" +
        std::to_string(g.node_count()) + " M=" + std::to_string(g.edge_count()) +
        ", registry expects N=" + std::to_string(e.expected_n) +
        " M=" + std::to_string(e.expected_m));
  return g;
}

}  // namespace linkpred
