#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace coast {

using Edge = std::pair<int, int>;  // (parent, child) node indices

// Directed acyclic graph over named nodes with optional background
// knowledge (required / forbidden edges).
struct Dag {
  std::vector<std::string> nodes;
  std::set<Edge> edges;
  std::set<Edge> required_edges;
  std::set<Edge> forbidden_edges;

  std::size_t q() const { return nodes.size(); }
  bool has_edge(int parent, int child) const { return edges.count({parent, child}) > 0; }
  std::vector<int> parents(int node) const;
  std::vector<int> children(int node) const;

  // Throws ValidationError on cycles, self-loops, missing required edges or
  // forbidden-edge violations.
  void validate() const;

  nlohmann::json to_json() const;
  static Dag from_json(const nlohmann::json& j);
};

// Kahn's method with lexicographic (node name) tie-break; reports one cycle
// on failure.
std::vector<int> topological_order(const Dag& dag);

// Edge-list CSV, one "parent,child" row with a header.
void save_edge_list_csv(const Dag& dag, const std::filesystem::path& path);
std::set<Edge> load_edge_list_csv(const std::filesystem::path& path,
                                  const std::vector<std::string>& nodes);

}  // namespace coast
