#include "coast/dag.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>

#include "coast/error.hpp"

namespace coast {

std::vector<int> Dag::parents(int node) const {
  std::vector<int> out;
  for (const auto& [p, c] : edges)
    if (c == node) out.push_back(p);
  return out;
}

std::vector<int> Dag::children(int node) const {
  std::vector<int> out;
  for (const auto& [p, c] : edges)
    if (p == node) out.push_back(c);
  return out;
}

void Dag::validate() const {
  const int n = static_cast<int>(nodes.size());
  auto check_range = [&](const Edge& e, const char* what) {
    if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n)
      throw ValidationError(std::string(what) + " edge references unknown node index");
    if (e.first == e.second)
      throw ValidationError(std::string("self-loop on node ") + nodes[e.first]);
  };
  for (const auto& e : edges) check_range(e, "graph");
  for (const auto& e : required_edges) {
    check_range(e, "required");
    if (!edges.count(e))
      throw ValidationError("required edge missing: " + nodes[e.first] + "->" + nodes[e.second]);
  }
  for (const auto& e : forbidden_edges) {
    check_range(e, "forbidden");
    if (edges.count(e))
      throw ValidationError("forbidden edge present: " + nodes[e.first] + "->" + nodes[e.second]);
  }
  topological_order(*this);  // throws on cycles
}

std::vector<int> topological_order(const Dag& dag) {
  const int n = static_cast<int>(dag.q());
  std::vector<int> indegree(n, 0);
  std::vector<std::vector<int>> child_lists(n);
  for (const auto& [p, c] : dag.edges) {
    ++indegree[c];
    child_lists[p].push_back(c);
  }

  auto name_less = [&](int a, int b) { return dag.nodes[a] > dag.nodes[b]; };
  std::priority_queue<int, std::vector<int>, decltype(name_less)> ready(name_less);
  for (int i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.push(i);

  std::vector<int> order;
  order.reserve(n);
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int c : child_lists[v])
      if (--indegree[c] == 0) ready.push(c);
  }

  if (static_cast<int>(order.size()) != n) {
    // Every leftover node keeps an in-edge from another leftover node, so
    // walking parents must revisit a node and that closes one cycle.
    std::vector<std::vector<int>> parent_lists(n);
    for (const auto& [p, c] : dag.edges)
      if (indegree[p] > 0 && indegree[c] > 0) parent_lists[c].push_back(p);
    int v = 0;
    while (indegree[v] == 0) ++v;
    std::vector<int> trail;
    std::vector<int> pos(n, -1);
    while (pos[v] < 0) {
      pos[v] = static_cast<int>(trail.size());
      trail.push_back(v);
      v = parent_lists[v].front();
    }
    std::string cycle = dag.nodes[v];
    for (int i = static_cast<int>(trail.size()) - 1; i >= pos[v]; --i)
      cycle += " -> " + dag.nodes[trail[i]];
    throw ValidationError("cycle detected: " + cycle);
  }
  return order;
}

nlohmann::json Dag::to_json() const {
  nlohmann::json j;
  j["nodes"] = nodes;
  auto edge_array = [&](const std::set<Edge>& es) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [p, c] : es) arr.push_back({nodes[p], nodes[c]});
    return arr;
  };
  j["edges"] = edge_array(edges);
  if (!required_edges.empty()) j["required_edges"] = edge_array(required_edges);
  if (!forbidden_edges.empty()) j["forbidden_edges"] = edge_array(forbidden_edges);
  return j;
}

Dag Dag::from_json(const nlohmann::json& j) {
  Dag dag;
  dag.nodes = j.at("nodes").get<std::vector<std::string>>();
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(dag.nodes.size()); ++i) index[dag.nodes[i]] = i;
  auto parse_edges = [&](const nlohmann::json& arr) {
    std::set<Edge> es;
    for (const auto& e : arr) {
      const auto p = index.find(e.at(0).get<std::string>());
      const auto c = index.find(e.at(1).get<std::string>());
      if (p == index.end() || c == index.end())
        throw ValidationError("edge references unknown node in graph JSON");
      es.insert({p->second, c->second});
    }
    return es;
  };
  dag.edges = parse_edges(j.at("edges"));
  if (j.contains("required_edges")) dag.required_edges = parse_edges(j["required_edges"]);
  if (j.contains("forbidden_edges")) dag.forbidden_edges = parse_edges(j["forbidden_edges"]);
  dag.validate();
  return dag;
}

void save_edge_list_csv(const Dag& dag, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << "parent,child\n";
  for (const auto& [p, c] : dag.edges) out << dag.nodes[p] << ',' << dag.nodes[c] << '\n';
}

std::set<Edge> load_edge_list_csv(const std::filesystem::path& path,
                                  const std::vector<std::string>& nodes) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open edge list: " + path.string());
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) index[nodes[i]] = i;

  std::set<Edge> edges;
  std::string line;
  bool first = true;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (first) {
      first = false;
      continue;  // header
    }
    std::istringstream ss(line);
    std::string p, c;
    if (!std::getline(ss, p, ',') || !std::getline(ss, c))
      throw ValidationError("malformed edge row " + std::to_string(row) + " in " + path.string());
    const auto pi = index.find(p);
    const auto ci = index.find(c);
    if (pi == index.end() || ci == index.end())
      throw ValidationError("edge row " + std::to_string(row) + " names unknown node in " +
                            path.string());
    edges.insert({pi->second, ci->second});
  }
  return edges;
}

}  // namespace coast
