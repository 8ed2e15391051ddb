#include "spansub/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace spansub {

namespace {

std::vector<std::pair<int, int>> canonical_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  out.reserve(g.edges.size());
  for (const Graph::Edge& e : g.edges) out.push_back(std::minmax(e.u, e.v));
  std::stable_sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> canonical_pairs(const Digraph& d) {
  std::vector<std::pair<int, int>> out;
  out.reserve(d.arcs.size());
  for (const Digraph::Arc& a : d.arcs) out.push_back({a.tail, a.head});
  std::stable_sort(out.begin(), out.end());
  return out;
}

std::string emit(bool directed, int n, const std::vector<std::pair<int, int>>& pairs) {
  std::ostringstream os;
  os << "{\"directed\": " << (directed ? "true" : "false") << ", \"n\": " << n << ", \"edges\": [";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) os << ", ";
    os << '[' << pairs[i].first << ", " << pairs[i].second << ']';
  }
  os << "]}";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrKind::BadParameters, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

std::string to_json(const Graph& g) { return emit(false, g.n, canonical_pairs(g)); }
std::string to_json(const Digraph& d) { return emit(true, d.n, canonical_pairs(d)); }

AnyGraph graph_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  require(j.contains("directed") && j.contains("n") && j.contains("edges"), ErrKind::BadParameters,
          "graph json needs directed/n/edges");
  bool directed = j["directed"].get<bool>();
  int n = j["n"].get<int>();
  if (directed) {
    Digraph d(n);
    for (const auto& e : j["edges"]) d.add_arc(e.at(0).get<int>(), e.at(1).get<int>());
    return d;
  }
  Graph g(n);
  for (const auto& e : j["edges"]) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  return g;
}

AnyGraph load_graph_file(const std::string& path) { return graph_from_json(read_file(path)); }

void save_graph_file(const AnyGraph& g, const std::string& path) {
  std::ofstream out(path);
  require(static_cast<bool>(out), ErrKind::BadParameters, "cannot write " + path);
  std::visit([&](const auto& x) { out << to_json(x) << '\n'; }, g);
}

std::string to_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (int v = 0; v < g.n; ++v) os << "  " << v << ";\n";
  for (auto [u, v] : canonical_pairs(g)) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const Digraph& d) {
  std::ostringstream os;
  os << "digraph D {\n";
  for (int v = 0; v < d.n; ++v) os << "  " << v << ";\n";
  for (auto [u, v] : canonical_pairs(d)) os << "  " << u << " -> " << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_json(const Partition& p) {
  std::ostringstream os;
  os << "{\"part_count\": " << p.part_count << ", \"part_of\": [";
  for (int v = 0; v < p.size(); ++v) {
    if (v) os << ", ";
    os << p.part_of[v];
  }
  os << "]}";
  return os.str();
}

Partition partition_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  require(j.contains("part_count") && j.contains("part_of"), ErrKind::BadParameters,
          "partition json needs part_count/part_of");
  std::vector<int> assign;
  for (const auto& x : j["part_of"]) assign.push_back(x.get<int>());
  return Partition(std::move(assign), j["part_count"].get<int>());
}

Partition load_partition_file(const std::string& path) {
  return partition_from_json(read_file(path));
}

}  // namespace spansub
