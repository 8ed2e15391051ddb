#pragma once

#include <string>
#include <variant>

#include "spansub/graph.hpp"

namespace spansub {

using AnyGraph = std::variant<Graph, Digraph>;

// Canonical JSON: {"directed": bool, "n": int, "edges": [[u,v],...]} with
// implicit ids by position. Serialization sorts edges by
// (min endpoint, max endpoint, id) so equal graphs yield identical bytes;
// digraphs sort by (tail, head, id).
std::string to_json(const Graph& g);
std::string to_json(const Digraph& d);

AnyGraph graph_from_json(const std::string& text);
AnyGraph load_graph_file(const std::string& path);
void save_graph_file(const AnyGraph& g, const std::string& path);

std::string to_dot(const Graph& g);
std::string to_dot(const Digraph& d);

// {"part_count": t, "part_of": [...]}
std::string to_json(const Partition& p);
Partition partition_from_json(const std::string& text);
Partition load_partition_file(const std::string& path);

}  // namespace spansub
