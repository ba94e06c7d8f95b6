#pragma once

// Graph interchange format: {"n": int, "edges": [[u, v], ...]}.
// Simple graphs list each edge once with u < v, sorted lexicographically.
// Multigraphs repeat pairs for multiplicity and allow u == v.

#include <string>

#include "rgs/graph.hpp"

namespace rgs {

std::string graph_to_json(const Graph& g);
std::string multigraph_to_json(const Multigraph& g);

/// Parses either flavour. Self-loops or repeated pairs are rejected.
Graph graph_from_json(const std::string& text);
Multigraph multigraph_from_json(const std::string& text);

Graph load_graph(const std::string& path);
void save_graph(const std::string& path, const Graph& g);

}  // namespace rgs
