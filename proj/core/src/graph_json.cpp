#include "rgs/graph_json.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace rgs {

namespace {

using nlohmann::json;

json edges_json(const std::vector<Edge>& edges) {
  json arr = json::array();
  for (const auto& [u, v] : edges) arr.push_back({u, v});
  return arr;
}

std::pair<std::size_t, std::vector<Edge>> parse(const std::string& text) {
  const json j = json::parse(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON needs keys \"n\" and \"edges\"");
  const auto n = j.at("n").get<std::size_t>();
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph JSON: each edge must be [u, v]");
    const auto u = e[0].get<Vertex>();
    const auto v = e[1].get<Vertex>();
    if (u >= n || v >= n) throw std::invalid_argument("graph JSON: endpoint out of range");
    edges.emplace_back(u, v);
  }
  return {n, std::move(edges)};
}

}  // namespace

std::string graph_to_json(const Graph& g) {
  json j;
  j["n"] = g.num_vertices();
  j["edges"] = edges_json(g.edges());
  return j.dump();
}

std::string multigraph_to_json(const Multigraph& g) {
  json j;
  j["n"] = g.num_vertices();
  j["edges"] = edges_json(g.edges());
  return j.dump();
}

Graph graph_from_json(const std::string& text) {
  auto [n, edges] = parse(text);
  Multigraph m(n, edges);
  if (!is_simple(m)) throw std::invalid_argument("graph JSON: self-loop or repeated edge in a simple graph");
  return simplify(m);
}

Multigraph multigraph_from_json(const std::string& text) {
  auto [n, edges] = parse(text);
  return Multigraph(n, std::move(edges));
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return graph_from_json(ss.str());
}

void save_graph(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << graph_to_json(g) << '\n';
}

}  // namespace rgs
