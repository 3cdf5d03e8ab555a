#include "bei/json_io.hpp"

#include <fstream>

#include "bei/errors.hpp"

namespace bei {

Graph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw InvalidParameter("graph JSON needs the keys \"n\" and \"edges\"");
  if (!j["n"].is_number_integer()) throw InvalidParameter("graph \"n\" must be an integer");
  const auto n = j["n"].get<long long>();
  if (n < 0 || n > kMaxVertices) throw InvalidParameter("graph \"n\" must lie in 0..64");
  if (!j["edges"].is_array()) throw InvalidParameter("graph \"edges\" must be a list");
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw InvalidParameter("each edge must be a pair of integers");
    const auto a = e[0].get<long long>(), b = e[1].get<long long>();
    if (a < 1 || b < 1 || a > n || b > n)
      throw InvalidParameter("edge endpoint outside 1.." + std::to_string(n));
    edges.push_back({static_cast<int>(a), static_cast<int>(b)});
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return Json{{"n", g.order()}, {"edges", edges}};
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open graph file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidParameter("graph file '" + path + "' is not valid JSON: " + e.what());
  }
  return graph_from_json(j);
}

Json vertex_set_to_json(const VertexSet& s) { return Json(s.labels()); }

Json cutsets_to_json(const Graph& g, const CutSetFamily& family) {
  Json out = Json::array();
  for (const PrimeSupport& p : family) {
    Json comps = Json::array();
    for (const VertexSet& c : p.comps) comps.push_back(vertex_set_to_json(c));
    const int dim = g.order() - static_cast<int>(p.t.size()) + static_cast<int>(p.comps.size());
    out.push_back(Json{{"t", vertex_set_to_json(p.t)}, {"components", comps}, {"dim", dim}, {"height", 2 * g.order() - dim}});
  }
  return out;
}

Json betti_to_json(const BettiTable& table) {
  Json out = Json::array();
  for (const auto& [key, value] : table.graded()) out.push_back(Json{{"i", key.first}, {"j", key.second}, {"beta", value}});
  return out;
}

}  // namespace bei
