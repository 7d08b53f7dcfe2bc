#include "gammoid/json.hpp"

#include "gammoid/error.hpp"

namespace gammoid {

void to_json(Json& j, const Digraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.tail, e.head});
  j = Json{{"vertices", g.names()}, {"edges", std::move(edges)}};
}

void from_json(const Json& j, Digraph& g) {
  g = Digraph{};
  for (const auto& name : j.at("vertices")) g.add_vertex(name.get<std::string>());
  for (const auto& e : j.at("edges")) {
    const auto tail = e.at(0).get<VertexId>();
    const auto head = e.at(1).get<VertexId>();
    if (tail >= g.vertex_count() || head >= g.vertex_count()) throw PreconditionError("edge endpoint out of range");
    g.add_edge(tail, head);
  }
}

void to_json(Json& j, const Path& p) { j = Json{{"vertices", p.vertices}, {"edges", p.edges}}; }

void from_json(const Json& j, Path& p) {
  j.at("vertices").get_to(p.vertices);
  j.at("edges").get_to(p.edges);
  if (p.vertices.size() != p.edges.size() + 1) throw PreconditionError("path needs one more vertex than edges");
}

void to_json(Json& j, const Linkage& l) { j = Json{{"mode", to_string(l.mode)}, {"paths", l.paths}}; }

void from_json(const Json& j, Linkage& l) {
  l.mode = parse_mode(j.at("mode").get<std::string>());
  j.at("paths").get_to(l.paths);
}

void to_json(Json& j, const Separator& s) {
  j = Json{{"mode", to_string(s.mode)}, {"edges", s.edges}, {"vertices", s.vertices}};
}

void from_json(const Json& j, Separator& s) {
  s.mode = parse_mode(j.at("mode").get<std::string>());
  j.at("edges").get_to(s.edges);
  j.at("vertices").get_to(s.vertices);
}

Json vertex_names(const Digraph& g, std::span<const VertexId> vertices) {
  Json out = Json::array();
  for (VertexId v : vertices) out.push_back(g.name(v));
  return out;
}

Json describe(const Digraph& g, const Path& p) {
  Json j = p;
  j["route"] = vertex_names(g, p.vertices);
  return j;
}

}  // namespace gammoid
