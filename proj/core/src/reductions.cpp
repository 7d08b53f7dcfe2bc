#include <algorithm>
#include <string>

#include "gammoid/error.hpp"
#include "gammoid/menger.hpp"

namespace gammoid {

VertexSplit reduce_vertex_to_edge(const Digraph& g) {
  VertexSplit split;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    split.graph.add_vertex(g.name(v) + ".in");
    split.graph.add_vertex(g.name(v) + ".out");
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    split.internal_edge.push_back(split.graph.add_edge(VertexSplit::in(v), VertexSplit::out(v)));
  }
  for (const Edge& e : g.edges()) {
    split.image_edge.push_back(split.graph.add_edge(VertexSplit::out(e.tail), VertexSplit::in(e.head)));
  }
  return split;
}

Path VertexSplit::path_back(const Path& path) const {
  Path back;
  const std::size_t n = internal_edge.size();
  back.vertices.push_back(path.start() / 2);
  for (EdgeId e : path.edges) {
    if (e < n) continue;  // internal edge
    back.edges.push_back(e - static_cast<EdgeId>(n));
    back.vertices.push_back(graph.edge(e).head / 2);
  }
  return back;
}

Separator VertexSplit::separator_back(const Separator& separator) const {
  Separator back;
  back.mode = Mode::DirectedVertex;
  const std::size_t n = internal_edge.size();
  for (EdgeId e : separator.edges) {
    // An image edge out(u)->in(w) is covered by deleting u.
    back.vertices.push_back(e < n ? static_cast<VertexId>(e) : graph.edge(e).tail / 2);
  }
  for (VertexId v : separator.vertices) back.vertices.push_back(v / 2);
  back.vertices = normalized(std::move(back.vertices));
  return back;
}

Digraph reduce_undirected(const Digraph& g) {
  Digraph d;
  for (const auto& name : g.names()) d.add_vertex(name);
  for (const Edge& e : g.edges()) {
    d.add_edge(e.tail, e.head);
    d.add_edge(e.head, e.tail);
  }
  return d;
}

LineGraph reduce_edge_to_vertex(const Digraph& g, std::span<const VertexId> sources,
                                std::span<const VertexId> sinks) {
  const auto source_list = normalized({sources.begin(), sources.end()});
  const auto sink_list = normalized({sinks.begin(), sinks.end()});
  const auto is_source = membership(g.vertex_count(), source_list);
  const auto is_sink = membership(g.vertex_count(), sink_list);

  LineGraph line;
  std::vector<std::optional<VertexId>> image(g.edge_count());
  for (const Edge& e : g.edges()) {
    if (e.tail == e.head) continue;
    image[e.id] = line.graph.add_vertex("e" + std::to_string(e.id));
    line.origin_edge.emplace_back(e.id);
    line.terminal_for.emplace_back();
    if (is_source[e.tail] && !is_sink[e.tail]) line.sources.push_back(*image[e.id]);
    if (is_sink[e.head]) line.sinks.push_back(*image[e.id]);
  }
  for (const Edge& e : g.edges()) {
    if (!image[e.id] || is_sink[e.head]) continue;
    for (EdgeId f : g.out_edges(e.head)) {
      if (image[f]) line.graph.add_edge(*image[e.id], *image[f]);
    }
  }
  for (VertexId a : source_list) {
    if (!is_sink[a]) continue;
    const VertexId t = line.graph.add_vertex("t:" + g.name(a));
    line.origin_edge.emplace_back();
    line.terminal_for.emplace_back(a);
    line.sources.push_back(t);
    line.sinks.push_back(t);
  }
  line.sources = normalized(std::move(line.sources));
  line.sinks = normalized(std::move(line.sinks));
  return line;
}

Path LineGraph::path_back(const Digraph& g, const Path& path) const {
  Path back;
  if (const auto& terminal = terminal_for.at(path.start())) {
    back.vertices.push_back(*terminal);
    return back;
  }
  back.vertices.push_back(g.edge(*origin_edge.at(path.start())).tail);
  for (VertexId x : path.vertices) {
    const Edge& e = g.edge(*origin_edge.at(x));
    back.edges.push_back(e.id);
    back.vertices.push_back(e.head);
  }
  return back;
}

SinkReduction sink_reduce(const Digraph& g, std::span<const VertexId> sink_set, std::size_t source_count,
                          std::optional<std::size_t> capacity) {
  if (sink_set.empty()) throw PreconditionError("sink reduction needs a nonempty B");
  SinkReduction r{g, 0};
  std::string name = "b*";
  while (g.find(name)) name += '*';
  r.sink = r.graph.add_vertex(name);
  const std::size_t copies = std::min(capacity.value_or(source_count), source_count);
  for (VertexId z : normalized({sink_set.begin(), sink_set.end()})) {
    if (z >= g.vertex_count()) throw PreconditionError("sink out of range");
    for (std::size_t i = 0; i < copies; ++i) r.graph.add_edge(z, r.sink);
  }
  return r;
}

}  // namespace gammoid
