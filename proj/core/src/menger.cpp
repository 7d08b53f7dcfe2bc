#include "gammoid/menger.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>

#include "gammoid/error.hpp"
#include "gammoid/flow.hpp"

namespace gammoid {

const Path* Linkage::from(VertexId v) const {
  for (const Path& p : paths) {
    if (p.start() == v) return &p;
  }
  return nullptr;
}

namespace {

using Capacity = FlowNetwork::Capacity;
constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::vector<VertexId> ordered_sources(std::span<const VertexId> sources, const LinkageOptions& options) {
  auto sorted = normalized({sources.begin(), sources.end()});
  if (options.source_order.empty()) return sorted;
  auto order = options.source_order;
  if (normalized(order) != sorted) throw PreconditionError("source_order must list each source exactly once");
  return order;
}

// Appends `next` reached over `edge`; cuts the loop if `next` is already on the path.
void extend(Path& path, std::unordered_map<VertexId, std::size_t>& position, EdgeId edge, VertexId next) {
  if (auto it = position.find(next); it != position.end()) {
    const std::size_t keep = it->second;
    for (std::size_t i = keep + 1; i < path.vertices.size(); ++i) position.erase(path.vertices[i]);
    path.vertices.resize(keep + 1);
    path.edges.resize(keep);
    return;
  }
  position.emplace(next, path.vertices.size());
  path.vertices.push_back(next);
  path.edges.push_back(edge);
}

MengerResult solve_edge_mode(const Digraph& g, const std::vector<VertexId>& order, const Membership& is_sink,
                             std::span<const VertexId> sinks, Mode mode, const LinkageOptions& options) {
  const std::size_t n = g.vertex_count();
  FlowNetwork net(n + 2);
  const std::size_t s = n;
  const std::size_t t = n + 1;
  const bool directed = is_directed(mode);
  std::vector<EdgeId> arc_edge;  // indexed by arc / 2
  auto record = [&](std::size_t arc, EdgeId e) {
    if (arc_edge.size() <= arc / 2) arc_edge.resize(arc / 2 + 1, static_cast<EdgeId>(-1));
    arc_edge[arc / 2] = e;
  };
  std::vector<std::pair<std::size_t, std::size_t>> opposite;  // undirected arc pairs
  for (const Edge& e : g.edges()) {
    if (e.tail == e.head) continue;
    std::size_t forward = kNone;
    std::size_t backward = kNone;
    if (!is_sink[e.tail]) {
      forward = net.add_arc(e.tail, e.head, 1);
      record(forward, e.id);
    }
    if (!directed && !is_sink[e.head]) {
      backward = net.add_arc(e.head, e.tail, 1);
      record(backward, e.id);
    }
    if (forward != kNone && backward != kNone) opposite.emplace_back(forward, backward);
  }
  std::vector<std::size_t> source_arc;
  for (VertexId a : order) {
    const Capacity cap = (is_sink[a] || options.one_path_per_source) ? 1 : FlowNetwork::kInfinite;
    source_arc.push_back(net.add_arc(s, a, cap));
  }
  for (VertexId z : sinks) net.add_arc(z, t, FlowNetwork::kInfinite);

  const Capacity value = net.max_flow(s, t);
  for (auto [a, b] : opposite) {
    if (net.flow(a) > 0 && net.flow(b) > 0) {
      net.set_flow(a, 0);
      net.set_flow(b, 0);
    }
  }

  MengerResult result;
  result.linkage.mode = mode;
  result.separator.mode = mode;
  std::vector<Capacity> remaining(net.arc_count(), 0);
  for (std::size_t node = 0; node < n; ++node) {
    for (std::size_t arc : net.arcs_out(node)) {
      if ((arc & 1) == 0 && net.flow(arc) > 0) remaining[arc] = net.flow(arc);
    }
  }
  for (std::size_t k = 0; k < order.size(); ++k) {
    const VertexId a = order[k];
    for (Capacity unit = 0; unit < net.flow(source_arc[k]); ++unit) {
      Path path;
      path.vertices.push_back(a);
      std::unordered_map<VertexId, std::size_t> position{{a, 0}};
      VertexId cur = a;
      while (!is_sink[cur]) {
        std::size_t chosen = kNone;
        for (std::size_t arc : net.arcs_out(cur)) {
          if ((arc & 1) == 0 && net.arc_to(arc) < n && remaining[arc] > 0) {
            chosen = arc;
            break;
          }
        }
        if (chosen == kNone) throw InvariantError("flow decomposition stalled");
        --remaining[chosen];
        const auto next = static_cast<VertexId>(net.arc_to(chosen));
        extend(path, position, arc_edge[chosen / 2], next);
        cur = path.vertices.back();
      }
      result.linkage.paths.push_back(std::move(path));
    }
  }

  const auto side = net.residual_reachable(s);
  for (const Edge& e : g.edges()) {
    if (e.tail == e.head) continue;
    const bool cut_forward = !is_sink[e.tail] && side[e.tail] && !side[e.head];
    const bool cut_backward = !directed && !is_sink[e.head] && side[e.head] && !side[e.tail];
    if (cut_forward || cut_backward) result.separator.edges.push_back(e.id);
  }
  for (VertexId a : order) {
    if (!side[a]) result.separator.vertices.push_back(a);
  }
  std::sort(result.separator.vertices.begin(), result.separator.vertices.end());
  if (static_cast<std::size_t>(value) != result.linkage.size() ||
      result.linkage.size() != result.separator.size()) {
    throw InvariantError("edge-mode duality mismatch");
  }
  return result;
}

MengerResult solve_vertex_mode(const Digraph& g, const std::vector<VertexId>& order, const Membership& is_sink,
                               std::span<const VertexId> sinks, Mode mode, const LinkageOptions& options) {
  const std::size_t n = g.vertex_count();
  FlowNetwork net(2 * n + 2);
  const std::size_t s = 2 * n;
  const std::size_t t = 2 * n + 1;
  auto in = [](VertexId v) { return static_cast<std::size_t>(2 * v); };
  auto out = [](VertexId v) { return static_cast<std::size_t>(2 * v + 1); };
  const bool directed = is_directed(mode);
  std::vector<std::size_t> internal(n);
  for (VertexId v = 0; v < n; ++v) {
    const Capacity cap = (is_sink[v] && options.shared_sinks) ? FlowNetwork::kInfinite : 1;
    internal[v] = net.add_arc(in(v), out(v), cap);
  }
  std::unordered_map<std::size_t, EdgeId> arc_edge;
  for (const Edge& e : g.edges()) {
    if (e.tail == e.head) continue;
    if (!is_sink[e.tail]) arc_edge.emplace(net.add_arc(out(e.tail), in(e.head), FlowNetwork::kInfinite), e.id);
    if (!directed && !is_sink[e.head]) {
      arc_edge.emplace(net.add_arc(out(e.head), in(e.tail), FlowNetwork::kInfinite), e.id);
    }
  }
  std::vector<std::size_t> source_arc;
  for (VertexId a : order) source_arc.push_back(net.add_arc(s, in(a), 1));
  for (VertexId z : sinks) net.add_arc(out(z), t, FlowNetwork::kInfinite);

  const Capacity value = net.max_flow(s, t);

  MengerResult result;
  result.linkage.mode = mode;
  result.separator.mode = mode;
  std::unordered_map<std::size_t, Capacity> remaining;
  for (const auto& [arc, e] : arc_edge) {
    if (net.flow(arc) > 0) remaining[arc] = net.flow(arc);
  }
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (net.flow(source_arc[k]) == 0) continue;
    const VertexId a = order[k];
    Path path;
    path.vertices.push_back(a);
    std::unordered_map<VertexId, std::size_t> position{{a, 0}};
    VertexId cur = a;
    while (!is_sink[cur]) {
      std::size_t chosen = kNone;
      for (std::size_t arc : net.arcs_out(out(cur))) {
        auto it = remaining.find(arc);
        if (it != remaining.end() && it->second > 0) {
          chosen = arc;
          break;
        }
      }
      if (chosen == kNone) throw InvariantError("flow decomposition stalled");
      --remaining[chosen];
      const auto next = static_cast<VertexId>(net.arc_to(chosen) / 2);
      extend(path, position, arc_edge.at(chosen), next);
      cur = path.vertices.back();
    }
    result.linkage.paths.push_back(std::move(path));
  }

  const auto side = net.residual_reachable(s);
  for (VertexId v = 0; v < n; ++v) {
    if (side[in(v)] && !side[out(v)]) result.separator.vertices.push_back(v);
  }
  for (VertexId a : order) {
    if (!side[in(a)]) result.separator.vertices.push_back(a);
  }
  result.separator.vertices = normalized(std::move(result.separator.vertices));
  if (static_cast<std::size_t>(value) != result.linkage.size() ||
      result.linkage.size() != result.separator.size()) {
    throw InvariantError("vertex-mode duality mismatch");
  }
  return result;
}

}  // namespace

MengerResult max_linkage(const Digraph& g, std::span<const VertexId> sources, std::span<const VertexId> sinks,
                         Mode mode, const LinkageOptions& options) {
  const std::size_t n = g.vertex_count();
  for (VertexId v : sources) {
    if (v >= n) throw PreconditionError("source out of range");
  }
  for (VertexId v : sinks) {
    if (v >= n) throw PreconditionError("sink out of range");
  }
  const auto order = ordered_sources(sources, options);
  const auto sink_list = normalized({sinks.begin(), sinks.end()});
  const auto is_sink = membership(n, sink_list);
  if (is_edge_mode(mode)) return solve_edge_mode(g, order, is_sink, sink_list, mode, options);
  return solve_vertex_mode(g, order, is_sink, sink_list, mode, options);
}

MengerResult max_linkage(const LinkageProblem& problem) {
  const auto sinks = problem.sinks();
  return max_linkage(problem.graph, problem.sources, sinks, problem.mode);
}

bool is_linkable(const Digraph& g, std::span<const VertexId> sources, std::span<const VertexId> sinks, Mode mode,
                 bool shared_sinks) {
  LinkageOptions options;
  options.one_path_per_source = true;
  options.shared_sinks = shared_sinks;
  const auto unique = normalized({sources.begin(), sources.end()});
  return max_linkage(g, unique, sinks, mode, options).value() == unique.size();
}

bool is_linkable(const LinkageProblem& problem) {
  const auto sinks = problem.sinks();
  return is_linkable(problem.graph, problem.sources, sinks, problem.mode);
}

std::optional<std::string> validate_linkage(const Digraph& g, const Linkage& linkage,
                                            std::span<const VertexId> sources, std::span<const VertexId> sinks,
                                            bool one_per_source, bool shared_sinks) {
  const std::size_t n = g.vertex_count();
  const auto is_source = membership(n, normalized({sources.begin(), sources.end()}));
  const auto is_sink = membership(n, normalized({sinks.begin(), sinks.end()}));
  const bool directed = is_directed(linkage.mode);
  const bool edge_mode = is_edge_mode(linkage.mode);
  std::vector<int> edge_use(g.edge_count(), 0);
  std::vector<int> vertex_use(n, 0);
  std::vector<int> start_use(n, 0);
  for (std::size_t k = 0; k < linkage.paths.size(); ++k) {
    const Path& p = linkage.paths[k];
    const std::string tag = "path " + std::to_string(k) + ": ";
    if (p.vertices.size() != p.edges.size() + 1) return tag + "vertex/edge count mismatch";
    for (VertexId v : p.vertices) {
      if (v >= n) return tag + "vertex out of range";
    }
    if (!is_source[p.start()]) return tag + "does not start at a source";
    if (!is_sink[p.end()]) return tag + "does not end at a sink";
    if (++start_use[p.start()] > 1 && (one_per_source || !edge_mode)) return tag + "second path from a source";
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
      if (is_sink[p.vertices[i]]) return tag + "passes through a sink";
    }
    auto sorted = normalized(p.vertices);
    if (sorted.size() != p.vertices.size()) return tag + "repeats a vertex";
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
      if (p.edges[i] >= g.edge_count()) return tag + "edge out of range";
      const Edge& e = g.edge(p.edges[i]);
      const VertexId a = p.vertices[i];
      const VertexId b = p.vertices[i + 1];
      const bool ok = (e.tail == a && e.head == b) || (!directed && e.tail == b && e.head == a);
      if (!ok) return tag + "edges not consecutive";
      if (++edge_use[e.id] > 1) return tag + "edge shared between paths";
    }
    if (!edge_mode) {
      for (VertexId v : p.vertices) {
        if (shared_sinks && is_sink[v]) continue;
        if (++vertex_use[v] > 1) return tag + "vertex shared between paths";
      }
    }
  }
  return std::nullopt;
}

bool separates(const Digraph& g, const Separator& separator, std::span<const VertexId> sources,
               std::span<const VertexId> sinks) {
  const std::size_t n = g.vertex_count();
  const auto removed_vertex = membership(n, separator.vertices);
  const auto is_sink = membership(n, normalized({sinks.begin(), sinks.end()}));
  std::vector<char> removed_edge(g.edge_count(), 0);
  for (EdgeId e : separator.edges) removed_edge.at(e) = 1;
  const bool directed = is_directed(separator.mode);
  std::vector<char> seen(n, 0);
  std::deque<VertexId> queue;
  for (VertexId a : sources) {
    if (!removed_vertex[a] && !seen[a]) {
      seen[a] = 1;
      queue.push_back(a);
    }
  }
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    if (is_sink[v]) return false;
    auto visit = [&](EdgeId e, VertexId w) {
      if (removed_edge[e] || removed_vertex[w] || seen[w]) return;
      seen[w] = 1;
      queue.push_back(w);
    };
    for (EdgeId e : g.out_edges(v)) visit(e, g.edge(e).head);
    if (!directed) {
      for (EdgeId e : g.in_edges(v)) visit(e, g.edge(e).tail);
    }
  }
  return true;
}

}  // namespace gammoid
