#include "gammoid/chain.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gammoid/error.hpp"

namespace gammoid {

namespace {

struct Ambient {
  int depth = 0;
  Truncation t;
  VertexId b = 0;
  VertexSet sources;    // I within G_T
  VertexSet lookahead;  // I within G_{T-1}
};

std::string names_of(const Digraph& g, std::span<const VertexId> vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? ", " : "") + g.name(vs[i]);
  return out + "}";
}

bool contains(std::span<const VertexId> sorted, VertexId v) { return std::binary_search(sorted.begin(), sorted.end(), v); }

VertexSet intersect(std::span<const VertexId> a, std::span<const VertexId> b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool subset(std::span<const VertexId> a, std::span<const VertexId> b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::optional<VertexId> scheduled_vertex(const Digraph& g, VertexId b, int n) {
  auto idx = static_cast<std::size_t>(n - 1);
  if (idx >= b) ++idx;
  if (idx >= g.vertex_count()) return std::nullopt;
  return static_cast<VertexId>(idx);
}

std::vector<std::pair<VertexId, Path>> prefixes_of(const Digraph& g, const Linkage& l, std::span<const VertexId> d) {
  std::vector<std::pair<VertexId, Path>> out;
  for (const Path& q : l.paths) out.emplace_back(q.start(), prefix_in(g, q, d));
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

Path prefix_for(const Digraph& g, const Linkage& l, VertexId v, std::span<const VertexId> d) {
  const Path* q = l.from(v);
  return q ? prefix_in(g, *q, d) : Path{};
}

VertexSet path_vertices(const Linkage& l, VertexId b) {
  VertexSet out;
  for (const Path& p : l.paths) {
    for (VertexId v : p.vertices) {
      if (v != b) out.push_back(v);
    }
  }
  return normalized(std::move(out));
}

// Nesting properties between consecutive states, evaluated in g (which must
// contain both states' truncations).
void check_step(const Digraph& g, VertexId b, std::span<const VertexId> sources, const ChainState& prev,
                const ChainState& cur, std::span<const VertexId> scheduled, std::vector<std::string>& out) {
  const std::string tag = "step " + std::to_string(cur.step) + ": ";
  if (!subset(prev.d, cur.d)) out.push_back(tag + "D_{n-1} not contained in D_n");
  if (!subset(scheduled, cur.d)) out.push_back(tag + "a covered scheduled vertex is missing from D_n");
  if (!is_exact(g, cur.d, sources, b)) out.push_back(tag + "D_n is not exact");
  if (hull(g, cur.d, b) != cur.d) out.push_back(tag + "D_n is not a hull");
  if (!subset(path_vertices(prev.linkage, b), cur.d)) out.push_back(tag + "D_n is not a forwarder of D_{n-1}");
  const auto linked = intersect(sources, cur.d);
  VertexSet starts;
  for (const Path& p : cur.linkage.paths) starts.push_back(p.start());
  if (normalized(starts) != linked || starts.size() != linked.size()) {
    out.push_back(tag + "linkage does not start exactly at I ∩ D_n");
  }
  const VertexId sink[] = {b};
  if (auto why = validate_linkage(g, cur.linkage, linked, sink, true)) out.push_back(tag + *why);
  for (VertexId v : intersect(sources, prev.d)) {
    if (prefix_for(g, prev.linkage, v, prev.d) != prefix_for(g, cur.linkage, v, prev.d)) {
      out.push_back(tag + "prefix of " + g.name(v) + " changed inside D_{n-1}");
    }
  }
}

}  // namespace

Path prefix_in(const Digraph& g, const Path& q, std::span<const VertexId> d) {
  Path out;
  if (q.vertices.empty() || !contains(d, q.start())) return out;
  out.vertices.push_back(q.start());
  for (std::size_t i = 0; i < q.edges.size(); ++i) {
    out.edges.push_back(q.edges[i]);
    out.vertices.push_back(q.vertices[i + 1]);
    if (!contains(d, g.edge(q.edges[i]).head)) break;
  }
  return out;
}

Linkage reroute(const Digraph& g, const Linkage& old, const Linkage& fresh, std::span<const VertexId> d) {
  const auto set = normalized({d.begin(), d.end()});
  const auto crossing = crossing_edges(g, set);
  std::map<EdgeId, std::pair<const Path*, std::size_t>> old_at;
  std::map<EdgeId, int> fresh_uses;
  auto crossing_positions = [&](const Path& p) {
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
      if (std::binary_search(crossing.begin(), crossing.end(), p.edges[i])) pos.push_back(i);
    }
    return pos;
  };
  for (const Path& p : old.paths) {
    for (std::size_t i : crossing_positions(p)) {
      if (!old_at.emplace(p.edges[i], std::make_pair(&p, i)).second) {
        throw InvariantError("crossing edge on two old paths");
      }
    }
  }
  Linkage out;
  out.mode = fresh.mode;
  for (const Path& q : fresh.paths) {
    const auto pos = crossing_positions(q);
    if (pos.empty()) {
      out.paths.push_back(q);
      continue;
    }
    if (pos.size() > 1) throw InvariantError("fresh path with several crossing edges");
    const EdgeId e = q.edges[pos[0]];
    ++fresh_uses[e];
    const auto it = old_at.find(e);
    if (it == old_at.end()) throw InvariantError("crossing edge missing from old linkage");
    const auto& [p, i] = it->second;
    Path r;
    r.vertices.assign(p->vertices.begin(), p->vertices.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    r.edges.assign(p->edges.begin(), p->edges.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    r.vertices.insert(r.vertices.end(), q.vertices.begin() + static_cast<std::ptrdiff_t>(pos[0]) + 2, q.vertices.end());
    r.edges.insert(r.edges.end(), q.edges.begin() + static_cast<std::ptrdiff_t>(pos[0]) + 1, q.edges.end());
    out.paths.push_back(std::move(r));
  }
  for (EdgeId e : crossing) {
    if (!old_at.count(e) || fresh_uses[e] != 1) throw InvariantError("crossing edge not on exactly one path of each linkage");
  }
  std::sort(out.paths.begin(), out.paths.end(), [](const Path& x, const Path& y) { return x.start() < y.start(); });
  return out;
}

Chain build_chain(const GraphPresentation& p, const ChainOptions& options) {
  if (options.steps < 0) throw PreconditionError("steps must be non-negative");
  std::map<int, Ambient> cache;
  auto ambient = [&](int depth) -> const Ambient& {
    if (auto it = cache.find(depth); it != cache.end()) return it->second;
    Ambient a;
    a.depth = depth;
    a.t = p.truncation(depth);
    if (!a.t.sink) throw PreconditionError("construction needs a single sink b; wrap the presentation with a sink");
    a.b = *a.t.sink;
    const VertexSet requested = options.sources ? normalized(*options.sources) : normalized(a.t.sources);
    for (VertexId v : requested) {
      if (v >= a.t.graph.vertex_count()) continue;
      if (v == a.b) throw PreconditionError("b lies in I");
      a.sources.push_back(v);
      if (p.finite() || a.t.appeared_at[v] < depth) a.lookahead.push_back(v);
    }
    const VertexId sink[] = {a.b};
    if (!is_linkable(a.t.graph, a.lookahead, sink, Mode::DirectedEdge)) {
      throw PreconditionError("sources " + names_of(a.t.graph, a.lookahead) + " are not linkable to b in truncation " +
                              std::to_string(depth));
    }
    return cache.emplace(depth, std::move(a)).first->second;
  };
  // Exact in the limit: every member keeps all its out-edges inside G_{T-1}.
  auto certified = [&](const Ambient& a, std::span<const VertexId> d) {
    for (VertexId v : d) {
      if (v == a.b || (!p.finite() && a.t.settled_from[v] >= a.depth)) return false;
    }
    return is_exact(a.t.graph, d, a.lookahead, a.b);
  };

  enum class Failure { None, Vertex, Cover, Forward, Fresh };
  struct Attempt {
    Failure failure = Failure::None;
    ChainState state;
  };
  auto attempt = [&](const Ambient& a, const ChainState& prev, int n, bool skip_cover) {
    Attempt r;
    const Digraph& g = a.t.graph;
    ChainState& s = r.state;
    s.step = n;
    s.depth = a.depth;
    s.vertex = scheduled_vertex(g, a.b, n);
    if (!s.vertex && !p.finite()) {
      r.failure = Failure::Vertex;
      return r;
    }
    auto cover = membership(g.vertex_count(), prev.d);
    if (s.vertex && !cover[*s.vertex]) {
      if (skip_cover) {
        s.covered = false;
      } else {
        const auto f = find_exact_set(g, *s.vertex, a.lookahead, a.b);
        if (!f || !certified(a, *f)) {
          r.failure = Failure::Cover;
          return r;
        }
        for (VertexId v : *f) cover[v] = 1;
      }
    }
    for (VertexId x : path_vertices(prev.linkage, a.b)) {
      if (cover[x]) continue;
      const auto f = find_exact_set(g, x, a.lookahead, a.b);
      if (!f) {
        r.failure = Failure::Forward;
        return r;
      }
      for (VertexId v : *f) cover[v] = 1;
    }
    s.d = hull(g, members(cover), a.b);
    if (!certified(a, s.d)) {
      r.failure = Failure::Forward;
      return r;
    }
    const auto linked = intersect(a.sources, s.d);
    LinkageOptions lo;
    lo.one_path_per_source = true;
    lo.source_order.assign(linked.rbegin(), linked.rend());
    const VertexId sink[] = {a.b};
    auto fresh = max_linkage(g, linked, sink, Mode::DirectedEdge, lo).linkage;
    if (fresh.size() != linked.size()) {
      r.failure = Failure::Fresh;
      return r;
    }
    s.crossing = crossing_edges(g, s.d);
    s.linkage = reroute(g, prev.linkage, fresh, prev.d);
    s.prefixes = prefixes_of(g, s.linkage, s.d);
    return r;
  };

  Chain chain;
  chain.family = p.family();
  int depth = std::max(options.initial_depth, 2);
  if (depth > options.max_depth && !p.finite()) throw PreconditionError("initial depth exceeds max depth");
  ChainState prev;
  VertexSet scheduled;
  auto run = [&](int n, bool skip_cover) {
    int t = depth;
    while (true) {
      Attempt r = attempt(ambient(t), prev, n, skip_cover);
      if (r.failure == Failure::None) depth = t;
      if (r.failure == Failure::None || p.finite() || 2 * t > options.max_depth) return r;
      t *= 2;
    }
  };
  for (int n = 1; n <= options.steps; ++n) {
    Attempt r = run(n, false);
    const bool uncovered = r.failure == Failure::Cover;
    if (uncovered) r = run(n, true);
    if (r.failure != Failure::None) {
      throw BudgetExceeded("step " + std::to_string(n) + " needs a truncation deeper than " +
                           std::to_string(options.max_depth));
    }
    ChainState& s = r.state;
    if (uncovered && s.vertex) chain.uncovered.push_back(*s.vertex);
    if (s.vertex && s.covered) scheduled.insert(std::upper_bound(scheduled.begin(), scheduled.end(), *s.vertex), *s.vertex);
    const Ambient& a = ambient(depth);
    std::vector<std::string> problems;
    check_step(a.t.graph, a.b, a.sources, prev, s, scheduled, problems);
    if (!problems.empty()) throw InvariantError(problems.front());
    prev = s;
    chain.states.push_back(std::move(s));
  }
  const Ambient& last = ambient(depth);
  chain.graph = last.t.graph;
  chain.sink = last.b;
  chain.sources = last.sources;
  chain.depth = depth;
  chain.uncovered = normalized(std::move(chain.uncovered));
  return chain;
}

std::vector<std::string> verify_chain(const Chain& chain) {
  std::vector<std::string> out;
  const Digraph& g = chain.graph;
  const VertexId b = chain.sink;
  ChainState empty;
  VertexSet scheduled;
  for (std::size_t n = 0; n < chain.states.size(); ++n) {
    const ChainState& cur = chain.states[n];
    if (cur.vertex && cur.covered) scheduled.insert(std::upper_bound(scheduled.begin(), scheduled.end(), *cur.vertex), *cur.vertex);
    check_step(g, b, chain.sources, n ? chain.states[n - 1] : empty, cur, scheduled, out);
    // Restriction compatibility with every earlier hull.
    for (std::size_t m = 0; m < n; ++m) {
      const ChainState& early = chain.states[m];
      for (VertexId v : intersect(chain.sources, early.d)) {
        if (prefix_for(g, early.linkage, v, early.d) != prefix_for(g, cur.linkage, v, early.d)) {
          out.push_back("step " + std::to_string(cur.step) + ": restriction to D_" + std::to_string(early.step) +
                        " differs for " + g.name(v));
        }
      }
    }
    // Prefix nesting along the chain.
    if (n > 0) {
      for (const auto& [v, path] : chain.states[n - 1].prefixes) {
        const Path now = prefix_for(g, cur.linkage, v, cur.d);
        const bool nested = now.edges.size() >= path.edges.size() &&
                            std::equal(path.edges.begin(), path.edges.end(), now.edges.begin());
        if (!nested) out.push_back("step " + std::to_string(cur.step) + ": prefix of " + g.name(v) + " not nested");
      }
    }
  }
  if (!chain.states.empty()) {
    std::set<EdgeId> used;
    for (const auto& [v, path] : chain.states.back().prefixes) {
      for (EdgeId e : path.edges) {
        if (!used.insert(e).second) out.push_back("stabilized paths share edge " + std::to_string(e));
      }
    }
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::EndsAtB:
      return "ends-at-b";
    case Verdict::DominatingRayCandidate:
      return "dominating-ray-candidate";
    case Verdict::Undetermined:
      break;
  }
  return "undetermined";
}

std::vector<Path> domination_witnesses(const GraphPresentation& p, const Path& prefix, VertexId b, int depth) {
  const Digraph g = p.truncation(depth).graph;
  std::vector<char> skip(g.edge_count(), 0);
  for (EdgeId e : prefix.edges) {
    if (e < g.edge_count()) skip[e] = 1;
  }
  Digraph h;
  for (const auto& name : g.names()) h.add_vertex(name);
  std::vector<EdgeId> origin;
  for (const Edge& e : g.edges()) {
    if (skip[e.id]) continue;
    h.add_edge(e.tail, e.head);
    origin.push_back(e.id);
  }
  VertexSet from;
  for (VertexId v : prefix.vertices) {
    if (v < g.vertex_count() && v != b) from.push_back(v);
  }
  const VertexId sink[] = {b};
  auto paths = max_linkage(h, normalized(std::move(from)), sink, Mode::DirectedEdge).linkage.paths;
  for (Path& path : paths) {
    for (EdgeId& e : path.edges) e = origin[e];
  }
  return paths;
}

ClassifiedPath classify_path(const GraphPresentation& p, const Chain& chain, VertexId source,
                             const ClassifyOptions& options) {
  ClassifiedPath c;
  c.source = source;
  std::vector<std::size_t> lengths;
  for (const ChainState& s : chain.states) {
    std::size_t len = 0;
    for (const auto& [v, path] : s.prefixes) {
      if (v == source) {
        len = path.edges.size();
        c.path = path;
      }
    }
    lengths.push_back(len);
  }
  if (c.path.vertices.empty()) {
    c.diagnostic = "source never entered the chain";
    return c;
  }
  if (c.path.end() == chain.sink) {
    c.verdict = Verdict::EndsAtB;
    return c;
  }
  const auto window = static_cast<std::size_t>(std::max(options.window, 1));
  bool grew = lengths.size() > window;
  for (std::size_t i = lengths.size() - std::min(window, lengths.size()); grew && i < lengths.size(); ++i) {
    grew = i > 0 && lengths[i] > lengths[i - 1];
  }
  const Truncation deepest = p.truncation(chain.depth);
  int tip = 1;
  for (VertexId v : c.path.vertices) tip = std::max(tip, deepest.appeared_at.at(v));
  if (p.finite()) tip = 1;
  for (int d = 1; d <= tip; ++d) {
    auto witnesses = domination_witnesses(p, c.path, chain.sink, d);
    c.witness_depths.push_back(d);
    c.witness_counts.push_back(witnesses.size());
    if (d == tip) c.witnesses = std::move(witnesses);
  }
  const bool monotone = std::is_sorted(c.witness_counts.begin(), c.witness_counts.end()) &&
                        c.witness_counts.back() > c.witness_counts.front();
  if (!p.finite() && grew && monotone) {
    c.verdict = Verdict::DominatingRayCandidate;
  } else if (p.finite()) {
    c.diagnostic = "finite ambient graph: a stabilized path must end at b once every vertex is covered";
  } else {
    c.diagnostic = grew ? "witness counts do not grow with depth" : "prefix stopped growing";
  }
  return c;
}

std::vector<ClassifiedPath> stabilized_paths(const GraphPresentation& p, const Chain& chain,
                                             const ClassifyOptions& options) {
  VertexSet sources;
  for (const ChainState& s : chain.states) {
    for (const auto& [v, path] : s.prefixes) sources.push_back(v);
  }
  std::vector<ClassifiedPath> out;
  for (VertexId v : normalized(std::move(sources))) out.push_back(classify_path(p, chain, v, options));
  return out;
}

}  // namespace gammoid
