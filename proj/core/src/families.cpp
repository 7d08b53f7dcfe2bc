#include "gammoid/families.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

#include "gammoid/error.hpp"

namespace gammoid {

LinkageProblem Truncation::problem(Mode mode) const {
  LinkageProblem p;
  p.graph = graph;
  p.sources = sources;
  p.sink_set = sink_set;
  p.sink = sink;
  p.mode = mode;
  return p;
}

GraphPresentation::GraphPresentation(std::string family, int depth, Builder builder, bool finite)
    : family_(std::move(family)), depth_(depth), builder_(std::move(builder)), finite_(finite) {
  if (depth < 1) throw PreconditionError("depth must be positive");
}

Truncation GraphPresentation::truncation(int n) const {
  if (n < 1) throw PreconditionError("truncation depth must be positive");
  Truncation t = builder_(n);
  t.depth = n;
  return t;
}

Digraph truncate(const GraphPresentation& p, int n) { return p.truncation(n).graph; }

namespace {

// Appends vertices while recording the bookkeeping every family needs.
class LayerWriter {
 public:
  explicit LayerWriter(Truncation& t) : t_(t) {}

  VertexId vertex(std::string name, int appeared, int settled) {
    const VertexId v = t_.graph.add_vertex(std::move(name));
    t_.appeared_at.push_back(appeared);
    t_.settled_from.push_back(settled);
    return v;
  }
  void edge(VertexId a, VertexId b) { t_.graph.add_edge(a, b); }
  void sink(VertexId v) { t_.sink_set.push_back(v); }
  void source(VertexId v) { t_.sources.push_back(v); }

 private:
  Truncation& t_;
};

std::string indexed(std::string_view stem, int i) { return std::string(stem) + "_" + std::to_string(i); }

Truncation build_ac(int n) {
  Truncation t;
  LayerWriter w(t);
  VertexId prev_v2 = 0;
  for (int j = 0; j <= n; ++j) {
    const int at = std::max(j, 1);
    const VertexId b = w.vertex(indexed("b", j), at, at);
    const VertexId v1 = w.vertex(indexed("v1", j), at, at);
    const VertexId v2 = w.vertex(indexed("v2", j), at, j + 1);
    w.edge(v1, b);
    w.edge(v2, v1);
    if (j > 0) w.edge(prev_v2, v1);
    w.sink(b);
    if (j == 0) w.source(v1);
    w.source(v2);
    prev_v2 = v2;
  }
  std::sort(t.sources.begin(), t.sources.end());
  return t;
}

std::string grid_name(int x, int y) { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

Truncation build_grid3z(int n) {
  Truncation t;
  LayerWriter w(t);
  // Row y lives at index rows[y + n].
  std::vector<std::array<VertexId, 3>> rows(2 * static_cast<std::size_t>(n) + 1);
  auto row = [&](int y) -> std::array<VertexId, 3>& { return rows[static_cast<std::size_t>(y + n)]; };
  auto add_row = [&](int y, int at, int settled) {
    for (int x = 1; x <= 3; ++x) {
      const VertexId v = w.vertex(grid_name(x, y), at, settled);
      row(y)[static_cast<std::size_t>(x - 1)] = v;
      if (x == 3) w.sink(v);
    }
  };
  add_row(0, 1, 1);
  w.edge(row(0)[0], row(0)[1]);
  w.edge(row(0)[1], row(0)[2]);
  for (int k = 1; k <= n; ++k) {
    add_row(k, k, k + 1);
    for (std::size_t x = 0; x < 3; ++x) w.edge(row(k - 1)[x], row(k)[x]);
    w.edge(row(k)[0], row(k)[1]);
    w.edge(row(k)[1], row(k)[2]);
    add_row(-k, k, k);
    for (std::size_t x = 0; x < 3; ++x) w.edge(row(-k)[x], row(-k + 1)[x]);
    w.edge(row(-k)[0], row(-k)[1]);
    w.edge(row(-k)[1], row(-k)[2]);
  }
  // The layer-0 row is settled only once row 1 exists.
  for (std::size_t x = 0; x < 3; ++x) t.settled_from[row(0)[x]] = 1;
  std::sort(t.sink_set.begin(), t.sink_set.end());
  return t;
}

Truncation build_fan(int n) {
  Truncation t;
  LayerWriter w(t);
  const VertexId u = w.vertex("u", 1, kNeverSettled);
  const VertexId b = w.vertex("b", 1, 1);
  for (int i = 1; i <= n; ++i) {
    const VertexId m = w.vertex(indexed("m", i), i, i);
    w.edge(u, m);
    w.edge(m, b);
  }
  w.sink(b);
  t.sink = b;
  w.source(u);
  return t;
}

Truncation build_fans(int n) {
  Truncation t;
  LayerWriter w(t);
  const VertexId b = w.vertex("b", 1, 1);
  std::vector<VertexId> hubs;
  for (int d = 1; d <= n; ++d) {
    hubs.push_back(w.vertex(indexed("h", d), d, kNeverSettled));
    w.source(hubs.back());
    for (int j = 1; j <= d; ++j) {
      const VertexId m = w.vertex("m_" + std::to_string(j) + "_" + std::to_string(d), d, d);
      w.edge(hubs[static_cast<std::size_t>(j - 1)], m);
      w.edge(m, b);
    }
  }
  w.sink(b);
  t.sink = b;
  return t;
}

Truncation build_comb_steal(int n) {
  Truncation t;
  LayerWriter w(t);
  const VertexId b = w.vertex("b", 1, 1);
  VertexId prev = w.vertex("r_0", 1, 1);
  w.source(prev);
  for (int i = 1; i <= n; ++i) {
    const VertexId r = w.vertex(indexed("r", i), i, i + 1);
    const VertexId s = w.vertex(indexed("s", i), i, i);
    w.edge(prev, r);
    w.edge(s, r);
    w.edge(r, b);
    w.source(s);
    prev = r;
  }
  w.sink(b);
  t.sink = b;
  return t;
}

}  // namespace

std::vector<std::string> family_names() { return {"ac", "grid3Z", "fan", "comb_steal", "fans"}; }

GraphPresentation generate_family(std::string_view name, int depth) {
  if (depth < 1) throw PreconditionError("depth must be positive");
  if (name == "ac") return {"ac", depth, build_ac};
  if (name == "grid3Z") return {"grid3Z", depth, build_grid3z};
  if (name == "fan") return {"fan", depth, build_fan};
  if (name == "comb_steal") return {"comb_steal", depth, build_comb_steal};
  if (name == "fans") return {"fans", depth, build_fans};
  throw PreconditionError("unknown family " + std::string(name));
}

GraphPresentation static_presentation(const LinkageProblem& problem) {
  auto builder = [problem](int) {
    Truncation t;
    t.graph = problem.graph;
    t.sink_set = problem.sink_set;
    t.sink = problem.sink;
    t.sources = problem.sources;
    t.settled_from.assign(problem.graph.vertex_count(), 1);
    t.appeared_at.assign(problem.graph.vertex_count(), 1);
    return t;
  };
  return {"static", 1, builder, true};
}

GraphPresentation sink_reduced(const GraphPresentation& p, int capacity) {
  if (capacity < 1) throw PreconditionError("sink capacity must be positive");
  auto builder = [p, capacity](int n) {
    Truncation t;
    LayerWriter w(t);
    const VertexId sink = w.vertex("b*", 1, 1);
    t.sink = sink;
    std::size_t seen_vertices = 0;
    std::size_t seen_edges = 0;
    const int last = p.finite() ? 1 : n;
    Truncation base;
    for (int d = 1; d <= last; ++d) {
      base = p.truncation(d);
      const auto in_b = membership(base.graph.vertex_count(), base.sink_set);
      for (std::size_t v = seen_vertices; v < base.graph.vertex_count(); ++v) {
        w.vertex(base.graph.name(static_cast<VertexId>(v)), base.appeared_at[v], base.settled_from[v]);
      }
      for (std::size_t e = seen_edges; e < base.graph.edge_count(); ++e) {
        const Edge& edge = base.graph.edge(static_cast<EdgeId>(e));
        w.edge(edge.tail + 1, edge.head + 1);
      }
      for (std::size_t v = seen_vertices; v < base.graph.vertex_count(); ++v) {
        if (!in_b[v]) continue;
        for (int k = 0; k < capacity; ++k) w.edge(static_cast<VertexId>(v + 1), sink);
      }
      seen_vertices = base.graph.vertex_count();
      seen_edges = base.graph.edge_count();
    }
    for (VertexId v : base.sources) t.sources.push_back(v + 1);
    t.sink_set = {sink};
    return t;
  };
  return {p.family() + "+sink", p.depth(), builder, p.finite()};
}

}  // namespace gammoid
