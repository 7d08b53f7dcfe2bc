#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gammoid/problem.hpp"

namespace gammoid {

/// A directed path (or, in undirected modes, a path traversing edges in the
/// recorded vertex order). `vertices.size() == edges.size() + 1`; a trivial
/// path has no edges.
struct Path {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  [[nodiscard]] VertexId start() const { return vertices.front(); }
  [[nodiscard]] VertexId end() const { return vertices.back(); }
  [[nodiscard]] bool trivial() const noexcept { return edges.empty(); }

  friend bool operator==(const Path&, const Path&) = default;
};

struct Linkage {
  Mode mode = Mode::DirectedEdge;
  std::vector<Path> paths;

  [[nodiscard]] std::size_t size() const noexcept { return paths.size(); }
  /// Path starting at v, if any.
  [[nodiscard]] const Path* from(VertexId v) const;

  friend bool operator==(const Linkage&, const Linkage&) = default;
};

/// Edge ids in edge modes, vertex ids in vertex modes. In edge modes a source
/// that is also a sink cannot be cut by edges and is listed under `vertices`.
struct Separator {
  Mode mode = Mode::DirectedEdge;
  std::vector<EdgeId> edges;
  std::vector<VertexId> vertices;

  [[nodiscard]] std::size_t size() const noexcept { return edges.size() + vertices.size(); }

  friend bool operator==(const Separator&, const Separator&) = default;
};

struct MengerResult {
  Linkage linkage;
  Separator separator;

  [[nodiscard]] std::size_t value() const noexcept { return linkage.size(); }
};

struct LinkageOptions {
  /// At most one path per source: the linkage notion of "linking a set". In
  /// edge modes this differs from the classical Menger count, which lets a
  /// source start several edge-disjoint paths. Vertex modes are unaffected.
  bool one_path_per_source = false;
  /// Vertex modes only: sinks may be shared endpoints (b as a common target).
  bool shared_sinks = false;
  /// Sources in the order their super-source arcs are added (tie-breaking).
  /// Empty means ascending vertex id.
  std::vector<VertexId> source_order;
};

/// Maximum family of disjoint source-sink paths and a minimum separator of the
/// same size. Paths end at their first sink; a source that is a sink gets a
/// trivial path. Deterministic: arcs are scanned by ascending edge id and the
/// separator is read off the source-minimal minimum cut.
[[nodiscard]] MengerResult max_linkage(const Digraph& g, std::span<const VertexId> sources,
                                       std::span<const VertexId> sinks, Mode mode,
                                       const LinkageOptions& options = {});
[[nodiscard]] MengerResult max_linkage(const LinkageProblem& problem);

/// True iff every source can be linked simultaneously (one path each).
[[nodiscard]] bool is_linkable(const Digraph& g, std::span<const VertexId> sources,
                               std::span<const VertexId> sinks, Mode mode, bool shared_sinks = false);
[[nodiscard]] bool is_linkable(const LinkageProblem& problem);

/// Checks the linkage invariants: each path starts at a source, ends at its
/// first sink, is consecutive, and the family is disjoint in the given mode
/// (with one path per source when `one_per_source`). Returns a reason on failure.
[[nodiscard]] std::optional<std::string> validate_linkage(const Digraph& g, const Linkage& linkage,
                                                          std::span<const VertexId> sources,
                                                          std::span<const VertexId> sinks,
                                                          bool one_per_source = false,
                                                          bool shared_sinks = false);

/// True iff no source-sink path survives deleting the separator.
[[nodiscard]] bool separates(const Digraph& g, const Separator& separator, std::span<const VertexId> sources,
                             std::span<const VertexId> sinks);

// -- reductions between the four versions -------------------------------------

/// Vertex splitting: v becomes (v,in) -> (v,out), each edge v->w becomes
/// (v,out) -> (w,in). Vertex ids: in = 2v, out = 2v + 1.
struct VertexSplit {
  Digraph graph;
  std::vector<EdgeId> internal_edge;  // per original vertex
  std::vector<EdgeId> image_edge;     // per original edge

  [[nodiscard]] static constexpr VertexId in(VertexId v) noexcept { return 2 * v; }
  [[nodiscard]] static constexpr VertexId out(VertexId v) noexcept { return 2 * v + 1; }

  /// Maps a path of the split graph starting at an in-vertex back to G.
  [[nodiscard]] Path path_back(const Path& path) const;
  /// Maps an edge separator of the split graph to a vertex separator of G.
  [[nodiscard]] Separator separator_back(const Separator& separator) const;
};
[[nodiscard]] VertexSplit reduce_vertex_to_edge(const Digraph& g);

/// Each undirected edge i becomes directed edges 2i (tail->head) and 2i+1 (head->tail).
[[nodiscard]] Digraph reduce_undirected(const Digraph& g);
[[nodiscard]] constexpr EdgeId undirected_origin(EdgeId directed) noexcept { return directed / 2; }

/// Line-graph reduction for the directed edge version. Each non-loop edge e of
/// G becomes a vertex of H; e -> f when head(e) = tail(f) and head(e) is not a
/// sink. Sources of H are the edges leaving a source (that is not a sink),
/// sinks of H are the edges entering a sink, and every source that is also a
/// sink gets an isolated terminal that is both. Edge-disjoint families in G
/// correspond to vertex-disjoint families in H.
struct LineGraph {
  Digraph graph;
  std::vector<VertexId> sources;
  std::vector<VertexId> sinks;
  std::vector<std::optional<EdgeId>> origin_edge;     // per H vertex; empty for terminals
  std::vector<std::optional<VertexId>> terminal_for;  // per H vertex; the trivial-path vertex

  [[nodiscard]] Path path_back(const Digraph& g, const Path& path) const;
};
[[nodiscard]] LineGraph reduce_edge_to_vertex(const Digraph& g, std::span<const VertexId> sources,
                                              std::span<const VertexId> sinks);

struct SinkReduction {
  Digraph graph;
  VertexId sink;
};
/// Adds a fresh sink b with min(capacity, needed) parallel edges from each
/// vertex of B. `capacity` empty means "needed", i.e. `source_count`.
[[nodiscard]] SinkReduction sink_reduce(const Digraph& g, std::span<const VertexId> sink_set,
                                        std::size_t source_count, std::optional<std::size_t> capacity = {});

}  // namespace gammoid
