#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gammoid {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  EdgeId id;
  VertexId tail;
  VertexId head;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite multi-digraph with named vertices.
///
/// Vertex and edge ids are dense and equal to insertion order, so a graph built
/// by appending to another keeps every id of the original. Parallel edges and
/// self-loops are allowed; self-loops never lie on a path.
class Digraph {
 public:
  Digraph() = default;

  /// Adds a vertex; throws PreconditionError if the name is taken.
  VertexId add_vertex(std::string name);
  EdgeId add_edge(VertexId tail, VertexId head);

  [[nodiscard]] std::size_t vertex_count() const noexcept { return names_.size(); }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }

  [[nodiscard]] const std::string& name(VertexId v) const { return names_.at(v); }
  [[nodiscard]] std::optional<VertexId> find(std::string_view name) const;
  /// Like find() but throws PreconditionError for unknown names.
  [[nodiscard]] VertexId at(std::string_view name) const;

  [[nodiscard]] const Edge& edge(EdgeId e) const { return edges_.at(e); }
  [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }
  [[nodiscard]] std::span<const EdgeId> out_edges(VertexId v) const { return out_.at(v); }
  [[nodiscard]] std::span<const EdgeId> in_edges(VertexId v) const { return in_.at(v); }
  [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }

  /// True if `smaller` is a prefix of this graph: same names and edges at every
  /// shared id. This is the nesting relation between truncations.
  [[nodiscard]] bool extends(const Digraph& smaller) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
  std::unordered_map<std::string, VertexId> index_;
};

/// Characteristic vector over the vertices of a graph.
using Membership = std::vector<char>;

[[nodiscard]] Membership membership(std::size_t n, std::span<const VertexId> vertices);
[[nodiscard]] std::vector<VertexId> members(const Membership& m);

/// Sorted, duplicate-free copy.
[[nodiscard]] std::vector<VertexId> normalized(std::vector<VertexId> vertices);

/// Vertices that reach `target` in g without using edges flagged in `removed`.
[[nodiscard]] Membership reaching(const Digraph& g, std::span<const VertexId> targets,
                                  const std::vector<char>& removed_edges = {});
/// Vertices reachable from `sources` without using edges flagged in `removed`.
[[nodiscard]] Membership reachable_from(const Digraph& g, std::span<const VertexId> sources,
                                        const std::vector<char>& removed_edges = {});

}  // namespace gammoid
