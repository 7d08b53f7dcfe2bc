#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gammoid/menger.hpp"

namespace gammoid {

/// Vertex sets are sorted, duplicate-free vectors of vertex ids throughout.
using VertexSet = std::vector<VertexId>;

/// Edges with tail in D and head outside D, ascending by id.
[[nodiscard]] std::vector<EdgeId> crossing_edges(const Digraph& g, std::span<const VertexId> d);

/// Vertices that cannot reach b once the D-crossing edges are deleted.
/// Throws PreconditionError if b is in D.
[[nodiscard]] VertexSet hull(const Digraph& g, std::span<const VertexId> d, VertexId b);

/// b not in D and the number of D-crossing edges equals |D ∩ I|.
[[nodiscard]] bool is_exact(const Digraph& g, std::span<const VertexId> d, std::span<const VertexId> sources,
                            VertexId b);

/// Same crossing edges. Hulls are compared as well when b lies outside both sets;
/// a disagreement raises InvariantError.
[[nodiscard]] bool equivalent(const Digraph& g, std::span<const VertexId> d, std::span<const VertexId> other,
                              VertexId b);

struct ExactSet {
  VertexSet members;
  std::vector<EdgeId> crossing;
  VertexSet hull;  // empty when b is a member
  bool exact = false;

  [[nodiscard]] std::size_t order() const noexcept { return crossing.size(); }
};
[[nodiscard]] ExactSet analyze(const Digraph& g, std::span<const VertexId> d, std::span<const VertexId> sources,
                               VertexId b);

/// An exact hull containing v, read off the source side of a minimum cut
/// between I + v and b where v has unbounded supply. Returns nothing when v
/// lies in no exact set; for v outside I that happens iff I + v is linkable.
/// Throws PreconditionError if v = b or I is not linkable to b.
[[nodiscard]] std::optional<VertexSet> find_exact_set(const Digraph& g, VertexId v,
                                                      std::span<const VertexId> sources, VertexId b);

/// Exact superset of D containing every vertex of the linkage except b,
/// hulled. Throws PreconditionError if D is not exact and Error if some
/// vertex has no exact cover.
[[nodiscard]] VertexSet forwarder(const Digraph& g, std::span<const VertexId> d, const Linkage& linkage,
                                  std::span<const VertexId> sources, VertexId b);

/// Every exact subset of V(g), ascending by bitmask. Throws BudgetExceeded if
/// 2^|V| exceeds `budget`.
[[nodiscard]] std::vector<VertexSet> enumerate_exact_sets(const Digraph& g, std::span<const VertexId> sources,
                                                          VertexId b, std::uint64_t budget = 1u << 14);

enum class Closure { Subsets, Unions };

/// Closes a family of exact sets: `Subsets` adds every exact subset of a
/// member, `Unions` closes under pairwise unions. The result is sorted and
/// duplicate-free. Throws PreconditionError for non-exact members.
[[nodiscard]] std::vector<VertexSet> closure_family(const Digraph& g, std::span<const VertexSet> family,
                                                    std::span<const VertexId> sources, VertexId b,
                                                    Closure which, std::uint64_t budget = 1u << 14);

struct ClosureOrders {
  std::vector<VertexSet> subsets_then_unions;
  std::vector<VertexSet> unions_then_subsets;
};
[[nodiscard]] ClosureOrders closure_both_orders(const Digraph& g, std::span<const VertexSet> family,
                                                std::span<const VertexId> sources, VertexId b,
                                                std::uint64_t budget = 1u << 14);

/// Greedy maximal J with I ⊆ J ⊆ I ∪ X and J linkable to b (one edge-disjoint
/// path per vertex), scanning X by ascending id. Throws PreconditionError if I
/// is not linkable.
[[nodiscard]] VertexSet extend_to_maximal(const Digraph& g, std::span<const VertexId> sources,
                                          std::span<const VertexId> candidates, VertexId b);

struct CloneExtension {
  Digraph graph;
  /// Original vertex each vertex copies; identity on the vertices of g.
  std::vector<VertexId> origin;
};
/// Adds, for every v other than b, k_v clones of v (k_v = minimum edge cut
/// from v to b) with the out-edges of v and no in-edges. Vertices of g keep
/// their ids; clones are named "v#1", "v#2", ...
[[nodiscard]] CloneExtension clone_extend(const Digraph& g, VertexId b);

}  // namespace gammoid
