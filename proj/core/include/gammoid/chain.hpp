#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gammoid/exact_sets.hpp"
#include "gammoid/families.hpp"

namespace gammoid {

/// One step of the nested construction: an exact hull D_n of the limit graph
/// and a linkage from I ∩ D_n to b, both living in the truncation of depth
/// `depth` (ids are shared with every deeper truncation).
struct ChainState {
  int step = 0;
  int depth = 0;
  /// The vertex v_n scheduled at this step, and whether an exact cover was found.
  std::optional<VertexId> vertex;
  bool covered = true;
  VertexSet d;
  std::vector<EdgeId> crossing;
  Linkage linkage;
  /// P_v(D_n; L_n) per source of the linkage, ascending by source.
  std::vector<std::pair<VertexId, Path>> prefixes;
};

struct Chain {
  std::string family;
  Digraph graph;  // deepest truncation used
  VertexId sink = 0;
  VertexSet sources;  // I within `graph`
  int depth = 0;
  std::vector<ChainState> states;
  /// Scheduled vertices for which no certified exact cover exists within the budget, ascending.
  std::vector<VertexId> uncovered;
};

struct ChainOptions {
  int steps = 10;
  /// First ambient truncation depth; doubled on demand.
  int initial_depth = 2;
  /// Largest truncation depth the construction may use.
  int max_depth = 256;
  /// Overrides the presentation's default source set I.
  std::optional<VertexSet> sources;
};

/// Builds D_1 ⊆ D_2 ⊆ ... with linkages L_n.
///
/// A set counts as exact in the limit graph only when every member has all
/// its out-edges inside the previous truncation and the crossing count
/// matches; each step enlarges the ambient truncation until that holds.
/// The presentation must have a single sink (see sink_reduced). Throws
/// PreconditionError when I ∩ V(G_{T-1}) is not linkable in G_T,
/// BudgetExceeded when a step needs more than `max_depth`, and
/// InvariantError if a step breaks one of the nesting properties.
[[nodiscard]] Chain build_chain(const GraphPresentation& p, const ChainOptions& options = {});

/// Splices `old` and `fresh` along the D-crossing edges: each crossing edge
/// keeps the old prefix up to it and the fresh suffix after it; fresh paths
/// without a crossing edge pass unchanged. Throws InvariantError when a
/// crossing edge does not lie on exactly one path of each linkage.
[[nodiscard]] Linkage reroute(const Digraph& g, const Linkage& old, const Linkage& fresh,
                              std::span<const VertexId> d);

/// Initial segment of `q` up to and including its first edge leaving D;
/// empty when q does not start in D.
[[nodiscard]] Path prefix_in(const Digraph& g, const Path& q, std::span<const VertexId> d);

/// Checks every nesting property over the whole chain; returns the violations.
[[nodiscard]] std::vector<std::string> verify_chain(const Chain& chain);

enum class Verdict { EndsAtB, DominatingRayCandidate, Undetermined };
[[nodiscard]] std::string to_string(Verdict v);

struct ClassifyOptions {
  /// Number of trailing steps in which the prefix must have grown.
  int window = 3;
};

struct ClassifiedPath {
  VertexId source = 0;
  Path path;
  Verdict verdict = Verdict::Undetermined;
  std::vector<int> witness_depths;
  std::vector<std::size_t> witness_counts;
  /// Edge-disjoint paths from the prefix to b avoiding its edges, at the last depth.
  std::vector<Path> witnesses;
  std::string diagnostic;
};

/// Edge-disjoint prefix-to-b paths in truncation `depth`, ignoring prefix edges.
[[nodiscard]] std::vector<Path> domination_witnesses(const GraphPresentation& p, const Path& prefix, VertexId b,
                                                     int depth);

[[nodiscard]] ClassifiedPath classify_path(const GraphPresentation& p, const Chain& chain, VertexId source,
                                           const ClassifyOptions& options = {});

/// P_v for every source that entered some D_n, each with its verdict.
[[nodiscard]] std::vector<ClassifiedPath> stabilized_paths(const GraphPresentation& p, const Chain& chain,
                                                           const ClassifyOptions& options = {});

}  // namespace gammoid
