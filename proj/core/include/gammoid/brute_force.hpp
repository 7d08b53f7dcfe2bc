#pragma once

#include <bitset>
#include <cstddef>
#include <span>
#include <vector>

#include "gammoid/menger.hpp"

namespace gammoid {

/// Exhaustive path-packing oracle for small graphs.
///
/// Enumerates every simple path from a candidate source to its first sink,
/// then searches packings directly. Independent of the flow engine; meant for
/// cross-checking it. Throws PreconditionError for graphs with more than 64
/// vertices or 128 edges, and BudgetExceeded when the path count exceeds
/// `path_budget`.
class BrutePaths {
 public:
  BrutePaths(const Digraph& g, std::span<const VertexId> candidate_sources, std::span<const VertexId> sinks,
             Mode mode, bool shared_sinks = false, std::size_t path_budget = 200000);

  [[nodiscard]] std::size_t path_count() const noexcept { return paths_.size(); }

  /// Largest disjoint family of paths starting in `sources` (a subset of the
  /// candidates). In edge modes without `one_per_source` a source may start
  /// several paths.
  [[nodiscard]] Linkage max_packing(std::span<const VertexId> sources, bool one_per_source = false) const;
  [[nodiscard]] bool linkable(std::span<const VertexId> sources) const;

  /// Smallest set of edges (edge modes, plus sources that are sinks) or
  /// vertices (vertex modes) meeting every path from `sources`.
  [[nodiscard]] Separator min_separator(std::span<const VertexId> sources) const;

 private:
  using Mask = std::bitset<192>;
  static constexpr std::size_t kVertexBase = 128;

  struct Candidate {
    Path path;
    Mask hit;       // elements a separator may delete
    Mask conflict;  // shared resources under the disjointness rule
  };

  [[nodiscard]] std::vector<std::size_t> candidates_from(std::span<const VertexId> sources) const;

  Mode mode_;
  std::size_t vertices_;
  std::vector<Candidate> paths_;
  std::vector<std::size_t> separator_elements_;
};

}  // namespace gammoid
