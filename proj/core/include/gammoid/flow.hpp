#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace gammoid {

/// Integer max-flow network solved by Dinic's blocking-flow phases.
///
/// Arcs are scanned in insertion order, so callers control tie-breaking by the
/// order in which they add arcs. Every arc has a paired reverse arc at index ^ 1.
class FlowNetwork {
 public:
  using Capacity = std::int64_t;
  static constexpr Capacity kInfinite = std::numeric_limits<Capacity>::max() / 4;

  explicit FlowNetwork(std::size_t nodes = 0) : adjacency_(nodes) {}

  std::size_t add_node();
  /// Returns the arc index of the forward arc.
  std::size_t add_arc(std::size_t from, std::size_t to, Capacity capacity);

  Capacity max_flow(std::size_t source, std::size_t target);

  [[nodiscard]] std::size_t node_count() const noexcept { return adjacency_.size(); }
  [[nodiscard]] std::size_t arc_count() const noexcept { return arcs_.size(); }
  [[nodiscard]] Capacity flow(std::size_t arc) const { return arcs_[arc].flow; }
  [[nodiscard]] Capacity capacity(std::size_t arc) const { return arcs_[arc].capacity; }
  [[nodiscard]] std::size_t arc_from(std::size_t arc) const { return arcs_[arc ^ 1].to; }
  [[nodiscard]] std::size_t arc_to(std::size_t arc) const { return arcs_[arc].to; }
  [[nodiscard]] const std::vector<std::size_t>& arcs_out(std::size_t node) const { return adjacency_[node]; }

  /// Overrides the flow on an arc and its reverse; used to cancel opposite flows.
  void set_flow(std::size_t arc, Capacity value);

  /// Nodes reachable from `source` in the residual network. After max_flow this
  /// is the source side of the source-minimal minimum cut.
  [[nodiscard]] std::vector<char> residual_reachable(std::size_t source) const;

 private:
  struct Arc {
    std::size_t to;
    Capacity capacity;
    Capacity flow;
  };

  bool build_levels(std::size_t source, std::size_t target);
  Capacity augment(std::size_t node, std::size_t target, Capacity limit);

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace gammoid
