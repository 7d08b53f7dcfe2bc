#pragma once

#include <functional>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "gammoid/problem.hpp"

namespace gammoid {

inline constexpr int kNeverSettled = std::numeric_limits<int>::max();

/// One finite window onto a presented countable digraph.
struct Truncation {
  int depth = 1;
  Digraph graph;
  std::vector<VertexId> sink_set;  // B restricted to this window
  std::optional<VertexId> sink;    // designated b, when the family has one
  std::vector<VertexId> sources;   // default I restricted to this window
  /// Per vertex: first depth whose truncation already holds every out-edge of
  /// the vertex in the limit graph. kNeverSettled for infinite out-degree.
  std::vector<int> settled_from;
  /// Per vertex: first depth at which the vertex is present.
  std::vector<int> appeared_at;

  [[nodiscard]] bool settled(VertexId v) const { return settled_from.at(v) <= depth; }
  [[nodiscard]] LinkageProblem problem(Mode mode = Mode::DirectedEdge) const;
};

/// A countable digraph given by nested finite truncations G_1 ⊆ G_2 ⊆ ...
///
/// Truncation n is always an id-preserving prefix of truncation n+1, which is
/// what lets chains of vertex sets and linkages be compared across depths.
class GraphPresentation {
 public:
  using Builder = std::function<Truncation(int depth)>;

  GraphPresentation(std::string family, int depth, Builder builder, bool finite = false);

  [[nodiscard]] const std::string& family() const noexcept { return family_; }
  /// Nominal depth the presentation was generated with.
  [[nodiscard]] int depth() const noexcept { return depth_; }
  /// True for presentations of a fixed finite graph.
  [[nodiscard]] bool finite() const noexcept { return finite_; }

  [[nodiscard]] Truncation truncation(int n) const;
  [[nodiscard]] Digraph graph() const { return truncation(depth_).graph; }

 private:
  std::string family_;
  int depth_;
  Builder builder_;
  bool finite_;
};

/// Families: "ac", "grid3Z", "fan", "comb_steal", plus "fans" (a growing number
/// of growing fans, used as a non-nearly-finitary example).
[[nodiscard]] GraphPresentation generate_family(std::string_view name, int depth);
[[nodiscard]] std::vector<std::string> family_names();

[[nodiscard]] Digraph truncate(const GraphPresentation& p, int n);

/// Presentation of a fixed finite problem; every truncation is the graph itself.
[[nodiscard]] GraphPresentation static_presentation(const LinkageProblem& problem);

/// Adds a fresh sink b (vertex 0, named "b*") with `capacity` parallel edges
/// from each vertex of B. Keeps the prefix property of the wrapped presentation.
[[nodiscard]] GraphPresentation sink_reduced(const GraphPresentation& p, int capacity = 1);

}  // namespace gammoid
