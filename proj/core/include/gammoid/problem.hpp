#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gammoid/digraph.hpp"

namespace gammoid {

/// The four versions of Menger's theorem.
enum class Mode { DirectedEdge, DirectedVertex, UndirectedEdge, UndirectedVertex };

[[nodiscard]] std::string_view to_string(Mode mode) noexcept;
/// Parses "directed-edge" etc.; throws PreconditionError otherwise.
[[nodiscard]] Mode parse_mode(std::string_view text);
[[nodiscard]] constexpr bool is_edge_mode(Mode m) noexcept {
  return m == Mode::DirectedEdge || m == Mode::UndirectedEdge;
}
[[nodiscard]] constexpr bool is_directed(Mode m) noexcept {
  return m == Mode::DirectedEdge || m == Mode::DirectedVertex;
}

/// A graph with a source set and either a sink set B or a single sink b.
struct LinkageProblem {
  Digraph graph;
  std::vector<VertexId> sources;  // I (or A)
  std::vector<VertexId> sink_set;  // B
  std::optional<VertexId> sink;    // b
  Mode mode = Mode::DirectedEdge;

  /// {b} when a single sink is declared, otherwise B.
  [[nodiscard]] std::vector<VertexId> sinks() const;
};

}  // namespace gammoid
