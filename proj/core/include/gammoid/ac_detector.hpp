#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gammoid/menger.hpp"

namespace gammoid {

/// Images of the depth-k initial segment of the alternating comb: branch
/// vertices v1_j, v2_j, b_j (0 <= j <= k) and the subdivided edges
/// v1_j -> b_j (`pendant`, may be trivial), v2_j -> v1_j (`down`) and
/// v2_j -> v1_{j+1} (`across`, j < k).
struct AcEmbedding {
  int k = 0;
  std::vector<VertexId> b;
  std::vector<VertexId> v1;
  std::vector<VertexId> v2;
  std::vector<Path> pendant;
  std::vector<Path> down;
  std::vector<Path> across;
};

enum class AcStatus { Found, None, Budget };
[[nodiscard]] std::string to_string(AcStatus s);

struct AcResult {
  AcStatus status = AcStatus::None;
  std::optional<AcEmbedding> embedding;
  std::uint64_t nodes = 0;
};

/// Backtracking search along the spine v1_0, v2_0, v1_1, ... with vertices
/// tried in id order, iteratively deepening the longest allowed subdivision
/// path. `budget` caps the number of path extensions over all rounds.
/// Throws PreconditionError for k < 1.
[[nodiscard]] AcResult find_ac_prefix(const Digraph& g, std::span<const VertexId> sink_set, int k,
                                      std::uint64_t budget = 2'000'000);

/// Checks B-membership, distinct branch vertices, the triviality rules and
/// internal disjointness. Returns a reason on failure.
[[nodiscard]] std::optional<std::string> verify_ac_embedding(const Digraph& g, std::span<const VertexId> sink_set,
                                                             const AcEmbedding& e);

/// The depth-k initial segment of a deeper embedding.
[[nodiscard]] AcEmbedding restrict_embedding(const AcEmbedding& e, int k);

}  // namespace gammoid
