#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gammoid/chain.hpp"

namespace gammoid {

struct VertexKappa {
  VertexId vertex = 0;
  std::string name;
  /// Disjoint paths to B per depth; 0 where the vertex is absent.
  std::vector<std::size_t> kappa;
  bool flagged = false;
};

struct DominationReport {
  std::string family;
  Mode mode = Mode::DirectedEdge;
  bool finite = false;
  std::vector<int> depths;
  std::vector<VertexKappa> vertices;
  /// Per depth: vertices whose κ rose strictly over the three depths ending there
  /// (zero for the first two depths).
  std::vector<std::size_t> flagged_per_depth;
  /// Per depth: dominating-ray candidates among the stabilized paths of a
  /// chain run for that many steps. Empty when the chain could not be built.
  std::vector<std::size_t> ray_candidates_per_depth;
  std::string chain_note;
};

struct DiagnosticOptions {
  Mode mode = Mode::DirectedEdge;
  bool run_chain = true;
  /// Truncation budget for the chain runs; 0 picks twice the largest depth.
  int chain_max_depth = 0;
};

/// κ_v(d): edge modes count edge-disjoint v-B paths; vertex modes count paths
/// disjoint except at v. Vertices of B are skipped.
[[nodiscard]] DominationReport domination_diagnostics(const GraphPresentation& p, std::vector<int> depths,
                                                      const DiagnosticOptions& options = {});

enum class NearlyFinitary { ConsistentWithYes, No, Undetermined };
[[nodiscard]] std::string to_string(NearlyFinitary v);

/// "no" when the number of flagged vertices or of ray candidates rises strictly
/// over the last three depths (flag counts need five depths); evidence only.
[[nodiscard]] NearlyFinitary nearly_finitary_verdict(const DominationReport& report);

}  // namespace gammoid
