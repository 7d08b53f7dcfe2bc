#include "gammoid/diagnostics.hpp"

#include <algorithm>

#include "gammoid/error.hpp"

namespace gammoid {

namespace {

std::size_t kappa(const Digraph& g, VertexId v, std::span<const VertexId> sink_set, Mode mode) {
  if (is_edge_mode(mode)) {
    const VertexId source[] = {v};
    return max_linkage(g, source, sink_set, mode).value();
  }
  // Paths disjoint except at v: split every vertex and let v start from its out-copy.
  const Digraph directed = is_directed(mode) ? g : reduce_undirected(g);
  const auto split = reduce_vertex_to_edge(directed);
  const VertexId source[] = {VertexSplit::out(v)};
  std::vector<VertexId> sinks;
  for (VertexId z : sink_set) sinks.push_back(VertexSplit::out(z));
  return max_linkage(split.graph, source, sinks, Mode::DirectedEdge).value();
}

// Strict growth over the last three samples.
bool keeps_growing(std::span<const std::size_t> c) {
  const std::size_t n = c.size();
  return n >= 3 && c[n - 3] < c[n - 2] && c[n - 2] < c[n - 1];
}

}  // namespace

DominationReport domination_diagnostics(const GraphPresentation& p, std::vector<int> depths,
                                        const DiagnosticOptions& options) {
  std::sort(depths.begin(), depths.end());
  depths.erase(std::unique(depths.begin(), depths.end()), depths.end());
  if (depths.empty() || depths.front() < 1) throw PreconditionError("depths must be positive and non-empty");
  DominationReport report;
  report.family = p.family();
  report.mode = options.mode;
  report.finite = p.finite();
  report.depths = depths;

  const Truncation deepest = p.truncation(depths.back());
  const auto in_b = membership(deepest.graph.vertex_count(), deepest.sink_set);
  for (VertexId v = 0; v < deepest.graph.vertex_count(); ++v) {
    if (!in_b[v]) report.vertices.push_back({v, deepest.graph.name(v), {}, false});
  }
  for (std::size_t i = 0; i < depths.size(); ++i) {
    const Truncation t = p.truncation(depths[i]);
    std::size_t flagged = 0;
    for (VertexKappa& vk : report.vertices) {
      vk.kappa.push_back(vk.vertex < t.graph.vertex_count() ? kappa(t.graph, vk.vertex, t.sink_set, options.mode) : 0);
      const auto& k = vk.kappa;
      // Growth only counts across truncations that all contain the vertex.
      vk.flagged = i >= 2 && deepest.appeared_at[vk.vertex] <= depths[i - 2] && k[i - 2] < k[i - 1] && k[i - 1] < k[i];
      if (vk.flagged) ++flagged;
    }
    report.flagged_per_depth.push_back(flagged);
  }

  if (options.run_chain) {
    const GraphPresentation q = deepest.sink ? p : sink_reduced(p);
    ChainOptions co;
    co.steps = depths.back();
    co.max_depth = options.chain_max_depth > 0 ? options.chain_max_depth : std::max(2 * depths.back(), 2);
    try {
      const Chain chain = build_chain(q, co);
      for (int d : depths) {
        Chain prefix = chain;
        prefix.states.resize(std::min(prefix.states.size(), static_cast<std::size_t>(d)));
        prefix.depth = 2;
        for (const ChainState& s : prefix.states) prefix.depth = std::max(prefix.depth, s.depth);
        const auto paths = stabilized_paths(q, prefix);
        report.ray_candidates_per_depth.push_back(static_cast<std::size_t>(
            std::count_if(paths.begin(), paths.end(),
                          [](const ClassifiedPath& c) { return c.verdict == Verdict::DominatingRayCandidate; })));
      }
      if (!chain.uncovered.empty()) {
        report.chain_note = std::to_string(chain.uncovered.size()) + " scheduled vertices had no certified exact cover";
      }
    } catch (const Error& e) {
      report.chain_note = e.what();
    }
  }
  return report;
}

std::string to_string(NearlyFinitary v) {
  switch (v) {
    case NearlyFinitary::ConsistentWithYes:
      return "consistent-with-yes";
    case NearlyFinitary::No:
      return "no";
    case NearlyFinitary::Undetermined:
      break;
  }
  return "undetermined";
}

NearlyFinitary nearly_finitary_verdict(const DominationReport& report) {
  if (report.finite) return NearlyFinitary::ConsistentWithYes;
  if (report.depths.size() < 3) return NearlyFinitary::Undetermined;
  const std::span<const std::size_t> flagged(report.flagged_per_depth.begin() + 2, report.flagged_per_depth.end());
  if (keeps_growing(flagged) || keeps_growing(report.ray_candidates_per_depth)) return NearlyFinitary::No;
  if (report.ray_candidates_per_depth.empty()) return NearlyFinitary::Undetermined;
  return NearlyFinitary::ConsistentWithYes;
}

}  // namespace gammoid
