#include "gammoid/brute_force.hpp"

#include <algorithm>
#include <functional>

#include "gammoid/error.hpp"

namespace gammoid {

BrutePaths::BrutePaths(const Digraph& g, std::span<const VertexId> candidate_sources,
                       std::span<const VertexId> sinks, Mode mode, bool shared_sinks, std::size_t path_budget)
    : mode_(mode), vertices_(g.vertex_count()) {
  if (g.vertex_count() > 64 || g.edge_count() > kVertexBase) {
    throw PreconditionError("brute-force oracle limited to 64 vertices and 128 edges");
  }
  const auto is_sink = membership(g.vertex_count(), normalized({sinks.begin(), sinks.end()}));
  const bool edge_mode = is_edge_mode(mode);
  const bool directed = is_directed(mode);

  auto emit = [&](const Path& path) {
    if (paths_.size() >= path_budget) throw BudgetExceeded("brute-force path budget exceeded");
    Candidate c{path, {}, {}};
    if (path.trivial()) {
      const std::size_t bit = edge_mode ? kVertexBase + path.start() : path.start();
      c.hit.set(bit);
      c.conflict.set(bit);
    } else if (edge_mode) {
      for (EdgeId e : path.edges) c.hit.set(e);
      c.conflict = c.hit;
    } else {
      for (VertexId v : path.vertices) {
        c.hit.set(v);
        if (!(shared_sinks && is_sink[v])) c.conflict.set(v);
      }
    }
    paths_.push_back(std::move(c));
  };

  std::vector<char> on_path(g.vertex_count(), 0);
  Path path;
  std::function<void(VertexId)> walk = [&](VertexId v) {
    if (is_sink[v]) {
      emit(path);
      return;
    }
    auto step = [&](EdgeId e, VertexId w) {
      if (w == v || on_path[w]) return;
      on_path[w] = 1;
      path.vertices.push_back(w);
      path.edges.push_back(e);
      walk(w);
      path.vertices.pop_back();
      path.edges.pop_back();
      on_path[w] = 0;
    };
    for (EdgeId e : g.out_edges(v)) step(e, g.edge(e).head);
    if (!directed) {
      for (EdgeId e : g.in_edges(v)) step(e, g.edge(e).tail);
    }
  };
  for (VertexId a : normalized({candidate_sources.begin(), candidate_sources.end()})) {
    if (a >= g.vertex_count()) throw PreconditionError("source out of range");
    path = Path{{a}, {}};
    on_path[a] = 1;
    walk(a);
    on_path[a] = 0;
  }
}

std::vector<std::size_t> BrutePaths::candidates_from(std::span<const VertexId> sources) const {
  const auto chosen = membership(vertices_, normalized({sources.begin(), sources.end()}));
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < paths_.size(); ++i) {
    if (chosen[paths_[i].path.start()]) out.push_back(i);
  }
  return out;
}

namespace {

bool subset_of(const std::bitset<192>& a, const std::bitset<192>& b) { return (a & ~b).none(); }

}  // namespace

Linkage BrutePaths::max_packing(std::span<const VertexId> sources, bool one_per_source) const {
  const bool edge_mode = is_edge_mode(mode_);
  // Paths are grouped by a resource every path of the group consumes and no two chosen
  // paths can share: the source when it may start one path, else the first edge (edge
  // versions) or the start vertex.
  struct Option {
    std::size_t path;
    Mask conflict;
    std::size_t last_key;
  };
  std::vector<std::pair<std::size_t, std::vector<Option>>> groups;
  for (std::size_t i : candidates_from(sources)) {
    const Candidate& c = paths_[i];
    Mask m = c.conflict;
    if (one_per_source) m.set(kVertexBase + c.path.start());
    std::size_t first = kVertexBase + c.path.start();
    std::size_t last = first;
    if (!c.path.trivial()) {
      first = edge_mode && !one_per_source ? c.path.edges.front() : kVertexBase + c.path.start();
      last = edge_mode ? c.path.edges.back() : c.path.vertices[c.path.vertices.size() - 2];
    }
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == first; });
    if (it == groups.end()) {
      groups.push_back({first, {}});
      it = groups.end() - 1;
    }
    it->second.push_back({i, m, last});
  }
  // Within a group a path whose conflicts contain another's is never needed.
  for (auto& [key, options] : groups) {
    std::stable_sort(options.begin(), options.end(),
                     [](const Option& x, const Option& y) { return x.conflict.count() < y.conflict.count(); });
    std::vector<Option> kept;
    for (const Option& o : options) {
      const bool dominated = std::any_of(kept.begin(), kept.end(), [&](const Option& k) {
        return subset_of(k.conflict, o.conflict) && k.last_key == o.last_key;
      });
      if (!dominated) kept.push_back(o);
    }
    options = std::move(kept);
  }
  std::sort(groups.begin(), groups.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

  std::vector<std::size_t> best;
  std::vector<std::size_t> chosen;
  auto bound = [&](std::size_t pos, const Mask& used) {
    std::size_t open = 0;
    Mask lasts;
    for (std::size_t j = pos; j < groups.size(); ++j) {
      bool any = false;
      for (const Option& o : groups[j].second) {
        if ((o.conflict & used).none()) {
          any = true;
          lasts.set(o.last_key);
        }
      }
      open += any ? 1 : 0;
    }
    return std::min(open, lasts.count());
  };
  const std::size_t ceiling = bound(0, Mask{});
  std::function<void(std::size_t, const Mask&)> search = [&](std::size_t pos, const Mask& used) {
    if (chosen.size() > best.size()) best = chosen;
    if (best.size() == ceiling || pos == groups.size() || chosen.size() + bound(pos, used) <= best.size()) return;
    for (const Option& o : groups[pos].second) {
      if ((o.conflict & used).any()) continue;
      chosen.push_back(o.path);
      search(pos + 1, used | o.conflict);
      chosen.pop_back();
      if (best.size() == ceiling) return;
    }
    search(pos + 1, used);
  };
  search(0, Mask{});

  std::sort(best.begin(), best.end());
  Linkage linkage;
  linkage.mode = mode_;
  for (std::size_t i : best) linkage.paths.push_back(paths_[i].path);
  return linkage;
}

bool BrutePaths::linkable(std::span<const VertexId> sources) const {
  const auto unique = normalized({sources.begin(), sources.end()});
  return max_packing(unique, true).size() == unique.size();
}

Separator BrutePaths::min_separator(std::span<const VertexId> sources) const {
  // Minimum hitting set of the path element sets, by a bounded search tree: some element
  // of any unhit path must be cut.
  std::vector<Mask> sets;
  for (std::size_t i : candidates_from(sources)) sets.push_back(paths_[i].hit);
  std::stable_sort(sets.begin(), sets.end(), [](const Mask& x, const Mask& y) { return x.count() < y.count(); });
  std::vector<Mask> minimal;
  for (const Mask& m : sets) {
    if (std::none_of(minimal.begin(), minimal.end(), [&](const Mask& k) { return subset_of(k, m); })) {
      minimal.push_back(m);
    }
  }
  Mask cut;
  std::function<bool(std::size_t)> hit_all = [&](std::size_t left) {
    const Mask* open = nullptr;
    for (const Mask& m : minimal) {
      if ((m & cut).none() && (!open || m.count() < open->count())) open = &m;
    }
    if (!open) return true;
    if (left == 0) return false;
    for (std::size_t b = 0; b < open->size(); ++b) {
      if (!open->test(b)) continue;
      cut.set(b);
      if (hit_all(left - 1)) return true;
      cut.reset(b);
    }
    return false;
  };
  for (std::size_t k = 0;; ++k) {
    cut.reset();
    if (hit_all(k)) break;
  }

  Separator sep;
  sep.mode = mode_;
  for (std::size_t b = 0; b < cut.size(); ++b) {
    if (!cut.test(b)) continue;
    if (!is_edge_mode(mode_)) {
      sep.vertices.push_back(static_cast<VertexId>(b));
    } else if (b >= kVertexBase) {
      sep.vertices.push_back(static_cast<VertexId>(b - kVertexBase));
    } else {
      sep.edges.push_back(static_cast<EdgeId>(b));
    }
  }
  return sep;
}

}  // namespace gammoid
