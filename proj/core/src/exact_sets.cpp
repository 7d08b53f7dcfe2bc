#include "gammoid/exact_sets.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "gammoid/error.hpp"
#include "gammoid/flow.hpp"

namespace gammoid {

namespace {

using Mask = std::uint64_t;

void require_vertex(const Digraph& g, VertexId v) {
  if (v >= g.vertex_count()) throw PreconditionError("vertex out of range");
}

VertexSet set_of(std::span<const VertexId> d) { return normalized({d.begin(), d.end()}); }

std::size_t count_in(std::span<const VertexId> vertices, const Membership& m) {
  return static_cast<std::size_t>(std::count_if(vertices.begin(), vertices.end(), [&](VertexId v) { return m[v]; }));
}

bool linkable_to(const Digraph& g, std::span<const VertexId> sources, VertexId b) {
  const VertexId sink[] = {b};
  return is_linkable(g, sources, sink, Mode::DirectedEdge);
}

VertexSet from_mask(Mask mask) {
  VertexSet out;
  for (VertexId v = 0; mask != 0; ++v, mask >>= 1) {
    if (mask & 1) out.push_back(v);
  }
  return out;
}

Mask to_mask(std::span<const VertexId> d) {
  Mask m = 0;
  for (VertexId v : d) m |= Mask{1} << v;
  return m;
}

struct ExactTable {
  std::vector<Mask> exact;  // ascending
  std::vector<char> is_exact;
};

ExactTable exact_table(const Digraph& g, std::span<const VertexId> sources, VertexId b, std::uint64_t budget) {
  const std::size_t n = g.vertex_count();
  if (n >= 63 || (Mask{1} << n) > budget) throw BudgetExceeded("exact-set enumeration needs 2^" + std::to_string(n) + " subsets");
  require_vertex(g, b);
  const Mask source_mask = to_mask(sources);
  ExactTable table;
  table.is_exact.assign(std::size_t{1} << n, 0);
  for (Mask d = 0; d < (Mask{1} << n); ++d) {
    if (d >> b & 1) continue;
    std::size_t order = 0;
    for (const Edge& e : g.edges()) {
      if ((d >> e.tail & 1) && !(d >> e.head & 1)) ++order;
    }
    if (order == static_cast<std::size_t>(std::popcount(d & source_mask))) {
      table.is_exact[d] = 1;
      table.exact.push_back(d);
    }
  }
  return table;
}

std::vector<VertexSet> to_family(const std::set<Mask>& masks) {
  std::vector<VertexSet> out;
  for (Mask m : masks) out.push_back(from_mask(m));
  std::sort(out.begin(), out.end());
  return out;
}

std::set<Mask> subsets_closure(const ExactTable& table, const std::set<Mask>& family) {
  std::set<Mask> out = family;
  for (Mask d : family) {
    for (Mask e : table.exact) {
      if ((e & ~d) == 0) out.insert(e);
    }
  }
  return out;
}

std::set<Mask> unions_closure(const std::set<Mask>& family) {
  std::set<Mask> out = family;
  std::vector<Mask> frontier(family.begin(), family.end());
  while (!frontier.empty()) {
    std::vector<Mask> next;
    const std::vector<Mask> current(out.begin(), out.end());
    for (Mask a : frontier) {
      for (Mask c : current) {
        if (out.insert(a | c).second) next.push_back(a | c);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

std::set<Mask> checked_family(const ExactTable& table, std::span<const VertexSet> family) {
  std::set<Mask> masks;
  for (const VertexSet& d : family) {
    const Mask m = to_mask(d);
    if (!table.is_exact[m]) throw PreconditionError("closure_family member is not exact");
    masks.insert(m);
  }
  return masks;
}

}  // namespace

std::vector<EdgeId> crossing_edges(const Digraph& g, std::span<const VertexId> d) {
  const auto in = membership(g.vertex_count(), set_of(d));
  std::vector<EdgeId> out;
  for (const Edge& e : g.edges()) {
    if (in[e.tail] && !in[e.head]) out.push_back(e.id);
  }
  return out;
}

VertexSet hull(const Digraph& g, std::span<const VertexId> d, VertexId b) {
  require_vertex(g, b);
  if (std::find(d.begin(), d.end(), b) != d.end()) throw PreconditionError("hull: b lies in D");
  std::vector<char> removed(g.edge_count(), 0);
  for (EdgeId e : crossing_edges(g, d)) removed[e] = 1;
  const VertexId target[] = {b};
  const auto reach = reaching(g, target, removed);
  VertexSet out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!reach[v]) out.push_back(v);
  }
  return out;
}

bool is_exact(const Digraph& g, std::span<const VertexId> d, std::span<const VertexId> sources, VertexId b) {
  const auto set = set_of(d);
  if (std::binary_search(set.begin(), set.end(), b)) return false;
  const auto in = membership(g.vertex_count(), set);
  return crossing_edges(g, set).size() == count_in(set_of(sources), in);
}

bool equivalent(const Digraph& g, std::span<const VertexId> d, std::span<const VertexId> other, VertexId b) {
  const bool same = crossing_edges(g, d) == crossing_edges(g, other);
  const bool b_outside = std::find(d.begin(), d.end(), b) == d.end() &&
                         std::find(other.begin(), other.end(), b) == other.end();
  if (same && b_outside && hull(g, d, b) != hull(g, other, b)) {
    throw InvariantError("equal crossing edges but different hulls");
  }
  return same;
}

ExactSet analyze(const Digraph& g, std::span<const VertexId> d, std::span<const VertexId> sources, VertexId b) {
  ExactSet s;
  s.members = set_of(d);
  s.crossing = crossing_edges(g, s.members);
  s.exact = is_exact(g, s.members, sources, b);
  if (!std::binary_search(s.members.begin(), s.members.end(), b)) s.hull = hull(g, s.members, b);
  return s;
}

std::optional<VertexSet> find_exact_set(const Digraph& g, VertexId v, std::span<const VertexId> sources,
                                        VertexId b) {
  require_vertex(g, v);
  require_vertex(g, b);
  if (v == b) throw PreconditionError("find_exact_set: v equals b");
  const auto source_set = set_of(sources);
  if (std::binary_search(source_set.begin(), source_set.end(), b)) throw PreconditionError("b lies in I");
  if (!linkable_to(g, source_set, b)) throw PreconditionError("I is not linkable to b");

  const std::size_t n = g.vertex_count();
  FlowNetwork net(n + 1);
  const std::size_t s = n;
  for (const Edge& e : g.edges()) {
    if (e.tail != e.head && e.tail != b) net.add_arc(e.tail, e.head, 1);
  }
  for (VertexId a : source_set) {
    if (a != v) net.add_arc(s, a, 1);
  }
  net.add_arc(s, v, FlowNetwork::kInfinite);
  if (net.max_flow(s, b) != static_cast<FlowNetwork::Capacity>(source_set.size())) return std::nullopt;

  const auto side = net.residual_reachable(s);
  VertexSet d;
  for (VertexId x = 0; x < n; ++x) {
    if (side[x]) d.push_back(x);
  }
  auto result = hull(g, d, b);
  if (!is_exact(g, result, source_set, b)) throw InvariantError("min-cut side is not exact");
  return result;
}

VertexSet forwarder(const Digraph& g, std::span<const VertexId> d, const Linkage& linkage,
                    std::span<const VertexId> sources, VertexId b) {
  if (!is_exact(g, d, sources, b)) throw PreconditionError("forwarder: D is not exact");
  auto cover = membership(g.vertex_count(), set_of(d));
  for (const Path& p : linkage.paths) {
    for (VertexId x : p.vertices) {
      if (x == b || cover[x]) continue;
      const auto found = find_exact_set(g, x, sources, b);
      if (!found) throw Error("vertex " + g.name(x) + " has no exact cover");
      for (VertexId y : *found) cover[y] = 1;
    }
  }
  auto result = hull(g, members(cover), b);
  if (!is_exact(g, result, sources, b)) throw InvariantError("forwarder is not exact");
  return result;
}

std::vector<VertexSet> enumerate_exact_sets(const Digraph& g, std::span<const VertexId> sources, VertexId b,
                                            std::uint64_t budget) {
  const auto table = exact_table(g, sources, b, budget);
  std::vector<VertexSet> out;
  for (Mask m : table.exact) out.push_back(from_mask(m));
  return out;
}

std::vector<VertexSet> closure_family(const Digraph& g, std::span<const VertexSet> family,
                                      std::span<const VertexId> sources, VertexId b, Closure which,
                                      std::uint64_t budget) {
  const auto table = exact_table(g, sources, b, budget);
  const auto masks = checked_family(table, family);
  return to_family(which == Closure::Subsets ? subsets_closure(table, masks) : unions_closure(masks));
}

ClosureOrders closure_both_orders(const Digraph& g, std::span<const VertexSet> family,
                                  std::span<const VertexId> sources, VertexId b, std::uint64_t budget) {
  const auto table = exact_table(g, sources, b, budget);
  const auto masks = checked_family(table, family);
  return {to_family(unions_closure(subsets_closure(table, masks))),
          to_family(subsets_closure(table, unions_closure(masks)))};
}

VertexSet extend_to_maximal(const Digraph& g, std::span<const VertexId> sources,
                            std::span<const VertexId> candidates, VertexId b) {
  require_vertex(g, b);
  auto j = set_of(sources);
  if (!linkable_to(g, j, b)) throw PreconditionError("I is not linkable to b");
  for (VertexId x : set_of(candidates)) {
    if (x == b || std::binary_search(j.begin(), j.end(), x)) continue;
    auto trial = j;
    trial.insert(std::upper_bound(trial.begin(), trial.end(), x), x);
    if (linkable_to(g, trial, b)) j = std::move(trial);
  }
  return j;
}

CloneExtension clone_extend(const Digraph& g, VertexId b) {
  require_vertex(g, b);
  CloneExtension ext{g, {}};
  for (VertexId v = 0; v < g.vertex_count(); ++v) ext.origin.push_back(v);
  const VertexId sink[] = {b};
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (v == b) continue;
    const VertexId source[] = {v};
    const std::size_t k = max_linkage(g, source, sink, Mode::DirectedEdge).value();
    for (std::size_t i = 1; i <= k; ++i) {
      std::string name = g.name(v) + "#" + std::to_string(i);
      while (ext.graph.find(name)) name += "'";
      const VertexId clone = ext.graph.add_vertex(name);
      ext.origin.push_back(v);
      for (EdgeId e : g.out_edges(v)) {
        ext.graph.add_edge(clone, g.edge(e).head);
      }
    }
  }
  return ext;
}

}  // namespace gammoid
