#include <doctest.h>

#include <algorithm>

#include "gammoid/error.hpp"
#include "gammoid/exact_sets.hpp"
#include "gammoid/families.hpp"
#include "gammoid/graph_io.hpp"
#include "gammoid/menger.hpp"
#include "test_support.hpp"

using namespace gammoid;

namespace {

struct TwoStrand {
  LinkageProblem p = read_graph_file(GAMMOID_DATA_DIR "/two_strand.g");
  const Digraph& g = p.graph;
  VertexId a1 = g.at("a1"), a2 = g.at("a2"), x1 = g.at("x1"), x2 = g.at("x2"), b = g.at("b");
  std::vector<VertexId> set(std::initializer_list<VertexId> vs) const { return normalized(vs); }
};

bool contains(const std::vector<VertexId>& d, VertexId v) { return std::binary_search(d.begin(), d.end(), v); }

// A random instance with a linkable I and a sink b that has no out-edges of interest.
struct Instance {
  Digraph g;
  std::vector<VertexId> sources;
  VertexId b = 0;
};

Instance random_instance(testing::Rng& rng, std::size_t n, double p) {
  Instance in;
  in.g = testing::random_digraph(rng, n, p, true);
  in.b = static_cast<VertexId>(n - 1);
  std::vector<VertexId> candidates;
  for (VertexId v = 0; v + 1 < n; ++v) candidates.push_back(v);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  const VertexId sink[] = {in.b};
  for (VertexId v : candidates) {
    if (std::bernoulli_distribution(0.5)(rng)) {
      auto trial = in.sources;
      trial.push_back(v);
      if (is_linkable(in.g, trial, sink, Mode::DirectedEdge)) in.sources = normalized(trial);
    }
  }
  return in;
}

}  // namespace

TEST_CASE("crossing edges") {
  TwoStrand t;
  CHECK(crossing_edges(t.g, {}).empty());
  const auto c = crossing_edges(t.g, t.set({t.a1, t.x1}));
  REQUIRE(c.size() == 1);
  CHECK(t.g.edge(c[0]).tail == t.x1);
  CHECK(t.g.edge(c[0]).head == t.b);

  const Digraph fan = generate_family("fan", 3).graph();
  std::vector<VertexId> all_but_b;
  for (VertexId v = 0; v < fan.vertex_count(); ++v) {
    if (fan.name(v) != "b") all_but_b.push_back(v);
  }
  const auto fc = crossing_edges(fan, all_but_b);
  CHECK(fc.size() == 3);
  for (EdgeId e : fc) CHECK(fan.name(fan.edge(e).tail).rfind("m_", 0) == 0);
}

TEST_CASE("exactness on the two-strand graph") {
  TwoStrand t;
  CHECK(is_exact(t.g, {}, t.p.sources, t.b));
  CHECK(is_exact(t.g, t.set({t.a1, t.x1}), t.p.sources, t.b));
  CHECK(is_exact(t.g, t.set({t.a1, t.x1, t.a2, t.x2}), t.p.sources, t.b));
  CHECK_FALSE(is_exact(t.g, t.set({t.x1}), t.p.sources, t.b));
  CHECK_FALSE(is_exact(t.g, t.set({t.x1, t.b}), t.p.sources, t.b));
}

TEST_CASE("hull examples") {
  TwoStrand t;
  CHECK(hull(t.g, t.set({t.a1}), t.b) == t.set({t.a1}));
  CHECK(hull(t.g, {}, t.b).empty());
  CHECK_THROWS_AS((void)hull(t.g, t.set({t.b}), t.b), PreconditionError);

  Digraph g = t.g;
  const VertexId island = g.add_vertex("island");
  const VertexId b = g.at("b");
  CHECK(hull(g, {}, b) == std::vector<VertexId>{island});
}

TEST_CASE("equivalence") {
  TwoStrand t;
  Digraph g = t.g;
  const VertexId island = g.add_vertex("island");
  CHECK(equivalent(g, t.set({t.a1}), t.set({t.a1, island}), t.b));
  CHECK_FALSE(equivalent(g, t.set({t.a1, t.x1}), t.set({t.a1}), t.b));
}

TEST_CASE("find_exact_set examples") {
  TwoStrand t;
  const auto d = find_exact_set(t.g, t.x1, t.p.sources, t.b);
  REQUIRE(d);
  CHECK(contains(*d, t.x1));
  CHECK(contains(*d, t.a1));
  CHECK(testing::exact_oracle(t.g, *d, t.p.sources, t.b));

  CHECK_FALSE(find_exact_set(t.g, t.x1, {}, t.b).has_value());

  const Digraph m = [] {
    Digraph g;
    for (const char* n : {"a1", "a2", "x", "b"}) g.add_vertex(n);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    return g;
  }();
  const VertexId i[] = {0};
  const auto dm = find_exact_set(m, 1, i, 3);
  REQUIRE(dm);
  CHECK(*dm == hull(m, std::vector<VertexId>{0, 1, 2}, 3));
  CHECK(crossing_edges(m, *dm).size() == 1);

  CHECK_THROWS_AS((void)find_exact_set(t.g, t.b, t.p.sources, t.b), PreconditionError);
  const VertexId both[] = {0, 1};
  CHECK_THROWS_AS((void)find_exact_set(m, 2, both, 3), PreconditionError);
}

TEST_CASE("find_exact_set is complete and sound against exhaustive search") {
  testing::Rng rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const Instance in = random_instance(rng, 2 + trial % 7, 0.35);
    const auto all = testing::subsets_without(in.g.vertex_count(), in.b);
    for (VertexId v = 0; v < in.g.vertex_count(); ++v) {
      if (v == in.b) continue;
      const bool exists = std::any_of(all.begin(), all.end(), [&](const auto& d) {
        return contains(d, v) && testing::exact_oracle(in.g, d, in.sources, in.b);
      });
      const auto found = find_exact_set(in.g, v, in.sources, in.b);
      CHECK(found.has_value() == exists);
      if (found) {
        CHECK(contains(*found, v));
        CHECK(testing::exact_oracle(in.g, *found, in.sources, in.b));
        CHECK(*found == testing::hull_oracle(in.g, *found, in.b));
      }
    }
  }
}

TEST_CASE("hull agrees with the reachability oracle and is idempotent") {
  testing::Rng rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 8;
    const Digraph g = testing::random_digraph(rng, n, 0.3, true);
    const VertexId b = static_cast<VertexId>(n - 1);
    auto d = testing::random_subset(rng, n - 1, 0.4);
    const auto h = hull(g, d, b);
    CHECK(h == testing::hull_oracle(g, d, b));
    CHECK(hull(g, h, b) == h);
    CHECK(std::includes(h.begin(), h.end(), d.begin(), d.end()));
  }
}

TEST_CASE("hull of an exact set is exact with the same sources inside") {
  testing::Rng rng(47);
  for (int trial = 0; trial < 80; ++trial) {
    const Instance in = random_instance(rng, 2 + trial % 7, 0.35);
    for (const auto& d : enumerate_exact_sets(in.g, in.sources, in.b)) {
      const auto h = hull(in.g, d, in.b);
      CHECK(is_exact(in.g, h, in.sources, in.b));
      CHECK(equivalent(in.g, d, h, in.b));
      std::size_t inside_d = 0;
      std::size_t inside_h = 0;
      for (VertexId s : in.sources) {
        inside_d += contains(d, s) ? 1 : 0;
        inside_h += contains(h, s) ? 1 : 0;
      }
      CHECK(inside_d == inside_h);
    }
  }
}

TEST_CASE("enumeration matches the definition") {
  testing::Rng rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance in = random_instance(rng, 2 + trial % 7, 0.35);
    std::vector<std::vector<VertexId>> expected;
    for (const auto& d : testing::subsets_without(in.g.vertex_count(), in.b)) {
      if (testing::exact_oracle(in.g, d, in.sources, in.b)) expected.push_back(d);
    }
    auto got = enumerate_exact_sets(in.g, in.sources, in.b);
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
  }
  Digraph big;
  for (int i = 0; i < 20; ++i) big.add_vertex("v" + std::to_string(i));
  CHECK_THROWS_AS((void)enumerate_exact_sets(big, {}, 0), BudgetExceeded);
}

TEST_CASE("unions and intersections of exact sets") {
  testing::Rng rng(59);
  for (int trial = 0; trial < 60; ++trial) {
    const Instance in = random_instance(rng, 2 + trial % 8, 0.3);
    const auto family = enumerate_exact_sets(in.g, in.sources, in.b);
    for (const auto& d : family) {
      for (const auto& e : family) {
        std::vector<VertexId> u;
        std::vector<VertexId> i;
        std::set_union(d.begin(), d.end(), e.begin(), e.end(), std::back_inserter(u));
        std::set_intersection(d.begin(), d.end(), e.begin(), e.end(), std::back_inserter(i));
        CHECK(testing::exact_oracle(in.g, u, in.sources, in.b));
        CHECK(testing::exact_oracle(in.g, i, in.sources, in.b));
        for (const Edge& edge : in.g.edges()) {
          const bool from = contains(d, edge.tail) && !contains(e, edge.tail);
          const bool to = contains(e, edge.head) && !contains(d, edge.head);
          CHECK_FALSE((from && to));
        }
      }
    }
  }
}

TEST_CASE("each linkage path crosses an exact set exactly once") {
  testing::Rng rng(61);
  for (int trial = 0; trial < 80; ++trial) {
    const Instance in = random_instance(rng, 2 + trial % 7, 0.35);
    const VertexId sink[] = {in.b};
    for (const auto& d : enumerate_exact_sets(in.g, in.sources, in.b)) {
      std::vector<VertexId> inside;
      for (VertexId s : in.sources) {
        if (contains(d, s)) inside.push_back(s);
      }
      LinkageOptions once;
      once.one_path_per_source = true;
      const Linkage l = max_linkage(in.g, inside, sink, Mode::DirectedEdge, once).linkage;
      REQUIRE(l.size() == inside.size());
      const auto crossing = crossing_edges(in.g, d);
      std::vector<int> uses(in.g.edge_count(), 0);
      for (const Path& p : l.paths) {
        int on_path = 0;
        for (EdgeId e : p.edges) {
          if (std::binary_search(crossing.begin(), crossing.end(), e)) {
            ++on_path;
            ++uses[e];
          }
        }
        CHECK(on_path == 1);
      }
      for (EdgeId e : crossing) CHECK(uses[e] == 1);
    }
  }
}

TEST_CASE("forwarder") {
  TwoStrand t;
  const auto d = t.set({t.a1, t.x1});
  CHECK(forwarder(t.g, d, Linkage{}, t.p.sources, t.b) == hull(t.g, d, t.b));
  CHECK_THROWS_AS((void)forwarder(t.g, t.set({t.x1}), Linkage{}, t.p.sources, t.b), PreconditionError);

  const Truncation comb = generate_family("comb_steal", 4).truncation(4);
  const Digraph& g = comb.graph;
  const VertexId b = *comb.sink;
  // In a finite window s_4 and r_0 compete for r_4 -> b, so drop s_4.
  const std::vector<VertexId> sources = normalized({g.at("r_0"), g.at("s_1"), g.at("s_2"), g.at("s_3")});
  const auto r0 = hull(g, std::vector<VertexId>{g.at("r_0")}, b);
  const VertexId src[] = {g.at("r_0")};
  const VertexId sink[] = {b};
  LinkageOptions once;
  once.one_path_per_source = true;
  const Linkage l = max_linkage(g, src, sink, Mode::DirectedEdge, once).linkage;
  REQUIRE(l.size() == 1);
  REQUIRE(is_exact(g, r0, sources, b));
  const auto f = forwarder(g, r0, l, sources, b);
  CHECK(is_exact(g, f, sources, b));
  CHECK(std::includes(f.begin(), f.end(), r0.begin(), r0.end()));
  for (VertexId v : l.paths[0].vertices) {
    if (v != b) CHECK(contains(f, v));
  }
}

TEST_CASE("nested exact sets: paths from the outer part avoid the inner set") {
  testing::Rng rng(67);
  for (int trial = 0; trial < 60; ++trial) {
    const Instance in = random_instance(rng, 3 + trial % 6, 0.35);
    const VertexId sink[] = {in.b};
    const auto family = enumerate_exact_sets(in.g, in.sources, in.b);
    for (const auto& outer : family) {
      std::vector<VertexId> inside;
      for (VertexId s : in.sources) {
        if (contains(outer, s)) inside.push_back(s);
      }
      LinkageOptions once;
      once.one_path_per_source = true;
      const Linkage l = max_linkage(in.g, inside, sink, Mode::DirectedEdge, once).linkage;
      for (const auto& inner : family) {
        if (!std::includes(outer.begin(), outer.end(), inner.begin(), inner.end())) continue;
        for (const Path& p : l.paths) {
          if (contains(inner, p.start())) continue;
          for (VertexId v : p.vertices) CHECK_FALSE(contains(inner, v));
        }
      }
    }
  }
}

TEST_CASE("strictly increasing chains of hulls are bounded by the crossing sets") {
  testing::Rng rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    const Instance in = random_instance(rng, 3 + trial % 6, 0.35);
    auto family = enumerate_exact_sets(in.g, in.sources, in.b);
    std::vector<std::vector<VertexId>> hulls;
    std::vector<std::vector<EdgeId>> crossings;
    for (const auto& d : family) {
      hulls.push_back(hull(in.g, d, in.b));
      crossings.push_back(crossing_edges(in.g, d));
    }
    std::sort(hulls.begin(), hulls.end());
    hulls.erase(std::unique(hulls.begin(), hulls.end()), hulls.end());
    std::sort(crossings.begin(), crossings.end());
    crossings.erase(std::unique(crossings.begin(), crossings.end()), crossings.end());
    // distinct hulls correspond one-to-one with distinct crossing sets
    CHECK(hulls.size() == crossings.size());
  }
}

TEST_CASE("closure laws") {
  TwoStrand t;
  const std::vector<VertexSet> empty{{}};
  for (Closure c : {Closure::Subsets, Closure::Unions}) {
    CHECK(closure_family(t.g, empty, t.p.sources, t.b, c) == empty);
  }
  const std::vector<VertexSet> strands{t.set({t.a1, t.x1}), t.set({t.a2, t.x2})};
  const auto unions = closure_family(t.g, strands, t.p.sources, t.b, Closure::Unions);
  CHECK(std::find(unions.begin(), unions.end(), t.set({t.a1, t.a2, t.x1, t.x2})) != unions.end());
  CHECK(unions.size() == 3);

  testing::Rng rng(73);
  for (int trial = 0; trial < 60; ++trial) {
    const Instance in = random_instance(rng, 2 + trial % 7, 0.35);
    const auto all = enumerate_exact_sets(in.g, in.sources, in.b);
    std::vector<VertexSet> family;
    for (const auto& d : all) {
      if (std::bernoulli_distribution(0.3)(rng)) family.push_back(d);
    }
    const ClosureOrders both = closure_both_orders(in.g, family, in.sources, in.b);
    CHECK(both.subsets_then_unions == both.unions_then_subsets);
  }
  CHECK_THROWS_AS((void)closure_family(t.g, std::vector<VertexSet>{t.set({t.x1})}, t.p.sources, t.b,
                                       Closure::Unions),
                  PreconditionError);
}

TEST_CASE("extend_to_maximal") {
  TwoStrand t;
  CHECK(extend_to_maximal(t.g, t.p.sources, t.p.sources, t.b) == t.p.sources);

  const Truncation fan = generate_family("fan", 3).truncation(3);
  const Digraph& g = fan.graph;
  const VertexId x[] = {g.at("m_1"), g.at("m_2"), g.at("m_3"), g.at("u")};
  const auto j = extend_to_maximal(g, {}, x, *fan.sink);
  CHECK(j.size() == 3);
  const VertexId sink[] = {*fan.sink};
  CHECK(is_linkable(g, j, sink, Mode::DirectedEdge));
  for (VertexId v : x) {
    if (contains(j, v)) continue;
    auto bigger = j;
    bigger.push_back(v);
    CHECK_FALSE(is_linkable(g, bigger, sink, Mode::DirectedEdge));
  }
}

TEST_CASE("greedy extension reaches the maximum size") {
  testing::Rng rng(79);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance in = random_instance(rng, 2 + trial % 7, 0.35);
    std::vector<VertexId> all;
    for (VertexId v = 0; v < in.g.vertex_count(); ++v) {
      if (v != in.b) all.push_back(v);
    }
    const auto j = extend_to_maximal(in.g, {}, all, in.b);
    std::size_t best = 0;
    const VertexId sink[] = {in.b};
    for (const auto& s : testing::subsets_without(in.g.vertex_count(), in.b)) {
      if (s.size() > best && testing::linkable_oracle(in.g, s, sink, Mode::DirectedEdge)) best = s.size();
    }
    CHECK(j.size() == best);
  }
}

TEST_CASE("clone extension") {
  Digraph g;
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_edge(0, 1);
  const CloneExtension ext = clone_extend(g, 1);
  CHECK(ext.graph.vertex_count() == 3);
  CHECK(ext.origin == std::vector<VertexId>{0, 1, 0});
  CHECK(ext.graph.in_edges(2).empty());
  REQUIRE(ext.graph.out_edges(2).size() == 1);
  CHECK(ext.graph.edge(ext.graph.out_edges(2)[0]).head == 1);

  testing::Rng rng(83);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const Digraph r = testing::random_digraph(rng, n, 0.3);
    const CloneExtension e = clone_extend(r, static_cast<VertexId>(n - 1));
    CHECK(e.graph.extends(r));
    for (VertexId v = static_cast<VertexId>(n); v < e.graph.vertex_count(); ++v) {
      CHECK(e.graph.in_edges(v).empty());
      CHECK(e.graph.out_edges(v).size() == r.out_edges(e.origin[v]).size());
    }
  }
}

TEST_CASE("clones do not make a multigraph exact") {
  // v has two parallel edges to b. Every set holding v has order at least
  // one more than the number of sources it holds, before and after cloning.
  Digraph g;
  g.add_vertex("v");
  g.add_vertex("b");
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  const CloneExtension ext = clone_extend(g, 1);
  CHECK(ext.graph.vertex_count() == 4);
  const auto all = std::vector<VertexId>{0, 2, 3};
  const auto i2 = extend_to_maximal(ext.graph, {}, all, 1);
  CHECK(i2 == all);
  CHECK_FALSE(find_exact_set(ext.graph, 0, i2, 1).has_value());
  for (const auto& d : testing::subsets_without(4, 1)) {
    if (contains(d, 0)) CHECK_FALSE(testing::exact_oracle(ext.graph, d, i2, 1));
  }
}
