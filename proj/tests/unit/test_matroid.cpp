#include <doctest.h>

#include <bit>

#include "gammoid/error.hpp"
#include "gammoid/graph_io.hpp"
#include "gammoid/matroid.hpp"
#include "test_support.hpp"

using namespace gammoid;

namespace {

constexpr Mode kModes[] = {Mode::DirectedEdge, Mode::DirectedVertex, Mode::UndirectedEdge, Mode::UndirectedVertex};

Subset of(std::initializer_list<int> elements) {
  Subset s = 0;
  for (int e : elements) s |= Subset{1} << e;
  return s;
}

SetSystem random_explicit(testing::Rng& rng, std::size_t n, double p) {
  std::vector<std::string> ground;
  for (std::size_t i = 0; i < n; ++i) ground.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<Subset> sets;
  std::bernoulli_distribution coin(p);
  for (Subset s = 0; s < (Subset{1} << n); ++s) {
    if (coin(rng)) sets.push_back(s);
  }
  return SetSystem::explicit_sets(ground, sets);
}

}  // namespace

TEST_CASE("merge graph, vertex version: uniform matroid of rank 1") {
  const LinkageProblem p = read_graph_file(GAMMOID_DATA_DIR "/merge.g");
  const SetSystem m = gammoid::gammoid(p.graph, p.sink_set, Mode::DirectedVertex);
  CHECK(m.rank() == 1);
  CHECK(m.independent(0));
  for (std::size_t i = 0; i < 4; ++i) CHECK(m.independent(Subset{1} << i));
  CHECK_FALSE(m.independent(of({0, 1})));
  const auto c = circuits(m);
  CHECK(c.size() == 6);
  for (Subset s : c) CHECK(std::popcount(s) == 2);
  CHECK(check_axioms(m).all_hold());
}

TEST_CASE("parallel sink edges make {a1, a2} independent in the edge version") {
  LinkageProblem p = read_graph_file(GAMMOID_DATA_DIR "/merge.g");
  p.graph.add_edge(p.graph.at("x"), p.graph.at("b"));
  const SetSystem m = gammoid::gammoid(p.graph, p.sink_set, Mode::DirectedEdge);
  CHECK(m.independent(of({0, 1})));
  CHECK(independent(p.graph, p.sink_set, std::vector<VertexId>{0, 1}, Mode::DirectedEdge));
  CHECK(independent(p.graph, p.sink_set, {}, Mode::DirectedEdge));
}

TEST_CASE("circuits of a free system") {
  const SetSystem free({"a", "b", "c"}, [](Subset) { return true; }, "free");
  CHECK(circuits(free).empty());
  CHECK(free.rank() == 3);
}

TEST_CASE("circuits are minimal dependent sets") {
  testing::Rng rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const Digraph g = testing::random_digraph(rng, n, 0.35);
    const auto b = testing::random_subset(rng, n, 0.3);
    const SetSystem m = gammoid::gammoid(g, b, kModes[trial % 4]);
    for (Subset c : circuits(m)) {
      CHECK_FALSE(m.independent(c));
      for (std::size_t i = 0; i < n; ++i) {
        if (c >> i & 1) CHECK(m.independent(c & ~(Subset{1} << i)));
      }
    }
    for (Subset c : circuits(m, 2)) CHECK(std::popcount(c) <= 2);
  }
}

TEST_CASE("two-strand graph: flow circuits match brute force circuits") {
  const LinkageProblem p = read_graph_file(GAMMOID_DATA_DIR "/two_strand.g");
  const VertexId b[] = {*p.sink};
  for (Mode mode : {Mode::DirectedVertex, Mode::DirectedEdge}) {
    const SetSystem flow = gammoid::gammoid(p.graph, b, mode, Oracle::Flow);
    const SetSystem brute = gammoid::gammoid(p.graph, b, mode, Oracle::Brute);
    CHECK(flow == brute);
    CHECK(circuits(flow) == circuits(brute));
  }
}

TEST_CASE("independence agrees with backtracking path search") {
  testing::Rng rng(103);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const Digraph g = testing::random_digraph(rng, n, 0.35);
    const auto b = testing::random_subset(rng, n, 0.3);
    const Mode mode = kModes[trial % 4];
    const SetSystem flow = gammoid::gammoid(g, b, mode, Oracle::Flow);
    const SetSystem brute = gammoid::gammoid(g, b, mode, Oracle::Brute);
    CHECK(flow == brute);
    for (Subset s = 0; s <= flow.full(); ++s) {
      const auto set = testing::bits_to_set(s);
      CHECK(flow.independent(s) == testing::linkable_oracle(g, set, b, mode));
    }
  }
}

TEST_CASE("finite gammoids satisfy every axiom, exhaustively on 3 and 4 vertices") {
  std::size_t cases = 0;
  for (std::size_t n : {3u, 4u}) {
    testing::for_each_digraph_up_to_isomorphism(n, [&](const Digraph& g) {
      for (Subset bset = 0; bset < (Subset{1} << n); ++bset) {
        for (Mode mode : {Mode::DirectedEdge, Mode::DirectedVertex}) {
          const AxiomReport r = check_axioms(gammoid::gammoid(g, testing::bits_to_set(bset), mode));
          ++cases;
          if (!r.all_hold()) {
            for (const auto& c : r.checks) INFO(c.axiom << ": " << c.counterexample);
            FAIL("axiom failure");
          }
        }
      }
    });
  }
  CHECK(cases > 1000);
}

TEST_CASE("(I2) violation is reported with a witness") {
  const std::vector<Subset> sets{0, of({0, 1})};
  const SetSystem m = SetSystem::explicit_sets({"a", "b"}, sets);
  const AxiomReport r = check_axioms(m);
  CHECK(r.at("I1").holds);
  CHECK_FALSE(r.at("I2").holds);
  CHECK(r.at("I2").counterexample.find("{a, b}") != std::string::npos);
}

TEST_CASE("(I3) violation") {
  // {c} is maximal, {a, b} is maximal and larger; {c} cannot be extended from it.
  const std::vector<Subset> sets{0, of({0}), of({1}), of({0, 1}), of({2})};
  const AxiomReport r = check_axioms(SetSystem::explicit_sets({"a", "b", "c"}, sets));
  CHECK(r.at("I2").holds);
  CHECK_FALSE(r.at("I3").holds);
}

TEST_CASE("(+) on the rank-1 uniform gammoid") {
  const LinkageProblem p = read_graph_file(GAMMOID_DATA_DIR "/merge.g");
  const SetSystem m = gammoid::gammoid(p.graph, p.sink_set, Mode::DirectedVertex);
  const VertexId a1 = p.graph.at("a1"), a2 = p.graph.at("a2"), x = p.graph.at("x");
  const auto c = circuits(m);
  const Subset o1 = Subset{1} << a1 | Subset{1} << x;
  const Subset o2 = Subset{1} << x | Subset{1} << a2;
  CHECK(std::find(c.begin(), c.end(), o1) != c.end());
  CHECK(std::find(c.begin(), c.end(), o2) != c.end());
  const Subset want = Subset{1} << a1 | Subset{1} << a2;
  CHECK(std::find(c.begin(), c.end(), want) != c.end());
  CHECK(check_axioms(m).at("+").holds);
}

TEST_CASE("(+) and (*) can fail on explicit systems") {
  // Circuits {a,b} and {b,c} but {a,c} independent: eliminating b leaves no circuit.
  const std::vector<Subset> sets{0, of({0}), of({1}), of({2}), of({0, 2})};
  const AxiomReport r = check_axioms(SetSystem::explicit_sets({"a", "b", "c"}, sets));
  CHECK_FALSE(r.at("+").holds);
  CHECK_FALSE(r.at("*").holds);
}

TEST_CASE("finitarization") {
  testing::Rng rng(107);
  for (int trial = 0; trial < 100; ++trial) {
    const SetSystem s = random_explicit(rng, 1 + trial % 6, 0.6);
    const SetSystem f = finitarize(s);
    CHECK(finitarize(f) == f);
    for (Subset x = 0; x <= s.full(); ++x) {
      if (f.independent(x)) CHECK(s.independent(x));
    }
    // monotone: a larger system has a larger finitarization
    const SetSystem t = SetSystem(s.ground(), [&](Subset x) { return s.independent(x) || (x & 1); }, "t");
    const SetSystem ft = finitarize(t);
    for (Subset x = 0; x <= s.full(); ++x) {
      if (f.independent(x)) CHECK(ft.independent(x));
    }
  }
  const std::vector<Subset> two{0, of({0}), of({1})};
  const SetSystem small = SetSystem::explicit_sets({"a", "b"}, two);
  CHECK(finitarize(small) == small);
}

TEST_CASE("finite gammoids are their own finitarization") {
  testing::Rng rng(109);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const Digraph g = testing::random_digraph(rng, n, 0.3);
    const auto b = testing::random_subset(rng, n, 0.3);
    const SetSystem m = gammoid::gammoid(g, b, kModes[trial % 4]);
    CHECK(finitarize(m) == m);
  }
}

TEST_CASE("budgets") {
  Digraph big;
  for (int i = 0; i < 21; ++i) big.add_vertex("v" + std::to_string(i));
  CHECK_THROWS_AS((void)gammoid::gammoid(big, {}, Mode::DirectedEdge), BudgetExceeded);
  Digraph mid;
  for (int i = 0; i < 15; ++i) mid.add_vertex("v" + std::to_string(i));
  CHECK_THROWS_AS((void)check_axioms(gammoid::gammoid(mid, {}, Mode::DirectedEdge)), BudgetExceeded);
  CHECK(parse_oracle("brute") == Oracle::Brute);
  CHECK_THROWS_AS((void)parse_oracle("magic"), Error);
}
