#pragma once

// Generators and small independent oracles shared by the unit and acceptance tests.
// Oracles here deliberately avoid the library's flow and path-enumeration code.

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "gammoid/digraph.hpp"
#include "gammoid/problem.hpp"

namespace gammoid::testing {

using Rng = std::mt19937_64;

// Vertices named v0, v1, ...
Digraph random_digraph(Rng& rng, std::size_t n, double edge_probability, bool parallel = false);
std::vector<VertexId> random_subset(Rng& rng, std::size_t n, double probability);

// Simple loopless digraph on n vertices whose arc set is the bitmask over ordered pairs (i != j).
Digraph digraph_from_mask(std::size_t n, std::uint64_t mask);
std::size_t ordered_pairs(std::size_t n);

// Calls fn once per isomorphism class of simple loopless digraphs on n vertices (canonical mask).
void for_each_digraph_up_to_isomorphism(std::size_t n, const std::function<void(const Digraph&)>& fn);
// Calls fn for every labeled simple loopless digraph on n vertices.
void for_each_labeled_digraph(std::size_t n, const std::function<void(const Digraph&)>& fn);

// Classical Menger value via exhaustive minimum separator: the smallest set of deletable
// elements (edges in edge modes, vertices in vertex modes) that leaves no A-B path.
// A vertex in A and B counts as a trivial path that only vertex deletion can break.
std::size_t min_separator_oracle(const Digraph& g, std::span<const VertexId> a, std::span<const VertexId> b,
                                 Mode mode);

// Whether every vertex of s can be joined to sinks by disjoint paths, one per source,
// found by explicit path enumeration and backtracking.
bool linkable_oracle(const Digraph& g, std::span<const VertexId> s, std::span<const VertexId> sinks, Mode mode);

// Definition-level exactness helpers.
std::size_t order_oracle(const Digraph& g, const std::vector<VertexId>& d);
std::vector<VertexId> hull_oracle(const Digraph& g, const std::vector<VertexId>& d, VertexId b);
bool exact_oracle(const Digraph& g, const std::vector<VertexId>& d, std::span<const VertexId> sources, VertexId b);

// All vertex subsets of V - b, as sorted vectors; only for small graphs.
std::vector<std::vector<VertexId>> subsets_without(std::size_t n, VertexId b);

std::vector<VertexId> bits_to_set(std::uint64_t bits);

}  // namespace gammoid::testing
