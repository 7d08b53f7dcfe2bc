#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gammoid/menger.hpp"

namespace gammoid {

/// Subset of a ground set of at most 20 elements, as a bitmask over element indices.
using Subset = std::uint32_t;
inline constexpr std::size_t kMaxGround = 20;

/// A finite set system given by its full membership table.
class SetSystem {
 public:
  /// Ground elements `ground`; membership decided once per subset by `member`.
  /// Throws BudgetExceeded for more than kMaxGround elements.
  SetSystem(std::vector<std::string> ground, const std::function<bool(Subset)>& member, std::string provenance);

  /// System whose independent sets are exactly `sets`.
  [[nodiscard]] static SetSystem explicit_sets(std::vector<std::string> ground, std::span<const Subset> sets);

  [[nodiscard]] std::size_t size() const noexcept { return ground_.size(); }
  [[nodiscard]] const std::vector<std::string>& ground() const noexcept { return ground_; }
  [[nodiscard]] const std::string& provenance() const noexcept { return provenance_; }
  [[nodiscard]] bool independent(Subset s) const { return table_.at(s) != 0; }
  [[nodiscard]] Subset full() const noexcept { return static_cast<Subset>((std::uint64_t{1} << ground_.size()) - 1); }
  [[nodiscard]] std::vector<Subset> independent_sets() const;
  /// Size of a largest independent set.
  [[nodiscard]] std::size_t rank() const;
  /// "{a, b}" using ground names.
  [[nodiscard]] std::string format(Subset s) const;

  friend bool operator==(const SetSystem& a, const SetSystem& b) {
    return a.ground_ == b.ground_ && a.table_ == b.table_;
  }

 private:
  SetSystem() = default;

  std::vector<std::string> ground_;
  std::vector<char> table_;
  std::string provenance_;
};

/// S can be linked to B, one disjoint path per element, in the given mode.
[[nodiscard]] bool independent(const Digraph& g, std::span<const VertexId> sink_set, std::span<const VertexId> s,
                               Mode mode);

enum class Oracle { Flow, Brute };
[[nodiscard]] std::string to_string(Oracle o);
[[nodiscard]] Oracle parse_oracle(std::string_view text);

/// The gammoid of (g, B) on ground set V(g). Membership is only evaluated for
/// sets whose one-smaller subsets are all independent.
[[nodiscard]] SetSystem gammoid(const Digraph& g, std::span<const VertexId> sink_set, Mode mode,
                                Oracle oracle = Oracle::Flow);

/// Minimal dependent sets with at most `max_size` elements, by size then lexicographically.
[[nodiscard]] std::vector<Subset> circuits(const SetSystem& system, std::size_t max_size = kMaxGround);

struct AxiomCheck {
  std::string axiom;  // "I1", "I2", "I3", "IM", "+", "*"
  bool holds = true;
  std::string counterexample;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  [[nodiscard]] bool all_hold() const;
  [[nodiscard]] const AxiomCheck& at(std::string_view axiom) const;
};

/// Exhaustively checks the independence axioms (I1), (I2), (I3) against
/// maximal sets, (IM) via greedy extension inside every X, the circuit
/// elimination property (+), and the exchange property (*).
[[nodiscard]] AxiomReport check_axioms(const SetSystem& system);

/// Sets all of whose subsets are independent.
[[nodiscard]] SetSystem finitarize(const SetSystem& system);

}  // namespace gammoid
