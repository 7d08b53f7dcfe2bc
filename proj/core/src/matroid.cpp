#include "gammoid/matroid.hpp"

#include <algorithm>
#include <bit>

#include "gammoid/brute_force.hpp"
#include "gammoid/error.hpp"

namespace gammoid {

namespace {

constexpr Subset bit(std::size_t i) { return Subset{1} << i; }

// Larger checks enumerate pairs of subsets; keep them tractable.
constexpr std::size_t kMaxAxiomGround = 14;

std::vector<VertexId> vertices_of(Subset s) {
  std::vector<VertexId> out;
  for (VertexId v = 0; s != 0; ++v, s >>= 1) {
    if (s & 1) out.push_back(v);
  }
  return out;
}

}  // namespace

SetSystem::SetSystem(std::vector<std::string> ground, const std::function<bool(Subset)>& member,
                     std::string provenance)
    : ground_(std::move(ground)), provenance_(std::move(provenance)) {
  if (ground_.size() > kMaxGround) {
    throw BudgetExceeded("ground set of " + std::to_string(ground_.size()) + " elements exceeds " +
                         std::to_string(kMaxGround));
  }
  table_.resize(std::size_t{1} << ground_.size());
  for (std::size_t s = 0; s < table_.size(); ++s) table_[s] = member(static_cast<Subset>(s)) ? 1 : 0;
}

SetSystem SetSystem::explicit_sets(std::vector<std::string> ground, std::span<const Subset> sets) {
  const std::size_t n = ground.size();
  std::vector<char> listed(n <= kMaxGround ? std::size_t{1} << n : 0, 0);
  for (Subset s : sets) {
    if (s >= listed.size()) throw PreconditionError("listed set uses elements outside the ground set");
    listed[s] = 1;
  }
  return SetSystem(std::move(ground), [&](Subset s) { return listed[s] != 0; }, "explicit");
}

std::vector<Subset> SetSystem::independent_sets() const {
  std::vector<Subset> out;
  for (std::size_t s = 0; s < table_.size(); ++s) {
    if (table_[s]) out.push_back(static_cast<Subset>(s));
  }
  return out;
}

std::size_t SetSystem::rank() const {
  int best = 0;
  for (Subset s : independent_sets()) best = std::max(best, std::popcount(s));
  return static_cast<std::size_t>(best);
}

std::string SetSystem::format(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < ground_.size(); ++i) {
    if (!(s & bit(i))) continue;
    out += (first ? "" : ", ") + ground_[i];
    first = false;
  }
  return out + "}";
}

bool independent(const Digraph& g, std::span<const VertexId> sink_set, std::span<const VertexId> s, Mode mode) {
  return is_linkable(g, s, sink_set, mode);
}

std::string to_string(Oracle o) { return o == Oracle::Flow ? "flow" : "brute"; }

Oracle parse_oracle(std::string_view text) {
  if (text == "flow") return Oracle::Flow;
  if (text == "brute") return Oracle::Brute;
  throw PreconditionError("unknown oracle " + std::string(text));
}

SetSystem gammoid(const Digraph& g, std::span<const VertexId> sink_set, Mode mode, Oracle oracle) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxGround) throw BudgetExceeded("gammoid ground set exceeds " + std::to_string(kMaxGround) + " vertices");
  std::vector<VertexId> all(n);
  for (VertexId v = 0; v < n; ++v) all[v] = v;
  std::optional<BrutePaths> brute;
  if (oracle == Oracle::Brute) brute.emplace(g, all, sink_set, mode);
  std::vector<char> table(std::size_t{1} << n, 0);
  for (std::size_t s = 0; s < table.size(); ++s) {
    const auto set = static_cast<Subset>(s);
    bool candidate = true;
    for (std::size_t i = 0; i < n && candidate; ++i) {
      if (set & bit(i)) candidate = table[set & ~bit(i)] != 0;
    }
    if (!candidate) continue;
    const auto members = vertices_of(set);
    table[s] = (brute ? brute->linkable(members) : independent(g, sink_set, members, mode)) ? 1 : 0;
  }
  std::string provenance = "gammoid(" + std::string(to_string(mode)) + ", " + to_string(oracle) + ")";
  return SetSystem(g.names(), [&](Subset s) { return table[s] != 0; }, std::move(provenance));
}

std::vector<Subset> circuits(const SetSystem& system, std::size_t max_size) {
  std::vector<Subset> out;
  for (Subset s = 0; s <= system.full(); ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) > max_size || system.independent(s)) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < system.size() && minimal; ++i) {
      if (s & bit(i)) minimal = system.independent(s & ~bit(i));
    }
    if (minimal) out.push_back(s);
    if (s == system.full()) break;
  }
  auto key = [&](Subset s) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < system.size(); ++i) {
      if (s & bit(i)) idx.push_back(i);
    }
    return std::make_pair(idx.size(), idx);
  };
  std::sort(out.begin(), out.end(), [&](Subset a, Subset b) { return key(a) < key(b); });
  return out;
}

bool AxiomReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.holds; });
}

const AxiomCheck& AxiomReport::at(std::string_view axiom) const {
  for (const AxiomCheck& c : checks) {
    if (c.axiom == axiom) return c;
  }
  throw PreconditionError("unknown axiom " + std::string(axiom));
}

AxiomReport check_axioms(const SetSystem& m) {
  const std::size_t n = m.size();
  if (n > kMaxAxiomGround) throw BudgetExceeded("axiom checks limited to " + std::to_string(kMaxAxiomGround) + " elements");
  const auto indep = m.independent_sets();
  auto fail = [](AxiomCheck& c, std::string why) {
    if (!c.holds) return;
    c.holds = false;
    c.counterexample = std::move(why);
  };

  AxiomCheck i1{"I1", true, {}};
  if (!m.independent(0)) fail(i1, "the empty set is dependent");

  AxiomCheck i2{"I2", true, {}};
  for (Subset s : indep) {
    for (std::size_t i = 0; i < n && i2.holds; ++i) {
      if ((s & bit(i)) && !m.independent(s & ~bit(i))) {
        fail(i2, m.format(s) + " is independent but " + m.format(s & ~bit(i)) + " is not");
      }
    }
  }

  auto maximal_in = [&](Subset s, Subset x) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((x & bit(i)) && !(s & bit(i)) && m.independent(s | bit(i))) return false;
    }
    return true;
  };
  std::vector<Subset> maximal;
  for (Subset s : indep) {
    if (maximal_in(s, m.full())) maximal.push_back(s);
  }

  AxiomCheck i3{"I3", true, {}};
  for (Subset s : indep) {
    if (!i3.holds) break;
    if (maximal_in(s, m.full())) continue;
    for (Subset t : maximal) {
      bool found = false;
      for (std::size_t i = 0; i < n && !found; ++i) {
        found = (t & bit(i)) && !(s & bit(i)) && m.independent(s | bit(i));
      }
      if (!found) {
        fail(i3, "I=" + m.format(s) + ", maximal I'=" + m.format(t) + ": no element of I'\\I extends I");
        break;
      }
    }
  }

  AxiomCheck im{"IM", true, {}};
  for (Subset x = 0; im.holds; ++x) {
    for (Subset s = x;; s = (s - 1) & x) {
      if (m.independent(s)) {
        Subset j = s;
        for (bool grew = true; grew;) {
          grew = false;
          for (std::size_t i = 0; i < n; ++i) {
            if ((x & bit(i)) && !(j & bit(i)) && m.independent(j | bit(i))) {
              j |= bit(i);
              grew = true;
            }
          }
        }
        if (!maximal_in(j, x)) fail(im, "no maximal independent set between " + m.format(s) + " and " + m.format(x));
      }
      if (s == 0) break;
    }
    if (x == m.full()) break;
  }

  AxiomCheck plus{"+", true, {}};
  const auto circ = circuits(m);
  for (std::size_t a = 0; a < circ.size() && plus.holds; ++a) {
    for (std::size_t b = a + 1; b < circ.size() && plus.holds; ++b) {
      const Subset common = circ[a] & circ[b];
      for (std::size_t i = 0; i < n; ++i) {
        if (!(common & bit(i))) continue;
        const Subset rest = (circ[a] | circ[b]) & ~bit(i);
        const bool has = std::any_of(circ.begin(), circ.end(), [&](Subset c) { return (c & ~rest) == 0; });
        if (!has) {
          fail(plus, "circuits " + m.format(circ[a]) + " and " + m.format(circ[b]) + " minus " + m.ground()[i] +
                         " contain no circuit");
          break;
        }
      }
    }
  }

  AxiomCheck star{"*", true, {}};
  for (Subset j : indep) {
    if (!star.holds) break;
    for (std::size_t y = 0; y < n && star.holds; ++y) {
      if ((j & bit(y)) || m.independent(j | bit(y))) continue;
      Subset good = 0;
      for (std::size_t x = 0; x < n; ++x) {
        if ((j & bit(x)) && m.independent((j | bit(y)) & ~bit(x))) good |= bit(x);
      }
      // A violating I contains y and every good x.
      const Subset need = good | bit(y);
      // Under (I2) the smallest candidate decides; otherwise scan every superset.
      const Subset free = i2.holds ? 0 : m.full() & ~need;
      for (Subset extra = free;; extra = (extra - 1) & free) {
        if (m.independent(need | extra)) {
          fail(star, "I=" + m.format(need | extra) + ", J=" + m.format(j) + ", y=" + m.ground()[y] +
                         ": no x in J\\I with J+y-x independent");
          break;
        }
        if (extra == 0) break;
      }
    }
  }

  return AxiomReport{{i1, i2, i3, im, plus, star}};
}

SetSystem finitarize(const SetSystem& system) {
  std::vector<char> fin(std::size_t{1} << system.size(), 0);
  for (std::size_t s = 0; s < fin.size(); ++s) {
    const auto set = static_cast<Subset>(s);
    bool ok = system.independent(set);
    for (std::size_t i = 0; i < system.size() && ok; ++i) {
      if (set & bit(i)) ok = fin[set & ~bit(i)] != 0;
    }
    fin[s] = ok ? 1 : 0;
  }
  return SetSystem(system.ground(), [&](Subset s) { return fin[s] != 0; }, "fin(" + system.provenance() + ")");
}

}  // namespace gammoid
