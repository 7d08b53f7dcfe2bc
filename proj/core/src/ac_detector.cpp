#include "gammoid/ac_detector.hpp"

#include <functional>
#include <set>

#include "gammoid/error.hpp"

namespace gammoid {

namespace {

struct OutOfBudget {};

class AcSearch {
 public:
  AcSearch(const Digraph& g, std::span<const VertexId> sink_set, int k, std::uint64_t budget)
      : g_(g), in_b_(membership(g.vertex_count(), normalized({sink_set.begin(), sink_set.end()}))), k_(k),
        budget_(budget), used_(g.vertex_count(), 0) {
    const auto n = static_cast<std::size_t>(k) + 1;
    e_.k = k;
    e_.b.resize(n);
    e_.v1.resize(n);
    e_.v2.resize(n);
    e_.pendant.resize(n);
    e_.down.resize(n);
    e_.across.resize(n - 1);
  }

  bool run(std::size_t max_len) {
    max_len_ = max_len;
    for (VertexId x = 0; x < g_.vertex_count(); ++x) {
      used_[x] = 1;
      e_.v1[0] = x;
      const bool found = level(0, x);
      used_[x] = 0;
      if (found) return true;
    }
    return false;
  }

  [[nodiscard]] const AcEmbedding& embedding() const { return e_; }
  [[nodiscard]] std::uint64_t nodes() const { return nodes_; }

 private:
  using Visit = std::function<bool(const Path&)>;

  void tick() {
    if (++nodes_ > budget_) throw OutOfBudget{};
  }

  // Extends `path` forwards (or backwards) through unused vertices and calls
  // `visit` at every new endpoint. With `stop_at_b`, only B endpoints are
  // visited and the walk does not continue past them.
  bool grow(Path& path, bool backwards, bool stop_at_b, const Visit& visit) {
    if (path.edges.size() >= max_len_) return false;
    const VertexId tip = backwards ? path.vertices.front() : path.vertices.back();
    const auto edges = backwards ? g_.in_edges(tip) : g_.out_edges(tip);
    for (EdgeId id : edges) {
      const Edge& e = g_.edge(id);
      const VertexId next = backwards ? e.tail : e.head;
      if (used_[next]) continue;
      tick();
      used_[next] = 1;
      if (backwards) {
        path.vertices.insert(path.vertices.begin(), next);
        path.edges.insert(path.edges.begin(), id);
      } else {
        path.vertices.push_back(next);
        path.edges.push_back(id);
      }
      bool found = false;
      if (stop_at_b && in_b_[next]) {
        found = visit(path);
      } else {
        found = (!stop_at_b && visit(path)) || grow(path, backwards, stop_at_b, visit);
      }
      if (backwards) {
        path.vertices.erase(path.vertices.begin());
        path.edges.erase(path.edges.begin());
      } else {
        path.vertices.pop_back();
        path.edges.pop_back();
      }
      used_[next] = 0;
      if (found) return true;
    }
    return false;
  }

  bool level(int j, VertexId x) {
    const auto i = static_cast<std::size_t>(j);
    if (in_b_[x]) {
      // A nontrivial pendant from a B vertex can always be shortcut.
      e_.b[i] = x;
      e_.pendant[i] = Path{{x}, {}};
      return after_pendant(j, x);
    }
    Path p{{x}, {}};
    return grow(p, false, true, [&](const Path& q) {
      e_.b[i] = q.end();
      e_.pendant[i] = q;
      return after_pendant(j, x);
    });
  }

  bool after_pendant(int j, VertexId x) {
    const auto i = static_cast<std::size_t>(j);
    Path p{{x}, {}};
    return grow(p, true, false, [&](const Path& down) {
      const VertexId y = down.start();
      e_.v2[i] = y;
      e_.down[i] = down;
      if (j == k_) return true;
      Path q{{y}, {}};
      return grow(q, false, false, [&](const Path& across) {
        const VertexId z = across.end();
        e_.across[i] = across;
        e_.v1[i + 1] = z;
        return level(j + 1, z);
      });
    });
  }

  const Digraph& g_;
  Membership in_b_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::size_t max_len_ = 1;
  std::vector<char> used_;
  AcEmbedding e_;
};

}  // namespace

std::string to_string(AcStatus s) {
  switch (s) {
    case AcStatus::Found:
      return "found";
    case AcStatus::None:
      return "none";
    case AcStatus::Budget:
      break;
  }
  return "budget";
}

AcResult find_ac_prefix(const Digraph& g, std::span<const VertexId> sink_set, int k, std::uint64_t budget) {
  if (k < 1) throw PreconditionError("AC depth must be at least 1");
  AcResult result;
  if (normalized({sink_set.begin(), sink_set.end()}).size() < static_cast<std::size_t>(k) + 1) return result;
  AcSearch search(g, sink_set, k, budget);
  try {
    const std::size_t longest = std::max<std::size_t>(g.vertex_count(), 2) - 1;
    for (std::size_t len = 1; len <= longest; ++len) {
      if (search.run(len)) {
        result.status = AcStatus::Found;
        result.embedding = search.embedding();
        break;
      }
    }
  } catch (const OutOfBudget&) {
    result.status = AcStatus::Budget;
  }
  result.nodes = search.nodes();
  return result;
}

std::optional<std::string> verify_ac_embedding(const Digraph& g, std::span<const VertexId> sink_set,
                                               const AcEmbedding& e) {
  const auto n = static_cast<std::size_t>(e.k) + 1;
  if (e.k < 1 || e.b.size() != n || e.v1.size() != n || e.v2.size() != n || e.pendant.size() != n ||
      e.down.size() != n || e.across.size() != n - 1) {
    return "embedding has inconsistent sizes";
  }
  const auto in_b = membership(g.vertex_count(), normalized({sink_set.begin(), sink_set.end()}));
  std::set<VertexId> branch;
  auto claim = [&](VertexId v) { return v < g.vertex_count() && branch.insert(v).second; };
  for (std::size_t j = 0; j < n; ++j) {
    if (e.b[j] >= g.vertex_count() || !in_b[e.b[j]]) return "b_" + std::to_string(j) + " is not in B";
    if (!claim(e.v1[j]) || !claim(e.v2[j])) return "branch vertices repeat at index " + std::to_string(j);
    if (e.b[j] != e.v1[j] && !claim(e.b[j])) return "b_" + std::to_string(j) + " repeats a branch vertex";
  }
  std::set<VertexId> internal;
  auto check = [&](const Path& p, VertexId from, VertexId to, bool may_be_trivial, const std::string& what)
      -> std::optional<std::string> {
    if (p.vertices.empty() || p.vertices.size() != p.edges.size() + 1) return what + " is malformed";
    if (p.start() != from || p.end() != to) return what + " has wrong endpoints";
    if (p.trivial() && !may_be_trivial) return what + " must be nontrivial";
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
      if (p.edges[i] >= g.edge_count()) return what + " uses an unknown edge";
      const Edge& edge = g.edge(p.edges[i]);
      if (edge.tail != p.vertices[i] || edge.head != p.vertices[i + 1]) return what + " is not a directed path";
    }
    for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
      const VertexId v = p.vertices[i];
      if (branch.count(v) || !internal.insert(v).second) return what + " is not internally disjoint";
    }
    return std::nullopt;
  };
  for (std::size_t j = 0; j < n; ++j) {
    const std::string idx = std::to_string(j);
    if (auto why = check(e.pendant[j], e.v1[j], e.b[j], true, "pendant " + idx)) return why;
    if (auto why = check(e.down[j], e.v2[j], e.v1[j], false, "down path " + idx)) return why;
    if (j + 1 < n) {
      if (auto why = check(e.across[j], e.v2[j], e.v1[j + 1], false, "across path " + idx)) return why;
    }
  }
  return std::nullopt;
}

AcEmbedding restrict_embedding(const AcEmbedding& e, int k) {
  if (k < 1 || k > e.k) throw PreconditionError("restriction depth out of range");
  const auto n = static_cast<std::size_t>(k) + 1;
  AcEmbedding r;
  r.k = k;
  r.b.assign(e.b.begin(), e.b.begin() + static_cast<std::ptrdiff_t>(n));
  r.v1.assign(e.v1.begin(), e.v1.begin() + static_cast<std::ptrdiff_t>(n));
  r.v2.assign(e.v2.begin(), e.v2.begin() + static_cast<std::ptrdiff_t>(n));
  r.pendant.assign(e.pendant.begin(), e.pendant.begin() + static_cast<std::ptrdiff_t>(n));
  r.down.assign(e.down.begin(), e.down.begin() + static_cast<std::ptrdiff_t>(n));
  r.across.assign(e.across.begin(), e.across.begin() + static_cast<std::ptrdiff_t>(n - 1));
  return r;
}

}  // namespace gammoid
