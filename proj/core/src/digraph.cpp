#include "gammoid/digraph.hpp"

#include <algorithm>
#include <deque>

#include "gammoid/error.hpp"

namespace gammoid {

VertexId Digraph::add_vertex(std::string name) {
  if (index_.contains(name)) {
    throw PreconditionError("duplicate vertex " + name);
  }
  const auto id = static_cast<VertexId>(names_.size());
  index_.emplace(name, id);
  names_.push_back(std::move(name));
  out_.emplace_back();
  in_.emplace_back();
  return id;
}

EdgeId Digraph::add_edge(VertexId tail, VertexId head) {
  if (tail >= names_.size() || head >= names_.size()) {
    throw PreconditionError("edge endpoint out of range");
  }
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({id, tail, head});
  out_[tail].push_back(id);
  in_[head].push_back(id);
  return id;
}

std::optional<VertexId> Digraph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId Digraph::at(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw PreconditionError("unknown vertex " + std::string(name));
}

bool Digraph::extends(const Digraph& smaller) const {
  if (smaller.vertex_count() > vertex_count() || smaller.edge_count() > edge_count()) {
    return false;
  }
  return std::equal(smaller.names_.begin(), smaller.names_.end(), names_.begin()) &&
         std::equal(smaller.edges_.begin(), smaller.edges_.end(), edges_.begin());
}

Membership membership(std::size_t n, std::span<const VertexId> vertices) {
  Membership m(n, 0);
  for (VertexId v : vertices) m.at(v) = 1;
  return m;
}

std::vector<VertexId> members(const Membership& m) {
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v]) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

std::vector<VertexId> normalized(std::vector<VertexId> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

namespace {

Membership search(const Digraph& g, std::span<const VertexId> seeds, const std::vector<char>& removed,
                  bool backward) {
  Membership seen(g.vertex_count(), 0);
  std::deque<VertexId> queue;
  for (VertexId v : seeds) {
    if (!seen.at(v)) {
      seen[v] = 1;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (EdgeId e : backward ? g.in_edges(v) : g.out_edges(v)) {
      if (!removed.empty() && removed[e]) continue;
      const VertexId w = backward ? g.edge(e).tail : g.edge(e).head;
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

Membership reaching(const Digraph& g, std::span<const VertexId> targets, const std::vector<char>& removed_edges) {
  return search(g, targets, removed_edges, true);
}

Membership reachable_from(const Digraph& g, std::span<const VertexId> sources,
                          const std::vector<char>& removed_edges) {
  return search(g, sources, removed_edges, false);
}

}  // namespace gammoid
