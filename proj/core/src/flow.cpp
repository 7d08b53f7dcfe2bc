#include "gammoid/flow.hpp"

#include <algorithm>
#include <deque>

namespace gammoid {

std::size_t FlowNetwork::add_node() {
  adjacency_.emplace_back();
  return adjacency_.size() - 1;
}

std::size_t FlowNetwork::add_arc(std::size_t from, std::size_t to, Capacity capacity) {
  const std::size_t index = arcs_.size();
  arcs_.push_back({to, capacity, 0});
  arcs_.push_back({from, 0, 0});
  adjacency_[from].push_back(index);
  adjacency_[to].push_back(index + 1);
  return index;
}

void FlowNetwork::set_flow(std::size_t arc, Capacity value) {
  arcs_[arc].flow = value;
  arcs_[arc ^ 1].flow = -value;
}

bool FlowNetwork::build_levels(std::size_t source, std::size_t target) {
  level_.assign(adjacency_.size(), -1);
  std::deque<std::size_t> queue{source};
  level_[source] = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t a : adjacency_[v]) {
      const Arc& arc = arcs_[a];
      if (arc.capacity - arc.flow > 0 && level_[arc.to] < 0) {
        level_[arc.to] = level_[v] + 1;
        queue.push_back(arc.to);
      }
    }
  }
  return level_[target] >= 0;
}

FlowNetwork::Capacity FlowNetwork::augment(std::size_t node, std::size_t target, Capacity limit) {
  if (node == target) return limit;
  for (std::size_t& i = cursor_[node]; i < adjacency_[node].size(); ++i) {
    const std::size_t a = adjacency_[node][i];
    Arc& arc = arcs_[a];
    const Capacity residual = arc.capacity - arc.flow;
    if (residual <= 0 || level_[arc.to] != level_[node] + 1) continue;
    const Capacity pushed = augment(arc.to, target, std::min(limit, residual));
    if (pushed > 0) {
      arc.flow += pushed;
      arcs_[a ^ 1].flow -= pushed;
      return pushed;
    }
  }
  return 0;
}

FlowNetwork::Capacity FlowNetwork::max_flow(std::size_t source, std::size_t target) {
  Capacity total = 0;
  if (source == target) return 0;
  while (build_levels(source, target)) {
    cursor_.assign(adjacency_.size(), 0);
    // One unit per augmentation keeps path choice aligned with arc order.
    while (Capacity pushed = augment(source, target, 1)) total += pushed;
  }
  return total;
}

std::vector<char> FlowNetwork::residual_reachable(std::size_t source) const {
  std::vector<char> seen(adjacency_.size(), 0);
  std::deque<std::size_t> queue{source};
  seen[source] = 1;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t a : adjacency_[v]) {
      const Arc& arc = arcs_[a];
      if (arc.capacity - arc.flow > 0 && !seen[arc.to]) {
        seen[arc.to] = 1;
        queue.push_back(arc.to);
      }
    }
  }
  return seen;
}

}  // namespace gammoid
