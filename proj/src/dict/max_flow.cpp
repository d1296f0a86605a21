#include "slg/dict/max_flow.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace slg {

namespace {
constexpr auto kNone = static_cast<std::size_t>(-1);
}

FlowNetwork::FlowNetwork(std::size_t nodes) : head_(nodes, kNone) {}

void FlowNetwork::add_arc(std::size_t from, std::size_t to, double capacity) {
  if (!(capacity > 0.0)) return;
  if (std::isfinite(capacity)) max_capacity_ = std::max(max_capacity_, capacity);
  arcs_.push_back({to, head_[from], capacity});
  head_[from] = arcs_.size() - 1;
  arcs_.push_back({from, head_[to], 0.0});
  head_[to] = arcs_.size() - 1;
}

void FlowNetwork::add_edge(std::size_t u, std::size_t v, double capacity) {
  add_arc(u, v, capacity);
  add_arc(v, u, capacity);
}

double FlowNetwork::epsilon() const noexcept { return max_capacity_ * 1e-12; }

bool FlowNetwork::build_levels(std::size_t s, std::size_t t) {
  level_.assign(head_.size(), -1);
  std::queue<std::size_t> q;
  level_[s] = 0;
  q.push(s);
  const double eps = epsilon();
  while (!q.empty()) {
    const auto u = q.front();
    q.pop();
    for (auto a = head_[u]; a != kNone; a = arcs_[a].next) {
      const auto& arc = arcs_[a];
      if (arc.residual > eps && level_[arc.to] < 0) {
        level_[arc.to] = level_[u] + 1;
        q.push(arc.to);
      }
    }
  }
  return level_[t] >= 0;
}

double FlowNetwork::push(std::size_t u, std::size_t t, double limit) {
  if (u == t) return limit;
  const double eps = epsilon();
  for (auto& a = cursor_[u]; a != kNone; a = arcs_[a].next) {
    auto& arc = arcs_[a];
    if (arc.residual <= eps || level_[arc.to] != level_[u] + 1) continue;
    const double got = push(arc.to, t, std::min(limit, arc.residual));
    if (got > 0.0) {
      if (std::isfinite(arc.residual)) arc.residual -= got;
      auto& back = arcs_[a ^ 1];
      if (std::isfinite(back.residual)) back.residual += got;
      return got;
    }
  }
  return 0.0;
}

double FlowNetwork::max_flow(std::size_t source, std::size_t sink) {
  double total = 0.0;
  if (source == sink) return kInfiniteCapacity;
  while (build_levels(source, sink)) {
    cursor_ = head_;
    while (true) {
      const double f = push(source, sink, kInfiniteCapacity);
      if (f <= 0.0) break;
      if (!std::isfinite(f)) return kInfiniteCapacity;
      total += f;
    }
  }
  return total;
}

std::vector<bool> FlowNetwork::source_side(std::size_t source) const {
  std::vector<bool> seen(head_.size(), false);
  std::vector<std::size_t> stack{source};
  seen[source] = true;
  const double eps = epsilon();
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    for (auto a = head_[u]; a != kNone; a = arcs_[a].next) {
      const auto& arc = arcs_[a];
      if (arc.residual > eps && !seen[arc.to]) {
        seen[arc.to] = true;
        stack.push_back(arc.to);
      }
    }
  }
  return seen;
}

}  // namespace slg
