#include "slg/dict/graph_seeds.hpp"

#include <string>

#include "slg/core/error.hpp"

namespace slg {

const std::vector<NodeId>& GraphSeeds::of(Polarity p) const {
  switch (p) {
    case Polarity::positive:
      return positive;
    case Polarity::negative:
      return negative;
    case Polarity::neutral:
      return neutral;
  }
  return neutral;
}

GraphSeeds resolve_seeds(const TermGraph& graph, const SeedSet& seeds, Diagnostics* diag) {
  GraphSeeds out;
  out.label.assign(graph.node_count(), std::nullopt);
  for (const auto& e : seeds.entries()) {
    if (e.kind != SeedKind::literal) continue;
    if (const auto id = graph.find(e.text)) {
      out.label[*id] = e.polarity;
    } else {
      ++out.absent_literals;
    }
  }
  if (seeds.has_patterns()) {
    for (NodeId n = 0; n < graph.node_count(); ++n) {
      if (out.label[n]) continue;
      if (const auto p = seeds.match_patterns(graph.term(n)).unique()) out.label[n] = *p;
    }
  }
  for (NodeId n = 0; n < graph.node_count(); ++n) {
    if (!out.label[n]) continue;
    switch (*out.label[n]) {
      case Polarity::positive:
        out.positive.push_back(n);
        break;
      case Polarity::negative:
        out.negative.push_back(n);
        break;
      case Polarity::neutral:
        out.neutral.push_back(n);
        break;
    }
  }
  if (out.absent_literals > 0) {
    warn(diag, std::to_string(out.absent_literals) + " seed term(s) not in the graph were skipped");
  }
  count(diag, "seeds_absent", static_cast<long long>(out.absent_literals));
  count(diag, "seeds_in_graph",
        static_cast<long long>(out.positive.size() + out.negative.size() + out.neutral.size()));
  return out;
}

GraphSeeds resolve_polar_seeds(const TermGraph& graph, const SeedSet& seeds, Diagnostics* diag) {
  auto out = resolve_seeds(graph, seeds, diag);
  if (!out.has_polar()) throw EmptySeedError("no positive or negative seed occurs in the graph");
  return out;
}

std::vector<std::size_t> connected_components(const TermGraph& graph) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(graph.node_count(), unset);
  std::vector<NodeId> stack;
  std::size_t next = 0;
  for (NodeId start = 0; start < graph.node_count(); ++start) {
    if (comp[start] != unset) continue;
    comp[start] = next;
    stack.push_back(start);
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (const auto& nb : graph.neighbors(u)) {
        if (comp[nb.node] == unset) {
          comp[nb.node] = next;
          stack.push_back(nb.node);
        }
      }
    }
    ++next;
  }
  return comp;
}

}  // namespace slg
