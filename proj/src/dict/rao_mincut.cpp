#include <cmath>

#include "common.hpp"
#include "slg/core/error.hpp"
#include "slg/dict/dict_induction.hpp"
#include "slg/dict/max_flow.hpp"

namespace slg {

SeedCut seed_min_cut(const TermGraph& graph, const GraphSeeds& seeds, Polarity source_class) {
  const auto n = graph.node_count();
  const auto source = n, sink = n + 1;
  FlowNetwork net(n + 2);
  for (NodeId i = 0; i < n; ++i) {
    if (!seeds.label[i]) continue;
    if (*seeds.label[i] == source_class) {
      net.add_arc(source, i, kInfiniteCapacity);
    } else {
      net.add_arc(i, sink, kInfiniteCapacity);
    }
  }
  for (const auto& e : graph.edges()) {
    const double cap = std::abs(e.weight);
    if (e.weight > 0.0) {
      net.add_edge(e.u, e.v, cap);
      continue;
    }
    for (const auto& [x, partner] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      const auto q = seeds.label[partner];
      if (!q || !is_polar(*q)) continue;
      if (flip(*q) == source_class) {
        net.add_arc(source, x, cap);
      } else {
        net.add_arc(x, sink, cap);
      }
    }
  }
  SeedCut out;
  out.cost = net.max_flow(source, sink);
  if (!std::isfinite(out.cost)) {
    throw InconsistentSeedsError("seed sets cannot be separated by a finite cut");
  }
  auto side = net.source_side(source);
  side.resize(n);
  out.source_side = std::move(side);
  return out;
}

Lexicon rao_mincut(const TermGraph& graph, const SeedSet& seeds, const DictParams& params,
                   Diagnostics* diag) {
  params.validate();
  const auto gs = resolve_polar_seeds(graph, seeds, diag);
  const auto pos = seed_min_cut(graph, gs, Polarity::positive);
  const auto neg = seed_min_cut(graph, gs, Polarity::negative);
  auto lex = detail::make_lexicon(params);
  for (NodeId i = 0; i < graph.node_count(); ++i) {
    if (gs.is_seed(i)) continue;
    auto p = Polarity::neutral;
    if (pos.source_side[i] && !neg.source_side[i]) p = Polarity::positive;
    if (neg.source_side[i] && !pos.source_side[i]) p = Polarity::negative;
    lex.insert_or_assign({graph.term(i), p, 1.0});
  }
  detail::add_seed_entries(lex, graph, gs);
  return lex;
}

}  // namespace slg
