#include <cmath>

#include "common.hpp"
#include "slg/core/random.hpp"
#include "slg/dict/dict_induction.hpp"

namespace slg {

HittingTimes hitting_times(const TermGraph& graph, const GraphSeeds& seeds, NodeId node,
                           const DictParams& params) {
  const int limit = params.max_walk_length;
  Rng rng(mix_seed(params.rng_seed, node));
  double pos_sum = 0.0, neg_sum = 0.0;
  for (int w = 0; w < params.walks_per_node; ++w) {
    NodeId at = node;
    int steps = 0;
    std::optional<Polarity> hit;
    while (steps < limit) {
      const auto nbs = graph.neighbors(at);
      if (nbs.empty()) break;
      double r = rng.uniform() * graph.weighted_degree(at);
      std::size_t k = 0;
      for (; k + 1 < nbs.size(); ++k) {
        r -= std::abs(nbs[k].weight);
        if (r < 0.0) break;
      }
      at = nbs[k].node;
      ++steps;
      const auto& l = seeds.label[at];
      if (l && is_polar(*l)) {
        hit = *l;
        break;
      }
    }
    pos_sum += hit == Polarity::positive ? steps : limit;
    neg_sum += hit == Polarity::negative ? steps : limit;
  }
  return {pos_sum / params.walks_per_node, neg_sum / params.walks_per_node};
}

Lexicon awadallah_radwan(const TermGraph& graph, const SeedSet& seeds, const DictParams& params,
                         Diagnostics* diag) {
  params.validate();
  const auto gs = resolve_polar_seeds(graph, seeds, diag);
  const auto comp = connected_components(graph);
  std::vector<bool> seeded(graph.node_count(), false);
  for (const auto s : gs.positive) seeded[comp[s]] = true;
  for (const auto s : gs.negative) seeded[comp[s]] = true;
  auto lex = detail::make_lexicon(params);
  for (NodeId i = 0; i < graph.node_count(); ++i) {
    if (gs.is_seed(i) || !seeded[comp[i]]) continue;
    const auto h = hitting_times(graph, gs, i, params);
    const double diff = h.positive - h.negative;
    auto p = Polarity::neutral;
    if (std::abs(diff) > params.threshold) p = diff < 0.0 ? Polarity::positive : Polarity::negative;
    lex.insert_or_assign({graph.term(i), p, std::abs(diff) / params.max_walk_length});
  }
  detail::add_seed_entries(lex, graph, gs);
  return lex;
}

}  // namespace slg
