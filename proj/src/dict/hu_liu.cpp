#include <map>

#include "common.hpp"
#include "slg/dict/dict_induction.hpp"

namespace slg {

Lexicon hu_liu(const TermGraph& graph, const SeedSet& seeds, const DictParams& params,
               Diagnostics* diag) {
  params.validate();
  const auto gs = resolve_polar_seeds(graph, seeds, diag);
  auto lex = detail::make_lexicon(params);

  std::vector<std::optional<Polarity>> label = gs.label;
  std::vector<NodeId> frontier;
  for (const auto n : gs.positive) frontier.push_back(n);
  for (const auto n : gs.negative) frontier.push_back(n);

  for (int round = 1; round <= params.max_iterations && !frontier.empty(); ++round) {
    std::map<NodeId, PolarityMask> reached;
    for (const auto u : frontier) {
      for (const auto& nb : graph.neighbors(u)) {
        if (label[nb.node]) continue;
        reached[nb.node].set(nb.weight > 0.0 ? *label[u] : flip(*label[u]));
      }
    }
    frontier.clear();
    const double score = 1.0 / (round + 1);
    for (const auto& [node, mask] : reached) {
      const auto p = mask.unique();
      label[node] = p.value_or(Polarity::neutral);
      lex.insert_or_assign({graph.term(node), *label[node], score});
      if (p) frontier.push_back(node);
    }
  }
  detail::add_seed_entries(lex, graph, gs);
  return lex;
}

}  // namespace slg
