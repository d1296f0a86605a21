#include <cmath>

#include "common.hpp"
#include "slg/core/error.hpp"
#include "slg/dict/dict_induction.hpp"

namespace slg {

std::vector<double> blair_goldensohn_scores(const TermGraph& graph, const GraphSeeds& seeds,
                                            int iterations) {
  const auto n = graph.node_count();
  std::vector<double> v(n, 0.0), next(n);
  for (const auto s : seeds.positive) v[s] = 1.0;
  for (const auto s : seeds.negative) v[s] = -1.0;
  for (int k = 0; k < iterations; ++k) {
    for (NodeId i = 0; i < n; ++i) {
      double sum = 0.0;
      for (const auto& nb : graph.neighbors(i)) sum += nb.weight * v[nb.node];
      next[i] = sum;
    }
    for (const auto s : seeds.neutral) next[s] = 0.0;
    for (const auto s : seeds.positive) next[s] = std::abs(next[s]);
    for (const auto s : seeds.negative) next[s] = -std::abs(next[s]);
    for (NodeId i = 0; i < n; ++i) {
      if (!std::isfinite(next[i])) {
        throw NumericOverflowError("score vector overflowed after " + std::to_string(k + 1) +
                                   " iterations; use a smaller max_iterations");
      }
    }
    v.swap(next);
  }
  return v;
}

Lexicon blair_goldensohn(const TermGraph& graph, const SeedSet& seeds, const DictParams& params,
                         Diagnostics* diag) {
  params.validate();
  const auto gs = resolve_polar_seeds(graph, seeds, diag);
  const auto v = blair_goldensohn_scores(graph, gs, params.max_iterations);
  auto lex = detail::make_lexicon(params);
  for (NodeId i = 0; i < graph.node_count(); ++i) {
    const double mag = std::abs(v[i]);
    const double score = std::log1p(mag);
    if (gs.label[i]) {
      lex.insert_or_assign({graph.term(i), *gs.label[i], score});
    } else if (v[i] != 0.0) {
      const auto p = mag > params.threshold
                         ? (v[i] > 0.0 ? Polarity::positive : Polarity::negative)
                         : Polarity::neutral;
      lex.insert_or_assign({graph.term(i), p, score});
    }
  }
  return lex;
}

}  // namespace slg
