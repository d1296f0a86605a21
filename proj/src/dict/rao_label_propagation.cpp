#include <algorithm>
#include <cmath>

#include "common.hpp"
#include "slg/dict/dict_induction.hpp"

namespace slg {

namespace {

LabelTriple one_hot(Polarity p) {
  LabelTriple t{0.0, 0.0, 0.0};
  t[index_of(p)] = 1.0;
  return t;
}

}  // namespace

PropagationResult propagate_labels(const TermGraph& graph, const GraphSeeds& seeds,
                                   const DictParams& params, const PropagationObserver& observer) {
  params.validate();
  const auto n = graph.node_count();
  PropagationResult r;
  r.labels.assign(n, LabelTriple{1.0 / 3, 1.0 / 3, 1.0 / 3});
  std::vector<double> degree(n);
  for (NodeId i = 0; i < n; ++i) {
    degree[i] = graph.weighted_degree(i);
    if (seeds.label[i]) r.labels[i] = one_hot(*seeds.label[i]);
  }
  if (observer) observer(0, r.labels);
  std::vector<LabelTriple> next(n);
  while (r.iterations < static_cast<std::size_t>(params.max_iterations)) {
    double change = 0.0;
    for (NodeId i = 0; i < n; ++i) {
      if (seeds.label[i] || degree[i] == 0.0) {
        next[i] = r.labels[i];
        continue;
      }
      LabelTriple acc{0.0, 0.0, 0.0};
      for (const auto& nb : graph.neighbors(i)) {
        const double t = std::abs(nb.weight) / degree[i];
        const auto& y = r.labels[nb.node];
        if (nb.weight > 0.0) {
          acc[0] += t * y[0];
          acc[1] += t * y[1];
        } else {
          acc[0] += t * y[1];
          acc[1] += t * y[0];
        }
        acc[2] += t * y[2];
      }
      for (std::size_t c = 0; c < 3; ++c) change = std::max(change, std::abs(acc[c] - r.labels[i][c]));
      next[i] = acc;
    }
    r.labels.swap(next);
    ++r.iterations;
    if (observer) observer(r.iterations, r.labels);
    if (change < params.tolerance) {
      r.converged = true;
      break;
    }
  }
  return r;
}

Lexicon rao_label_propagation(const TermGraph& graph, const SeedSet& seeds,
                              const DictParams& params, Diagnostics* diag) {
  params.validate();
  const auto gs = resolve_polar_seeds(graph, seeds, diag);
  std::size_t isolated = 0;
  for (NodeId i = 0; i < graph.node_count(); ++i) {
    if (gs.is_seed(i) && graph.neighbors(i).empty()) ++isolated;
  }
  if (isolated > 0) {
    warn(diag, std::to_string(isolated) + " seed(s) without edges do not take part in propagation");
  }
  const auto r = propagate_labels(graph, gs, params);
  count(diag, "iterations", static_cast<long long>(r.iterations));
  if (!r.converged) warn(diag, "label propagation did not converge within max_iterations");

  const auto comp = connected_components(graph);
  std::vector<bool> seeded(graph.node_count(), false);
  for (NodeId i = 0; i < graph.node_count(); ++i) {
    if (gs.is_seed(i) && !graph.neighbors(i).empty()) seeded[comp[i]] = true;
  }
  auto lex = detail::make_lexicon(params);
  for (NodeId i = 0; i < graph.node_count(); ++i) {
    if (gs.is_seed(i) || !seeded[comp[i]]) continue;
    const auto& y = r.labels[i];
    std::array<std::size_t, 3> order{0, 1, 2};
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return y[a] > y[b]; });
    const double win = y[order[0]];
    const auto p = win - y[order[1]] > params.threshold ? kAllPolarities[order[0]] : Polarity::neutral;
    lex.insert_or_assign({graph.term(i), p, win});
  }
  detail::add_seed_entries(lex, graph, gs);
  return lex;
}

}  // namespace slg
