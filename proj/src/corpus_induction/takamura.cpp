#include <cmath>

#include "slg/corpus_induction/corpus_induction.hpp"

namespace slg {

namespace {

double clamp_value(Polarity p) {
  return p == Polarity::positive ? 1.0 : p == Polarity::negative ? -1.0 : 0.0;
}

}  // namespace

SpinResult ising_spins(const TermGraph& graph, const GraphSeeds& seeds, const CorpusParams& params,
                       const SpinObserver& observer) {
  params.validate();
  const auto n = graph.node_count();
  std::vector<double> degree(n);
  for (NodeId i = 0; i < n; ++i) degree[i] = graph.weighted_degree(i);

  SpinResult r;
  r.spins.assign(n, 0.0);
  for (NodeId i = 0; i < n; ++i) {
    if (seeds.label[i]) r.spins[i] = clamp_value(*seeds.label[i]);
  }
  if (observer) observer(0, r.spins);
  std::vector<double> next(n);
  while (r.iterations < static_cast<std::size_t>(params.max_iterations)) {
    double change = 0.0;
    for (NodeId i = 0; i < n; ++i) {
      if (seeds.label[i]) {
        next[i] = r.spins[i];
        continue;
      }
      double field = 0.0;
      for (const auto& nb : graph.neighbors(i)) {
        field += nb.weight / std::sqrt(degree[i] * degree[nb.node]) * r.spins[nb.node];
      }
      next[i] = std::tanh(params.beta * field);
      change = std::max(change, std::abs(next[i] - r.spins[i]));
    }
    r.spins.swap(next);
    ++r.iterations;
    if (observer) observer(r.iterations, r.spins);
    if (change < params.tolerance) {
      r.converged = true;
      break;
    }
  }
  return r;
}

RankedCandidates takamura_ising(const TermGraph& graph, const SeedSet& seeds,
                                const CorpusParams& params, Diagnostics* diag) {
  params.validate();
  const auto gs = resolve_polar_seeds(graph, seeds, diag);
  const auto r = ising_spins(graph, gs, params);
  count(diag, "iterations", static_cast<long long>(r.iterations));
  if (!r.converged) warn(diag, "spin iteration did not converge within max_iterations");

  std::vector<LexiconEntry> out;
  for (NodeId i = 0; i < graph.node_count(); ++i) {
    const double x = r.spins[i];
    if (gs.is_seed(i) || !(std::abs(x) > params.neutral_threshold)) continue;
    out.push_back({graph.term(i), x > 0.0 ? Polarity::positive : Polarity::negative, std::abs(x)});
  }
  return rank_candidates(std::move(out), params.top_k, params.describe());
}

}  // namespace slg
