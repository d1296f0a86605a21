#include <algorithm>
#include <cmath>
#include <cstdio>

#include "slg/core/error.hpp"
#include "slg/corpus_induction/corpus_induction.hpp"

namespace slg {

std::vector<double> max_path_products(const TermGraph& graph, NodeId source, int max_length) {
  const auto n = graph.node_count();
  std::vector<double> best(n, 0.0);
  best.at(source) = 1.0;
  // frontier[v]: best product of a path with exactly the current length
  std::vector<double> frontier(n, 0.0), next(n, 0.0);
  frontier[source] = 1.0;
  for (int len = 1; len <= max_length; ++len) {
    std::fill(next.begin(), next.end(), 0.0);
    bool any = false;
    for (NodeId u = 0; u < n; ++u) {
      if (frontier[u] == 0.0) continue;
      for (const auto& nb : graph.neighbors(u)) {
        if (nb.weight <= 0.0) continue;
        const double v = frontier[u] * nb.weight;
        if (v > next[nb.node]) next[nb.node] = v;
      }
    }
    for (NodeId v = 0; v < n; ++v) {
      // a product that cannot beat the best known one cannot help later
      if (next[v] > best[v]) {
        best[v] = next[v];
        any = true;
      } else {
        next[v] = 0.0;
      }
    }
    if (!any) break;
    frontier.swap(next);
  }
  return best;
}

RankedCandidates velikovich(const TermGraph& graph, const SeedSet& seeds, const CorpusParams& params,
                            Diagnostics* diag) {
  params.validate();
  const auto gs = resolve_polar_seeds(graph, seeds, diag);
  const auto n = graph.node_count();
  for (const auto& e : graph.edges()) {
    if (e.weight > 1.0) throw ValidationError("path products need edge weights <= 1");
  }
  std::vector<double> pos(n, 0.0), neg(n, 0.0);
  for (const auto s : gs.positive) {
    const auto a = max_path_products(graph, s, params.path_length);
    for (NodeId v = 0; v < n; ++v) pos[v] += a[v];
  }
  for (const auto s : gs.negative) {
    const auto a = max_path_products(graph, s, params.path_length);
    for (NodeId v = 0; v < n; ++v) neg[v] += a[v];
  }
  double pos_mass = 0.0, neg_mass = 0.0;
  for (NodeId v = 0; v < n; ++v) {
    if (gs.is_seed(v)) continue;
    pos_mass += pos[v];
    neg_mass += neg[v];
  }
  double gamma = 0.0;
  if (params.gamma) {
    gamma = *params.gamma;
  } else {
    if (neg_mass == 0.0) {
      throw DegenerateSeedsError("negative seeds reach no candidate; gamma is undefined");
    }
    gamma = pos_mass / neg_mass;
  }
  if (diag) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", gamma);
    diag->count("gamma", buf);
  }

  std::vector<double> pol(n, 0.0);
  double max_abs = 0.0;
  for (NodeId v = 0; v < n; ++v) {
    if (gs.is_seed(v)) continue;
    pol[v] = pos[v] - gamma * neg[v];
    max_abs = std::max(max_abs, std::abs(pol[v]));
  }
  std::vector<LexiconEntry> out;
  if (max_abs > 0.0) {
    for (NodeId v = 0; v < n; ++v) {
      if (gs.is_seed(v)) continue;
      const double score = std::abs(pol[v]) / max_abs;
      if (!(score > params.neutral_threshold)) continue;
      out.push_back({graph.term(v), pol[v] > 0.0 ? Polarity::positive : Polarity::negative, score});
    }
  }
  return rank_candidates(std::move(out), params.top_k, params.describe());
}

}  // namespace slg
