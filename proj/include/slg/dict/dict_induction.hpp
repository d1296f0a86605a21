#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "slg/core/diagnostics.hpp"
#include "slg/core/lexicon.hpp"
#include "slg/core/seed_set.hpp"
#include "slg/dict/graph_seeds.hpp"
#include "slg/dict/params.hpp"
#include "slg/taxonomy/lexical_graph.hpp"
#include "slg/taxonomy/term_graph.hpp"

namespace slg {

/// Breadth-first polarity propagation; antonym edges flip the label.
Lexicon hu_liu(const TermGraph& graph, const SeedSet& seeds, const DictParams& params,
               Diagnostics* diag = nullptr);

/// Score vector after K clamped multiplications with the adjacency matrix.
std::vector<double> blair_goldensohn_scores(const TermGraph& graph, const GraphSeeds& seeds,
                                            int iterations);
Lexicon blair_goldensohn(const TermGraph& graph, const SeedSet& seeds, const DictParams& params,
                         Diagnostics* diag = nullptr);

/// Per-class log score log P(c) + sum log P(n|c) of one node, in polarity order.
std::array<double, 3> kim_hovy_log_scores(const TermGraph& graph, const GraphSeeds& seeds,
                                          NodeId node, const std::array<double, 3>& priors);
Lexicon kim_hovy(const TermGraph& graph, const SeedSet& seeds, const DictParams& params,
                 Diagnostics* diag = nullptr);

/// Training label per node after `rounds` expansion rounds; terms reached by
/// two classes in the same round are dropped.
std::vector<std::optional<Polarity>> expand_seed_sets(const TermGraph& graph,
                                                      const GraphSeeds& seeds, int rounds);
/// Committee outcome for two member votes: agreement wins, otherwise the
/// proposed class with the nearest centroid (distance per polarity), and
/// neutral when those distances are equal.
Polarity resolve_committee(Polarity first, Polarity second,
                           const std::array<double, 3>& centroid_distance);
/// The taxonomy supplies glosses; `graph` must be derived from it.
Lexicon esuli_sebastiani(const LexicalGraph& taxonomy, const TermGraph& graph,
                         const SeedSet& seeds, const DictParams& params,
                         Diagnostics* diag = nullptr);

struct SeedCut {
  double cost = 0.0;
  std::vector<bool> source_side;  // per graph node
};
/// Minimum cut separating the seeds of `source_class` from all other seeds.
/// Positive edges have capacity |w|; an antonym edge to a polar seed of class
/// c links the other endpoint with capacity |w| to the terminal of the class
/// opposite to c.
SeedCut seed_min_cut(const TermGraph& graph, const GraphSeeds& seeds, Polarity source_class);
Lexicon rao_mincut(const TermGraph& graph, const SeedSet& seeds, const DictParams& params,
                   Diagnostics* diag = nullptr);

using LabelTriple = std::array<double, 3>;  // positive, negative, neutral mass
using PropagationObserver =
    std::function<void(std::size_t iteration, std::span<const LabelTriple> labels)>;
struct PropagationResult {
  std::vector<LabelTriple> labels;
  std::size_t iterations = 0;
  bool converged = false;
};
/// Clamped Jacobi iteration. The observer sees the initial state (iteration
/// 0) and every iterate.
PropagationResult propagate_labels(const TermGraph& graph, const GraphSeeds& seeds,
                                   const DictParams& params,
                                   const PropagationObserver& observer = {});
Lexicon rao_label_propagation(const TermGraph& graph, const SeedSet& seeds,
                              const DictParams& params, Diagnostics* diag = nullptr);

struct HittingTimes {
  double positive = 0.0;
  double negative = 0.0;
};
/// Mean truncated steps to the first positive and negative seed from `node`.
HittingTimes hitting_times(const TermGraph& graph, const GraphSeeds& seeds, NodeId node,
                           const DictParams& params);
Lexicon awadallah_radwan(const TermGraph& graph, const SeedSet& seeds, const DictParams& params,
                         Diagnostics* diag = nullptr);

/// Dispatches on params.algorithm. ES needs the taxonomy for its glosses.
Lexicon induce_dictionary(const LexicalGraph& taxonomy, const TermGraph& graph,
                          const SeedSet& seeds, const DictParams& params,
                          Diagnostics* diag = nullptr);

}  // namespace slg
