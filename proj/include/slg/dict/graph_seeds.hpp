#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "slg/core/diagnostics.hpp"
#include "slg/core/polarity.hpp"
#include "slg/core/seed_set.hpp"
#include "slg/taxonomy/term_graph.hpp"

namespace slg {

/// Seed labels projected onto graph nodes.
struct GraphSeeds {
  std::vector<std::optional<Polarity>> label;  // per node
  std::vector<NodeId> positive, negative, neutral;
  std::size_t absent_literals = 0;

  bool is_seed(NodeId n) const { return label[n].has_value(); }
  bool has_polar() const noexcept { return !positive.empty() || !negative.empty(); }
  const std::vector<NodeId>& of(Polarity p) const;
};

/// Literal seeds label their node; patterns label every node whose term they
/// match unless a literal seed already does. Nodes matched by patterns of
/// different classes stay unlabeled. Literal seeds missing from the graph
/// are counted and reported as a warning.
GraphSeeds resolve_seeds(const TermGraph& graph, const SeedSet& seeds, Diagnostics* diag = nullptr);

/// Same, but throws EmptySeedError when no polar seed is in the graph.
GraphSeeds resolve_polar_seeds(const TermGraph& graph, const SeedSet& seeds,
                               Diagnostics* diag = nullptr);

/// Connected-component id per node.
std::vector<std::size_t> connected_components(const TermGraph& graph);

}  // namespace slg
