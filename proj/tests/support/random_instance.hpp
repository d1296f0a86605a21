#pragma once

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "slg/core/seed_set.hpp"
#include "slg/taxonomy/term_graph.hpp"

namespace slg::testing {

struct RandomInstance {
  TermGraph graph;
  SeedSet seeds;
};

inline std::string node_name(std::size_t i) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "n%03zu", i);
  return buf;
}

/// Random spanning tree plus extra edges with dyadic weights; the first two
/// seeds are positive and negative, the rest of random class.
inline RandomInstance random_instance(std::mt19937_64& gen, std::size_t nodes, double density,
                                      double negative_share, std::size_t seed_count) {
  TermGraph::Builder b;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t i = 0; i < nodes; ++i) b.add_node(node_name(i));
  for (std::size_t i = 1; i < nodes; ++i) {
    const double w = static_cast<double>(1 + gen() % 4) / 4.0;
    b.add_edge(node_name(i), node_name(gen() % i), u(gen) < negative_share ? -w : w);
  }
  for (std::size_t i = 0; i < nodes; ++i) {
    for (std::size_t j = i + 1; j < nodes; ++j) {
      if (u(gen) >= density) continue;
      const double w = static_cast<double>(1 + gen() % 4) / 4.0;
      b.add_edge(node_name(i), node_name(j), u(gen) < negative_share ? -w : w);
    }
  }
  std::vector<std::size_t> ids(nodes);
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), gen);
  std::vector<SeedEntry> entries;
  for (std::size_t k = 0; k < std::min(seed_count, nodes); ++k) {
    const auto p = k == 0 ? Polarity::positive : k == 1 ? Polarity::negative : kAllPolarities[gen() % 3];
    entries.push_back({node_name(ids[k]), p, SeedKind::literal});
  }
  return {b.build(), SeedSet(std::move(entries))};
}

}  // namespace slg::testing
