#pragma once

#include "slg/core/lexicon.hpp"
#include "slg/dict/graph_seeds.hpp"
#include "slg/dict/params.hpp"
#include "slg/taxonomy/term_graph.hpp"

namespace slg::detail {

/// Adds every seed node with its seed polarity, replacing earlier entries.
inline void add_seed_entries(Lexicon& lex, const TermGraph& graph, const GraphSeeds& seeds,
                             double score = 1.0) {
  for (NodeId n = 0; n < graph.node_count(); ++n) {
    if (seeds.label[n]) lex.insert_or_assign({graph.term(n), *seeds.label[n], score});
  }
}

inline Lexicon make_lexicon(const DictParams& params) { return Lexicon(params.describe()); }

}  // namespace slg::detail
