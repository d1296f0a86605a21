#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "slg/core/diagnostics.hpp"
#include "slg/core/lexicon.hpp"
#include "slg/core/seed_set.hpp"
#include "slg/corpus/corpus.hpp"
#include "slg/corpus/distant_label.hpp"
#include "slg/corpus_induction/params.hpp"
#include "slg/dict/graph_seeds.hpp"
#include "slg/eval/gold.hpp"
#include "slg/taxonomy/term_graph.hpp"

namespace slg {

/// Polar non-seed candidates in (score desc, term asc) order.
struct RankedCandidates {
  std::vector<LexiconEntry> entries;
  std::string provenance;

  std::size_t size() const noexcept { return entries.size(); }
  bool empty() const noexcept { return entries.empty(); }
  std::size_t count(Polarity p) const noexcept;
  Lexicon to_lexicon() const;
};

/// Sorts the entries and keeps at most `top_k` per class (0 keeps all).
RankedCandidates rank_candidates(std::vector<LexiconEntry> entries, std::size_t top_k,
                                 std::string provenance);

using SpinObserver = std::function<void(std::size_t iteration, std::span<const double> spins)>;
struct SpinResult {
  std::vector<double> spins;  // per node
  std::size_t iterations = 0;
  bool converged = false;
};
/// Mean-field iteration x_i <- tanh(beta * sum_j w_ij x_j) over degree
/// normalized weights, seeds clamped. The observer sees the initial state
/// and every iterate.
SpinResult ising_spins(const TermGraph& graph, const GraphSeeds& seeds, const CorpusParams& params,
                       const SpinObserver& observer = {});
RankedCandidates takamura_ising(const TermGraph& graph, const SeedSet& seeds,
                                const CorpusParams& params, Diagnostics* diag = nullptr);

/// Best path product from `source` to every node over positive edges, paths
/// of at most `max_length` edges.
std::vector<double> max_path_products(const TermGraph& graph, NodeId source, int max_length);
RankedCandidates velikovich(const TermGraph& graph, const SeedSet& seeds, const CorpusParams& params,
                            Diagnostics* diag = nullptr);

/// PMI(w, positive) - PMI(w, negative).
double kiritchenko_score(const LabeledDocumentSet& labeled, TermId term);
RankedCandidates kiritchenko(const LabeledDocumentSet& labeled, const CorpusParams& params,
                             Diagnostics* diag = nullptr);

/// `documents` are the ones `labeled` was built from.
RankedCandidates severyn(std::span<const TokenizedDocument> documents,
                         const LabeledDocumentSet& labeled, const CorpusParams& params,
                         Diagnostics* diag = nullptr);

struct TuneResult {
  Lexicon lexicon;
  std::size_t kept = 0;           // candidates added to the seeds
  double seeds_macro_f = 0.0;
  double macro_f = 0.0;
  std::vector<double> curve;      // macro-F after each evaluated block
};
/// Adds candidates to the seed lexicon in blocks of `step` and stops at the
/// first block that lowers dev macro-F.
TuneResult tune_lexicon_size(std::span<const LexiconEntry> candidates, const SeedSet& seeds,
                             std::span<const TokenizedDocument> dev_docs,
                             std::span<const GoldAnnotation> dev_gold, std::size_t step);

}  // namespace slg
