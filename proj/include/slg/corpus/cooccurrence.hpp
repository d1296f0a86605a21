#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "slg/corpus/corpus.hpp"
#include "slg/taxonomy/term_graph.hpp"

namespace slg {

inline constexpr double kPmiEpsilon = 0.5;

/// log2((joint + eps) * total / ((a + eps) * (b + eps))).
double pmi_value(double joint, double a, double b, double total, double epsilon = kPmiEpsilon);

enum class EdgeWeighting { pmi, count };
enum class PairSource {
  window,       // both lemmas within `window` tokens of each other
  conjunction,  // lemmas on either side of a coordinating conjunction
};

struct CooccurrenceOptions {
  std::size_t window = 5;
  PairSource source = PairSource::window;
  std::vector<std::string> conjunctions{"und", "sowie"};
  EdgeWeighting weighting = EdgeWeighting::pmi;
  double epsilon = kPmiEpsilon;

  void validate() const;
};

/// Unordered pair counts between vocabulary terms, self pairs excluded.
class CooccurrenceCounts {
 public:
  CooccurrenceCounts(std::span<const TokenizedDocument> docs, const CorpusStats& stats,
                     const CooccurrenceOptions& options);

  std::uint64_t count(TermId a, TermId b) const;
  std::uint64_t count(std::string_view a, std::string_view b) const;
  std::size_t pair_count() const noexcept { return counts_.size(); }

  /// Each pair once with a < b, sorted.
  std::vector<std::tuple<TermId, TermId, std::uint64_t>> pairs() const;

  /// Term-term PMI with the token count as grand total. Throws
  /// OutOfVocabularyError for unknown terms.
  double pmi(std::string_view a, std::string_view b) const;

 private:
  const CorpusStats* stats_;
  double epsilon_;
  std::unordered_map<std::uint64_t, std::uint64_t> counts_;
};

/// Edge (u, v) for every co-occurring pair; weight = positive PMI divided by
/// the largest PMI, or count divided by the largest count. Pairs with PMI
/// <= 0 are dropped.
TermGraph build_cooccurrence_graph(std::span<const TokenizedDocument> docs, const CorpusStats& stats,
                                   const CooccurrenceOptions& options = {});

/// Union of two graphs; for a pair present in both, the larger |w| wins and
/// the negative weight on ties.
TermGraph merge_graphs(const TermGraph& a, const TermGraph& b);

}  // namespace slg
