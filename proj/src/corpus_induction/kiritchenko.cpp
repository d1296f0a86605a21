#include <cmath>

#include "slg/core/error.hpp"
#include "detail.hpp"
#include "slg/corpus_induction/corpus_induction.hpp"

namespace slg {

namespace detail {

void require_both_classes(const LabeledDocumentSet& labeled) {
  for (const auto p : {Polarity::positive, Polarity::negative}) {
    if (labeled.count(p) == 0) {
      throw DegenerateSeedsError("no document was labeled " + std::string(to_string(p)) +
                                 " by the seeds");
    }
  }
}

bool is_seed_term(const SeedSet& seeds, std::string_view term) {
  return seeds.is_literal_seed(term) || seeds.match_patterns(term).any();
}

}  // namespace detail

double kiritchenko_score(const LabeledDocumentSet& labeled, TermId term) {
  return labeled.pmi(term, Polarity::positive) - labeled.pmi(term, Polarity::negative);
}

RankedCandidates kiritchenko(const LabeledDocumentSet& labeled, const CorpusParams& params,
                             Diagnostics* diag) {
  params.validate();
  detail::require_both_classes(labeled);
  const auto& stats = labeled.stats();
  std::vector<LexiconEntry> out;
  std::size_t considered = 0;
  for (TermId t = 0; t < stats.vocabulary().size(); ++t) {
    const auto& term = stats.term(t);
    if (labeled.term_count(t, Polarity::positive) + labeled.term_count(t, Polarity::negative) == 0) continue;
    if (detail::is_seed_term(labeled.seeds(), term)) continue;
    ++considered;
    const double s = kiritchenko_score(labeled, t);
    if (!(std::abs(s) > params.neutral_threshold)) continue;
    out.push_back({term, s > 0.0 ? Polarity::positive : Polarity::negative, std::abs(s)});
  }
  count(diag, "candidates_scored", static_cast<long long>(considered));
  return rank_candidates(std::move(out), params.top_k, params.describe());
}

}  // namespace slg
