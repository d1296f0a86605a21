#include <algorithm>

#include "slg/corpus_induction/corpus_induction.hpp"

namespace slg {

std::size_t RankedCandidates::count(Polarity p) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [p](const auto& e) { return e.polarity == p; }));
}

Lexicon RankedCandidates::to_lexicon() const {
  Lexicon lex(provenance);
  for (const auto& e : entries) lex.insert_or_assign(e);
  return lex;
}

RankedCandidates rank_candidates(std::vector<LexiconEntry> entries, std::size_t top_k,
                                 std::string provenance) {
  std::sort(entries.begin(), entries.end(), ranks_before);
  RankedCandidates out;
  out.provenance = std::move(provenance);
  std::size_t kept[3] = {0, 0, 0};
  for (auto& e : entries) {
    auto& k = kept[index_of(e.polarity)];
    if (top_k != 0 && k >= top_k) continue;
    ++k;
    out.entries.push_back(std::move(e));
  }
  return out;
}

}  // namespace slg
