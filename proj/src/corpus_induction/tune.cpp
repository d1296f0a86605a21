#include <algorithm>

#include "slg/core/error.hpp"
#include "slg/corpus_induction/corpus_induction.hpp"
#include "slg/eval/evaluate.hpp"

namespace slg {

TuneResult tune_lexicon_size(std::span<const LexiconEntry> candidates, const SeedSet& seeds,
                             std::span<const TokenizedDocument> dev_docs,
                             std::span<const GoldAnnotation> dev_gold, std::size_t step) {
  if (step < 1) throw ValidationError("step must be at least 1");
  validate_gold(dev_gold, dev_docs);

  TuneResult r;
  r.lexicon = seeds.to_lexicon();
  r.seeds_macro_f = evaluate_lexicon(r.lexicon, dev_docs, dev_gold).macro_f;
  r.macro_f = r.seeds_macro_f;
  auto current = r.lexicon;
  std::size_t added = 0;
  while (added < candidates.size()) {
    const auto end = std::min(candidates.size(), added + step);
    for (auto i = added; i < end; ++i) current.insert(candidates[i]);
    const double f = evaluate_lexicon(current, dev_docs, dev_gold).macro_f;
    r.curve.push_back(f);
    if (f < r.macro_f) break;
    added = end;
    r.kept = end;
    r.macro_f = f;
    r.lexicon = current;
  }
  return r;
}

}  // namespace slg
