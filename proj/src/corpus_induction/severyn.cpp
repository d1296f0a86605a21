#include <algorithm>
#include <cmath>
#include <map>

#include "detail.hpp"
#include "slg/core/error.hpp"
#include "slg/core/hinge_classifier.hpp"
#include "slg/corpus_induction/corpus_induction.hpp"

namespace slg {

RankedCandidates severyn(std::span<const TokenizedDocument> documents,
                         const LabeledDocumentSet& labeled, const CorpusParams& params,
                         Diagnostics* diag) {
  params.validate();
  detail::require_both_classes(labeled);
  if (documents.size() != labeled.labels().size()) {
    throw ValidationError("labeled set does not belong to these documents");
  }
  const auto& stats = labeled.stats();
  const auto& seeds = labeled.seeds();

  // in-vocabulary lemmas that are not seed terms
  auto usable = [&](const std::string& lemma) {
    return stats.contains(lemma) && !detail::is_seed_term(seeds, lemma);
  };
  std::map<std::string, std::uint64_t> frequency;
  for (std::size_t d = 0; d < documents.size(); ++d) {
    if (!labeled.labels()[d]) continue;
    const auto& toks = documents[d].tokens;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      if (!usable(toks[i].lemma)) continue;
      ++frequency[toks[i].lemma];
      if (i + 1 < toks.size() && usable(toks[i + 1].lemma)) {
        ++frequency[toks[i].lemma + " " + toks[i + 1].lemma];
      }
    }
  }
  std::map<std::string, std::uint32_t> index;
  std::vector<const std::string*> names;
  for (const auto& [f, c] : frequency) {
    const bool bigram = f.find(' ') != std::string::npos;
    if (bigram && c < stats.min_freq()) continue;
    const auto [it, _] = index.emplace(f, static_cast<std::uint32_t>(names.size()));
    names.push_back(&it->first);
  }

  std::vector<LabeledExample> examples;
  for (std::size_t d = 0; d < documents.size(); ++d) {
    const auto label = labeled.labels()[d];
    if (!label) continue;
    const auto& toks = documents[d].tokens;
    std::vector<std::uint32_t> ids;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      if (auto it = index.find(toks[i].lemma); it != index.end()) ids.push_back(it->second);
      if (i + 1 < toks.size()) {
        if (auto it = index.find(toks[i].lemma + " " + toks[i + 1].lemma); it != index.end()) {
          ids.push_back(it->second);
        }
      }
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    LabeledExample ex;
    ex.label = *label == Polarity::positive ? 1 : -1;
    for (const auto id : ids) ex.features.emplace_back(id, 1.0);
    examples.push_back(std::move(ex));
  }
  count(diag, "features", static_cast<long long>(names.size()));
  count(diag, "training_documents", static_cast<long long>(examples.size()));

  HingeOptions opt;
  opt.lambda = params.regularization;
  opt.epochs = params.max_iterations;
  opt.seed = params.rng_seed;
  const auto model = train_hinge(examples, names.size(), opt);

  double max_abs = 0.0;
  for (const double w : model.weights) max_abs = std::max(max_abs, std::abs(w));
  std::vector<LexiconEntry> out;
  if (max_abs > 0.0) {
    for (std::size_t f = 0; f < names.size(); ++f) {
      const double w = model.weights[f];
      const double score = std::abs(w) / max_abs;
      if (!(score > params.neutral_threshold)) continue;
      out.push_back({*names[f], w > 0.0 ? Polarity::positive : Polarity::negative, score});
    }
  }
  return rank_candidates(std::move(out), params.top_k, params.describe());
}

}  // namespace slg
