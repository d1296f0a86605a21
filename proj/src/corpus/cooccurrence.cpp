#include "slg/corpus/cooccurrence.hpp"

#include <algorithm>
#include <cmath>

#include "slg/core/error.hpp"

namespace slg {

namespace {

std::uint64_t pair_key(TermId a, TermId b) noexcept {
  if (a > b) std::swap(a, b);
  return (std::uint64_t{a} << 32) | b;
}

std::vector<std::optional<TermId>> term_ids(const TokenizedDocument& doc, const CorpusStats& stats) {
  std::vector<std::optional<TermId>> ids;
  ids.reserve(doc.tokens.size());
  for (const auto& t : doc.tokens) ids.push_back(stats.id(t.lemma));
  return ids;
}

}  // namespace

double pmi_value(double joint, double a, double b, double total, double epsilon) {
  return std::log2((joint + epsilon) * total / ((a + epsilon) * (b + epsilon)));
}

void CooccurrenceOptions::validate() const {
  if (window < 1) throw ValidationError("window must be at least 1");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw ValidationError("epsilon must be positive");
}

CooccurrenceCounts::CooccurrenceCounts(std::span<const TokenizedDocument> docs,
                                       const CorpusStats& stats, const CooccurrenceOptions& options)
    : stats_(&stats), epsilon_(options.epsilon) {
  options.validate();
  for (const auto& doc : docs) {
    const auto ids = term_ids(doc, stats);
    const auto n = ids.size();
    if (options.source == PairSource::window) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!ids[i]) continue;
        for (std::size_t j = i + 1; j < n && j - i <= options.window; ++j) {
          if (ids[j] && *ids[j] != *ids[i]) ++counts_[pair_key(*ids[i], *ids[j])];
        }
      }
    } else {
      for (std::size_t i = 1; i + 1 < n; ++i) {
        const auto& lemma = doc.tokens[i].lemma;
        if (std::find(options.conjunctions.begin(), options.conjunctions.end(), lemma) ==
            options.conjunctions.end()) {
          continue;
        }
        if (ids[i - 1] && ids[i + 1] && *ids[i - 1] != *ids[i + 1]) {
          ++counts_[pair_key(*ids[i - 1], *ids[i + 1])];
        }
      }
    }
  }
}

std::uint64_t CooccurrenceCounts::count(TermId a, TermId b) const {
  auto it = counts_.find(pair_key(a, b));
  return it == counts_.end() ? 0 : it->second;
}

std::uint64_t CooccurrenceCounts::count(std::string_view a, std::string_view b) const {
  const auto x = stats_->id(a);
  const auto y = stats_->id(b);
  return x && y ? count(*x, *y) : 0;
}

std::vector<std::tuple<TermId, TermId, std::uint64_t>> CooccurrenceCounts::pairs() const {
  std::vector<std::tuple<TermId, TermId, std::uint64_t>> out;
  out.reserve(counts_.size());
  for (const auto& [key, c] : counts_) {
    out.emplace_back(static_cast<TermId>(key >> 32), static_cast<TermId>(key & 0xffffffffu), c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double CooccurrenceCounts::pmi(std::string_view a, std::string_view b) const {
  const auto x = stats_->id(a);
  if (!x) throw OutOfVocabularyError("term '" + std::string(a) + "' is not in the vocabulary");
  const auto y = stats_->id(b);
  if (!y) throw OutOfVocabularyError("term '" + std::string(b) + "' is not in the vocabulary");
  return pmi_value(static_cast<double>(count(*x, *y)), static_cast<double>(stats_->tf(*x)),
                   static_cast<double>(stats_->tf(*y)), static_cast<double>(stats_->token_count()),
                   epsilon_);
}

TermGraph build_cooccurrence_graph(std::span<const TokenizedDocument> docs, const CorpusStats& stats,
                                   const CooccurrenceOptions& options) {
  const CooccurrenceCounts counts(docs, stats, options);
  const auto pairs = counts.pairs();
  std::vector<double> raw(pairs.size());
  double max = 0.0;
  const auto total = static_cast<double>(stats.token_count());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& [a, b, c] = pairs[k];
    raw[k] = options.weighting == EdgeWeighting::pmi
                 ? pmi_value(static_cast<double>(c), static_cast<double>(stats.tf(a)),
                             static_cast<double>(stats.tf(b)), total, options.epsilon)
                 : static_cast<double>(c);
    max = std::max(max, raw[k]);
  }
  TermGraph::Builder builder;
  for (const auto& t : stats.vocabulary()) builder.add_node(t);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (raw[k] <= 0.0) continue;
    const auto& [a, b, c] = pairs[k];
    builder.add_edge(stats.term(a), stats.term(b), raw[k] / max);
  }
  return builder.build();
}

TermGraph merge_graphs(const TermGraph& a, const TermGraph& b) {
  TermGraph::Builder builder(EdgeMerge::strongest);
  builder.add_graph(a);
  builder.add_graph(b);
  return builder.build();
}

}  // namespace slg
