#include "slg/corpus/distant_label.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <unordered_map>

#include "slg/core/error.hpp"
#include "slg/core/term.hpp"
#include "slg/corpus/cooccurrence.hpp"

namespace slg {

namespace {

struct LiteralSeed {
  std::vector<std::string> words;
  Polarity polarity;
};

class SeedMatcher {
 public:
  explicit SeedMatcher(const SeedSet& seeds) : seeds_(seeds) {
    for (const auto& e : seeds.entries()) {
      if (e.kind != SeedKind::literal || !is_polar(e.polarity)) continue;
      auto words = split_words(e.text);
      const auto first = words.front();
      by_first_[first].push_back({std::move(words), e.polarity});
    }
  }

  PolarityMask hits(const TokenizedDocument& doc) {
    PolarityMask m;
    const auto& t = doc.tokens;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (auto it = by_first_.find(t[i].lemma); it != by_first_.end()) {
        for (const auto& s : it->second) {
          if (i + s.words.size() > t.size()) continue;
          bool match = true;
          for (std::size_t k = 1; k < s.words.size() && match; ++k) match = t[i + k].lemma == s.words[k];
          if (match) m.set(s.polarity);
        }
      }
      if (seeds_.has_patterns()) {
        auto [it, fresh] = pattern_cache_.try_emplace(t[i].form);
        if (fresh) it->second = seeds_.match_patterns(t[i].form);
        if (it->second.positive) m.positive = true;
        if (it->second.negative) m.negative = true;
      }
    }
    return m;
  }

 private:
  const SeedSet& seeds_;
  std::unordered_map<std::string, std::vector<LiteralSeed>> by_first_;
  std::unordered_map<std::string, PolarityMask> pattern_cache_;
};

std::size_t slot(Polarity p) {
  if (!is_polar(p)) throw ValidationError("class must be positive or negative");
  return p == Polarity::positive ? 0 : 1;
}

}  // namespace

std::size_t LabeledDocumentSet::count(Polarity p) const { return docs_[slot(p)]; }

double LabeledDocumentSet::class_ratio() const {
  const auto hi = std::max(docs_[0], docs_[1]);
  const auto lo = std::min(docs_[0], docs_[1]);
  if (lo == 0) return hi == 0 ? 1.0 : std::numeric_limits<double>::infinity();
  return static_cast<double>(hi) / static_cast<double>(lo);
}

std::uint64_t LabeledDocumentSet::term_count(TermId term, Polarity p) const {
  return term_counts_.at(term)[slot(p)];
}

std::uint64_t LabeledDocumentSet::class_tokens(Polarity p) const { return class_tokens_[slot(p)]; }

double LabeledDocumentSet::pmi(TermId term, Polarity p, double epsilon) const {
  const auto& c = term_counts_.at(term);
  return pmi_value(static_cast<double>(c[slot(p)]), static_cast<double>(c[0] + c[1]),
                   static_cast<double>(class_tokens(p)), static_cast<double>(labeled_tokens()),
                   epsilon);
}

double LabeledDocumentSet::pmi(std::string_view term, Polarity p, double epsilon) const {
  const auto id = stats_->id(term);
  if (!id) throw OutOfVocabularyError("term '" + std::string(term) + "' is not in the vocabulary");
  return pmi(*id, p, epsilon);
}

PolarityMask seed_hits(const TokenizedDocument& doc, const SeedSet& seeds) {
  return SeedMatcher(seeds).hits(doc);
}

LabeledDocumentSet distant_label(std::span<const TokenizedDocument> docs, const CorpusStats& stats,
                                 const SeedSet& seeds, Diagnostics* diag) {
  if (seeds.empty()) throw ValidationError("distant labeling needs a non-empty seed set");
  LabeledDocumentSet out;
  out.stats_ = &stats;
  out.seeds_ = seeds;
  out.term_counts_.assign(stats.vocabulary().size(), {0, 0});
  out.labels_.reserve(docs.size());
  SeedMatcher matcher(seeds);
  for (const auto& doc : docs) {
    const auto m = matcher.hits(doc);
    std::optional<Polarity> label;
    if (m.positive && !m.negative) label = Polarity::positive;
    if (m.negative && !m.positive) label = Polarity::negative;
    out.labels_.push_back(label);
    if (!label) continue;
    const auto s = slot(*label);
    ++out.docs_[s];
    out.class_tokens_[s] += doc.tokens.size();
    for (const auto& t : doc.tokens) {
      if (const auto id = stats.id(t.lemma)) ++out.term_counts_[*id][s];
    }
  }
  const auto pos = static_cast<long long>(out.docs_[0]);
  const auto neg = static_cast<long long>(out.docs_[1]);
  count(diag, "labeled_positive", pos);
  count(diag, "labeled_negative", neg);
  count(diag, "discarded", static_cast<long long>(docs.size()) - pos - neg);
  const double ratio = out.class_ratio();
  char buf[64];
  if (std::isfinite(ratio)) {
    std::snprintf(buf, sizeof buf, "%.4g:1", ratio);
  } else {
    std::snprintf(buf, sizeof buf, "%lld:%lld", pos, neg);
  }
  if (diag) diag->count("class_ratio", buf);
  if (ratio > kImbalanceRatio) {
    warn(diag, std::string("distant labels are imbalanced (") + buf + " " +
                   (pos > neg ? "positive:negative" : "negative:positive") + ")");
  }
  return out;
}

}  // namespace slg
