#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "slg/core/diagnostics.hpp"
#include "slg/core/polarity.hpp"
#include "slg/core/seed_set.hpp"
#include "slg/corpus/corpus.hpp"

namespace slg {

inline constexpr double kImbalanceRatio = 5.0;

/// Documents labeled by the seeds they contain, with class-conditional token
/// counts over the vocabulary of the corpus statistics.
class LabeledDocumentSet {
 public:
  /// Per document: positive, negative, or nullopt when discarded.
  const std::vector<std::optional<Polarity>>& labels() const noexcept { return labels_; }
  std::size_t count(Polarity p) const;
  /// Larger class size over smaller; infinite when one class is empty.
  double class_ratio() const;

  /// Tokens of `term` in documents of the class (positive or negative).
  std::uint64_t term_count(TermId term, Polarity p) const;
  /// Tokens in documents of the class.
  std::uint64_t class_tokens(Polarity p) const;
  /// Tokens in all labeled documents.
  std::uint64_t labeled_tokens() const noexcept { return class_tokens_[0] + class_tokens_[1]; }

  const CorpusStats& stats() const noexcept { return *stats_; }
  const SeedSet& seeds() const noexcept { return seeds_; }

  /// PMI of a term with a class over labeled documents. Throws
  /// OutOfVocabularyError for unknown terms.
  double pmi(std::string_view term, Polarity p, double epsilon = 0.5) const;
  double pmi(TermId term, Polarity p, double epsilon = 0.5) const;

 private:
  friend LabeledDocumentSet distant_label(std::span<const TokenizedDocument>, const CorpusStats&,
                                          const SeedSet&, Diagnostics*);

  const CorpusStats* stats_ = nullptr;
  SeedSet seeds_;
  std::vector<std::optional<Polarity>> labels_;
  std::array<std::size_t, 2> docs_{};
  std::array<std::uint64_t, 2> class_tokens_{};
  std::vector<std::array<std::uint64_t, 2>> term_counts_;
};

/// Polar seeds found in one document: literal seeds match lemma sequences,
/// patterns match token forms.
PolarityMask seed_hits(const TokenizedDocument& doc, const SeedSet& seeds);

/// A document with positive but no negative seeds is positive, and vice
/// versa; all others are discarded. Warns when the class ratio exceeds 5:1.
/// `stats` must outlive the result.
LabeledDocumentSet distant_label(std::span<const TokenizedDocument> docs, const CorpusStats& stats,
                                 const SeedSet& seeds, Diagnostics* diag = nullptr);

}  // namespace slg
