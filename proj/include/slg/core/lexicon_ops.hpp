#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "slg/core/lexicon.hpp"
#include "slg/core/seed_set.hpp"

namespace slg {

/// Every term of every input. Conflicting polarities resolve to the entry
/// with the highest score; when the highest-scoring entries disagree on
/// polarity the term becomes neutral at that score.
Lexicon lexicon_union(std::span<const Lexicon> lexicons);

/// Terms present in every input with the same polarity, scored by the
/// minimum input score.
Lexicon lexicon_intersection(std::span<const Lexicon> lexicons);

/// First k entries in (score desc, term asc) order, optionally restricted to
/// one polarity and skipping literal seed terms.
std::vector<LexiconEntry> top_k(const Lexicon& lexicon, std::size_t k,
                                std::optional<Polarity> polarity = std::nullopt,
                                const SeedSet* exclude = nullptr);

}  // namespace slg
