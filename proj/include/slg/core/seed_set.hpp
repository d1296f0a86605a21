#pragma once

#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "slg/core/lexicon.hpp"
#include "slg/core/polarity.hpp"

namespace slg {

enum class SeedKind { literal, pattern };

struct SeedEntry {
  std::string text;  // normalized term, or the raw regular expression
  Polarity polarity = Polarity::neutral;
  SeedKind kind = SeedKind::literal;
};

/// Which polarities matched a token.
struct PolarityMask {
  bool positive = false;
  bool negative = false;
  bool neutral = false;

  bool any() const noexcept { return positive || negative || neutral; }
  /// The single polarity matched, if exactly one did.
  std::optional<Polarity> unique() const noexcept;
  void set(Polarity p) noexcept;
};

/// Labeled starting terms. Literal terms are normalized; patterns are
/// ECMAScript regular expressions matched against a whole token.
class SeedSet {
 public:
  SeedSet() = default;
  /// Throws ValidationError for invalid patterns, a literal listed with two
  /// polarities, or a set without any polar entry.
  explicit SeedSet(std::vector<SeedEntry> entries);

  const std::vector<SeedEntry>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }

  /// Polarity of a literal seed term, if present.
  std::optional<Polarity> literal(std::string_view normalized_term) const;
  bool is_literal_seed(std::string_view normalized_term) const {
    return literal(normalized_term).has_value();
  }

  /// Literal seeds of one class, in term order.
  std::vector<std::string> literals(Polarity p) const;

  /// Patterns matching the token (regex_match on the raw token).
  PolarityMask match_patterns(std::string_view token) const;
  bool has_patterns() const noexcept { return !patterns_.empty(); }

  /// Same entries with positive and negative swapped.
  SeedSet swapped() const;

  /// Literal entries as a lexicon with score 1.
  Lexicon to_lexicon() const;

 private:
  struct CompiledPattern {
    std::regex regex;
    Polarity polarity;
  };

  std::vector<SeedEntry> entries_;
  std::vector<std::pair<std::string, Polarity>> literal_index_;  // sorted by term
  std::vector<CompiledPattern> patterns_;
};

}  // namespace slg
