#include "slg/core/seed_set.hpp"

#include <algorithm>

#include "slg/core/error.hpp"
#include "slg/core/term.hpp"

namespace slg {

std::optional<Polarity> PolarityMask::unique() const noexcept {
  const int n = int(positive) + int(negative) + int(neutral);
  if (n != 1) return std::nullopt;
  if (positive) return Polarity::positive;
  if (negative) return Polarity::negative;
  return Polarity::neutral;
}

void PolarityMask::set(Polarity p) noexcept {
  switch (p) {
    case Polarity::positive:
      positive = true;
      break;
    case Polarity::negative:
      negative = true;
      break;
    case Polarity::neutral:
      neutral = true;
      break;
  }
}

SeedSet::SeedSet(std::vector<SeedEntry> entries) : entries_(std::move(entries)) {
  bool polar = false;
  for (auto& e : entries_) {
    polar = polar || is_polar(e.polarity);
    if (e.kind == SeedKind::literal) {
      e.text = normalize_term(e.text);
      literal_index_.emplace_back(e.text, e.polarity);
    } else {
      if (e.text.empty()) throw ValidationError("empty seed pattern");
      try {
        patterns_.push_back({std::regex(e.text, std::regex::ECMAScript), e.polarity});
      } catch (const std::regex_error& err) {
        throw ValidationError("invalid seed pattern '" + e.text + "': " + err.what());
      }
    }
  }
  if (!polar) throw ValidationError("seed set has no positive or negative entry");

  std::sort(literal_index_.begin(), literal_index_.end());
  literal_index_.erase(std::unique(literal_index_.begin(), literal_index_.end()),
                       literal_index_.end());
  for (std::size_t i = 1; i < literal_index_.size(); ++i) {
    if (literal_index_[i].first == literal_index_[i - 1].first) {
      throw ValidationError("seed term '" + literal_index_[i].first +
                            "' listed with two polarities");
    }
  }
}

std::optional<Polarity> SeedSet::literal(std::string_view normalized_term) const {
  auto it = std::lower_bound(
      literal_index_.begin(), literal_index_.end(), normalized_term,
      [](const auto& kv, std::string_view t) { return std::string_view(kv.first) < t; });
  if (it == literal_index_.end() || it->first != normalized_term) return std::nullopt;
  return it->second;
}

std::vector<std::string> SeedSet::literals(Polarity p) const {
  std::vector<std::string> out;
  for (const auto& [term, pol] : literal_index_) {
    if (pol == p) out.push_back(term);
  }
  return out;
}

PolarityMask SeedSet::match_patterns(std::string_view token) const {
  PolarityMask mask;
  for (const auto& p : patterns_) {
    if (std::regex_match(token.begin(), token.end(), p.regex)) mask.set(p.polarity);
  }
  return mask;
}

SeedSet SeedSet::swapped() const {
  auto copy = entries_;
  for (auto& e : copy) e.polarity = flip(e.polarity);
  return SeedSet(std::move(copy));
}

Lexicon SeedSet::to_lexicon() const {
  Lexicon lex("seeds");
  for (const auto& [term, pol] : literal_index_) lex.insert({term, pol, 1.0});
  return lex;
}

}  // namespace slg
