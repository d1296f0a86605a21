#include "slg/core/lexicon.hpp"

#include <algorithm>
#include <cmath>

#include "slg/core/error.hpp"
#include "slg/core/term.hpp"

namespace slg {

namespace {

LexiconEntry validated(LexiconEntry entry) {
  entry.term = normalize_term(entry.term);
  if (!std::isfinite(entry.score) || entry.score < 0.0) {
    throw ValidationError("score of '" + entry.term + "' must be finite and >= 0");
  }
  return entry;
}

}  // namespace

bool ranks_before(const LexiconEntry& a, const LexiconEntry& b) noexcept {
  if (a.score != b.score) return a.score > b.score;
  return a.term < b.term;
}

void Lexicon::insert_or_assign(LexiconEntry entry) {
  auto e = validated(std::move(entry));
  auto key = e.term;
  entries_.insert_or_assign(std::move(key), std::move(e));
}

bool Lexicon::insert(LexiconEntry entry) {
  auto e = validated(std::move(entry));
  auto key = e.term;
  return entries_.try_emplace(std::move(key), std::move(e)).second;
}

const LexiconEntry* Lexicon::find(std::string_view term) const {
  auto it = entries_.find(term);
  return it == entries_.end() ? nullptr : &it->second;
}

std::size_t Lexicon::count(Polarity p) const noexcept {
  return static_cast<std::size_t>(std::count_if(
      entries_.begin(), entries_.end(), [p](const auto& kv) { return kv.second.polarity == p; }));
}

std::vector<LexiconEntry> Lexicon::ranked() const {
  std::vector<LexiconEntry> out;
  out.reserve(entries_.size());
  for (const auto& [_, e] : entries_) out.push_back(e);
  std::sort(out.begin(), out.end(), ranks_before);
  return out;
}

}  // namespace slg
