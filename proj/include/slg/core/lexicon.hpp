#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "slg/core/polarity.hpp"

namespace slg {

/// One lexicon line. The score is a non-negative confidence whose scale
/// depends on the producing algorithm; the sign lives in `polarity`.
struct LexiconEntry {
  std::string term;
  Polarity polarity = Polarity::neutral;
  double score = 0.0;

  friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

/// Orders entries by score descending, then term ascending.
bool ranks_before(const LexiconEntry& a, const LexiconEntry& b) noexcept;

/// Term -> entry map with at most one entry per normalized term.
class Lexicon {
 public:
  using Map = std::map<std::string, LexiconEntry, std::less<>>;

  Lexicon() = default;
  explicit Lexicon(std::string provenance) : provenance_(std::move(provenance)) {}

  /// Normalizes the term and validates the score; replaces any previous
  /// entry for the same term.
  void insert_or_assign(LexiconEntry entry);

  /// Like insert_or_assign but keeps an existing entry. Returns true when
  /// the entry was added.
  bool insert(LexiconEntry entry);

  const LexiconEntry* find(std::string_view term) const;
  bool contains(std::string_view term) const { return find(term) != nullptr; }

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t count(Polarity p) const noexcept;

  /// Entries in term order.
  const Map& entries() const noexcept { return entries_; }

  /// Entries in (score desc, term asc) order.
  std::vector<LexiconEntry> ranked() const;

  const std::string& provenance() const noexcept { return provenance_; }
  void set_provenance(std::string p) { provenance_ = std::move(p); }

  /// Compares entries only; provenance is a label.
  bool same_entries(const Lexicon& other) const { return entries_ == other.entries_; }

 private:
  Map entries_;
  std::string provenance_;
};

}  // namespace slg
