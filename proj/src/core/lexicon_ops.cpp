#include "slg/core/lexicon_ops.hpp"

#include <algorithm>

#include "slg/core/error.hpp"

namespace slg {

namespace {

std::string joined_provenance(std::string_view op, std::span<const Lexicon> lexicons) {
  std::string out(op);
  out += '(';
  for (std::size_t i = 0; i < lexicons.size(); ++i) {
    if (i) out += ", ";
    out += lexicons[i].provenance().empty() ? "?" : lexicons[i].provenance();
  }
  out += ')';
  return out;
}

}  // namespace

Lexicon lexicon_union(std::span<const Lexicon> lexicons) {
  if (lexicons.empty()) throw ValidationError("union needs at least one lexicon");
  Lexicon out(joined_provenance("union", lexicons));
  Lexicon::Map merged;
  for (const auto& lex : lexicons) {
    for (const auto& [term, e] : lex.entries()) {
      auto [it, fresh] = merged.try_emplace(term, e);
      if (fresh) continue;
      auto& cur = it->second;
      if (e.score > cur.score) {
        cur = e;
      } else if (e.score == cur.score && e.polarity != cur.polarity) {
        cur.polarity = Polarity::neutral;
      }
    }
  }
  for (auto& [_, e] : merged) out.insert(std::move(e));
  return out;
}

Lexicon lexicon_intersection(std::span<const Lexicon> lexicons) {
  if (lexicons.empty()) throw ValidationError("intersection needs at least one lexicon");
  Lexicon out(joined_provenance("intersection", lexicons));
  for (const auto& [term, first] : lexicons.front().entries()) {
    LexiconEntry e = first;
    bool keep = true;
    for (std::size_t i = 1; i < lexicons.size() && keep; ++i) {
      const auto* other = lexicons[i].find(term);
      if (other == nullptr || other->polarity != e.polarity) {
        keep = false;
      } else {
        e.score = std::min(e.score, other->score);
      }
    }
    if (keep) out.insert(std::move(e));
  }
  return out;
}

std::vector<LexiconEntry> top_k(const Lexicon& lexicon, std::size_t k,
                                std::optional<Polarity> polarity, const SeedSet* exclude) {
  if (k == 0) throw ValidationError("top_k needs k >= 1");
  std::vector<LexiconEntry> out;
  for (auto& e : lexicon.ranked()) {
    if (out.size() == k) break;
    if (polarity && e.polarity != *polarity) continue;
    if (exclude != nullptr && exclude->is_literal_seed(e.term)) continue;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace slg
