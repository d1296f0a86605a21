#include "slg/eval/match.hpp"

#include "slg/core/term.hpp"

namespace slg {

std::string_view to_string(MatchChannel c) noexcept {
  switch (c) {
    case MatchChannel::form:
      return "form";
    case MatchChannel::lemma:
      return "lemma";
    case MatchChannel::mixed:
      return "mixed";
  }
  return "form";
}

MatchTrie::MatchTrie(const Lexicon& lexicon) : nodes_(1) {
  for (const auto& [term, entry] : lexicon.entries()) {
    const auto words = split_words(term);
    std::uint32_t at = 0;
    for (const auto& w : words) {
      auto it = nodes_[at].children.find(w);
      if (it == nodes_[at].children.end()) {
        const auto id = static_cast<std::uint32_t>(nodes_.size());
        nodes_[at].children.emplace(w, id);
        nodes_.emplace_back();
        at = id;
      } else {
        at = it->second;
      }
    }
    if (!nodes_[at].entry) ++entries_;
    nodes_[at].entry = entry;
    depth_ = std::max(depth_, words.size());
  }
}

const LexiconEntry* MatchTrie::find(std::span<const std::string> words) const {
  std::uint32_t at = 0;
  for (const auto& raw : words) {
    const auto& children = nodes_[at].children;
    auto it = children.find(try_normalize_term(raw));
    if (it == children.end()) return nullptr;
    at = it->second;
  }
  return nodes_[at].entry ? &*nodes_[at].entry : nullptr;
}

namespace {

struct Best {
  std::size_t length = 0;
  const LexiconEntry* entry = nullptr;
  bool used_form = false;
  bool used_lemma = false;
};

class Scanner {
 public:
  Scanner(const MatchTrie& trie, const std::vector<std::string>& forms,
          const std::vector<std::string>& lemmas)
      : trie_(trie), forms_(forms), lemmas_(lemmas) {}

  Best longest_at(std::size_t start) {
    best_ = {};
    walk(0, start, start, false, false);
    return best_;
  }

 private:
  void walk(std::uint32_t node, std::size_t start, std::size_t pos, bool form, bool lemma) {
    const auto& n = trie_.node(node);
    if (pos > start && n.entry && pos - start > best_.length) {
      best_ = {pos - start, &*n.entry, form, lemma};
    }
    if (pos >= forms_.size() || n.children.empty()) return;
    const auto& f = forms_[pos];
    const auto& l = lemmas_[pos];
    if (auto it = n.children.find(f); it != n.children.end()) {
      walk(it->second, start, pos + 1, true, lemma);
    }
    if (l != f) {
      if (auto it = n.children.find(l); it != n.children.end()) {
        walk(it->second, start, pos + 1, form, true);
      }
    }
  }

  const MatchTrie& trie_;
  const std::vector<std::string>& forms_;
  const std::vector<std::string>& lemmas_;
  Best best_;
};

}  // namespace

std::vector<MatchSpan> match_corpus(const MatchTrie& trie, std::span<const TokenizedDocument> docs) {
  std::vector<MatchSpan> out;
  if (trie.entry_count() == 0) return out;
  std::vector<std::string> forms, lemmas;
  for (std::size_t d = 0; d < docs.size(); ++d) {
    const auto& tokens = docs[d].tokens;
    forms.clear();
    lemmas.clear();
    for (const auto& t : tokens) {
      forms.push_back(try_normalize_term(t.form));
      lemmas.push_back(t.lemma);
    }
    Scanner scan(trie, forms, lemmas);
    std::size_t i = 0;
    while (i < tokens.size()) {
      const auto best = scan.longest_at(i);
      if (best.length == 0) {
        ++i;
        continue;
      }
      const auto channel = best.used_form && best.used_lemma ? MatchChannel::mixed
                           : best.used_form                 ? MatchChannel::form
                                                            : MatchChannel::lemma;
      out.push_back({d, i, i + best.length, best.entry->polarity, best.entry->term, channel});
      i += best.length;
    }
  }
  return out;
}

}  // namespace slg
