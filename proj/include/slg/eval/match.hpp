#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slg/core/lexicon.hpp"
#include "slg/corpus/corpus.hpp"

namespace slg {

/// Which token fields satisfied the steps of a match.
enum class MatchChannel { form, lemma, mixed };
std::string_view to_string(MatchChannel c) noexcept;

/// Word-level trie over normalized lexicon entries.
class MatchTrie {
 public:
  struct Node {
    std::map<std::string, std::uint32_t, std::less<>> children;
    std::optional<LexiconEntry> entry;
  };

  explicit MatchTrie(const Lexicon& lexicon);

  const Node& root() const noexcept { return nodes_.front(); }
  const Node& node(std::uint32_t id) const { return nodes_.at(id); }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t entry_count() const noexcept { return entries_; }
  /// Length of the longest entry in words.
  std::size_t depth() const noexcept { return depth_; }

  /// Entry stored for an exact word sequence; words are normalized first.
  const LexiconEntry* find(std::span<const std::string> words) const;

 private:
  std::vector<Node> nodes_;
  std::size_t entries_ = 0;
  std::size_t depth_ = 0;
};

struct MatchSpan {
  std::size_t doc = 0;  // index into the document list
  std::size_t start = 0;
  std::size_t end = 0;  // exclusive
  Polarity polarity = Polarity::neutral;
  std::string term;
  MatchChannel channel = MatchChannel::form;

  friend bool operator==(const MatchSpan&, const MatchSpan&) = default;
};

/// Greedy left-to-right longest-match scan. Each step may follow the token's
/// normalized form or its lemma. Among matches of equal length the one found
/// first (form before lemma at every step) wins. Spans never overlap.
std::vector<MatchSpan> match_corpus(const MatchTrie& trie, std::span<const TokenizedDocument> docs);

}  // namespace slg
