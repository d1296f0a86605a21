#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace slg {

struct Token {
  std::string form;   // verbatim
  std::string lemma;  // normalized
};

struct TokenizedDocument {
  std::string id;
  std::vector<Token> tokens;
};

/// Vertical format: `#doc <id>` starts a document, one `form<TAB>lemma` line
/// per token, a blank line ends the document.
std::vector<TokenizedDocument> read_documents(std::istream& in, const std::string& source = "corpus");
void write_documents(std::ostream& out, const std::vector<TokenizedDocument>& docs);

using TermId = std::uint32_t;

/// Lemma frequencies over a corpus. Only lemmas seen at least min_freq times
/// form the vocabulary; tf and df are kept for vocabulary terms.
class CorpusStats {
 public:
  CorpusStats() = default;
  CorpusStats(const std::vector<TokenizedDocument>& docs, std::uint64_t min_freq);

  std::uint64_t token_count() const noexcept { return n_tokens_; }
  std::uint64_t document_count() const noexcept { return n_docs_; }
  std::uint64_t min_freq() const noexcept { return min_freq_; }

  /// Sorted vocabulary; TermId indexes it.
  const std::vector<std::string>& vocabulary() const noexcept { return vocab_; }
  std::optional<TermId> id(std::string_view term) const;
  bool contains(std::string_view term) const { return id(term).has_value(); }
  const std::string& term(TermId id) const { return vocab_.at(id); }

  /// Counts for vocabulary terms, 0 otherwise.
  std::uint64_t tf(std::string_view term) const;
  std::uint64_t df(std::string_view term) const;
  std::uint64_t tf(TermId id) const { return tf_.at(id); }
  std::uint64_t df(TermId id) const { return df_.at(id); }

 private:
  std::uint64_t n_tokens_ = 0;
  std::uint64_t n_docs_ = 0;
  std::uint64_t min_freq_ = 1;
  std::vector<std::string> vocab_;
  std::vector<std::uint64_t> tf_;
  std::vector<std::uint64_t> df_;
  std::unordered_map<std::string, TermId> ids_;
};

struct Corpus {
  std::vector<TokenizedDocument> documents;
  CorpusStats stats;
};

/// Throws ParseError on malformed lines and EmptyCorpusError when no token
/// is read.
Corpus load_corpus(const std::filesystem::path& path, std::uint64_t min_freq = 4);
Corpus read_corpus(std::istream& in, std::uint64_t min_freq = 4, const std::string& source = "corpus");

}  // namespace slg
