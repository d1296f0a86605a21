#include "slg/corpus/corpus.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "slg/core/error.hpp"
#include "slg/core/term.hpp"
#include "slg/core/text_io.hpp"

namespace slg {

namespace {
constexpr std::string_view kHeader = "#doc ";
}

std::vector<TokenizedDocument> read_documents(std::istream& in, const std::string& source) {
  std::vector<TokenizedDocument> docs;
  LineReader reader(in, source);
  std::string line;
  bool open = false;
  auto close = [&] {
    if (open && docs.back().tokens.empty()) reader.fail("document '" + docs.back().id + "' has no tokens");
    open = false;
  };
  while (reader.next(line)) {
    if (line.empty()) {
      close();
      continue;
    }
    if (line.starts_with(kHeader) && line.find('\t') == std::string::npos) {
      close();
      auto id = line.substr(kHeader.size());
      if (id.empty()) reader.fail("empty document id");
      docs.push_back({std::move(id), {}});
      open = true;
      continue;
    }
    const auto f = split_tabs(line);
    if (f.size() != 2) reader.fail("expected form<TAB>lemma");
    if (!open) reader.fail("token outside a document");
    if (f[0].empty()) reader.fail("empty token form");
    auto lemma = try_normalize_term(f[1]);
    if (lemma.empty()) reader.fail("empty or invalid lemma");
    docs.back().tokens.push_back({std::string(f[0]), std::move(lemma)});
  }
  close();
  return docs;
}

void write_documents(std::ostream& out, const std::vector<TokenizedDocument>& docs) {
  for (const auto& d : docs) {
    out << kHeader << d.id << '\n';
    for (const auto& t : d.tokens) out << t.form << '\t' << t.lemma << '\n';
    out << '\n';
  }
}

CorpusStats::CorpusStats(const std::vector<TokenizedDocument>& docs, std::uint64_t min_freq)
    : min_freq_(min_freq) {
  if (min_freq < 1) throw ValidationError("min_freq must be at least 1");
  struct Raw {
    std::uint64_t tf = 0;
    std::uint64_t df = 0;
    std::size_t last_doc = static_cast<std::size_t>(-1);
  };
  std::unordered_map<std::string_view, Raw> raw;
  for (std::size_t d = 0; d < docs.size(); ++d) {
    ++n_docs_;
    for (const auto& t : docs[d].tokens) {
      ++n_tokens_;
      auto& r = raw[t.lemma];
      ++r.tf;
      if (r.last_doc != d) {
        r.last_doc = d;
        ++r.df;
      }
    }
  }
  for (const auto& [term, r] : raw) {
    if (r.tf >= min_freq) vocab_.emplace_back(term);
  }
  std::sort(vocab_.begin(), vocab_.end());
  tf_.reserve(vocab_.size());
  df_.reserve(vocab_.size());
  ids_.reserve(vocab_.size());
  for (TermId i = 0; i < vocab_.size(); ++i) {
    const auto& r = raw.at(vocab_[i]);
    tf_.push_back(r.tf);
    df_.push_back(r.df);
    ids_.emplace(vocab_[i], i);
  }
}

std::optional<TermId> CorpusStats::id(std::string_view term) const {
  auto it = ids_.find(std::string(term));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::uint64_t CorpusStats::tf(std::string_view term) const {
  const auto i = id(term);
  return i ? tf_[*i] : 0;
}

std::uint64_t CorpusStats::df(std::string_view term) const {
  const auto i = id(term);
  return i ? df_[*i] : 0;
}

Corpus read_corpus(std::istream& in, std::uint64_t min_freq, const std::string& source) {
  Corpus c;
  c.documents = read_documents(in, source);
  if (c.documents.empty()) throw EmptyCorpusError(source + ": corpus contains no documents");
  c.stats = CorpusStats(c.documents, min_freq);
  return c;
}

Corpus load_corpus(const std::filesystem::path& path, std::uint64_t min_freq) {
  auto in = open_input(path);
  return read_corpus(in, min_freq, path.string());
}

}  // namespace slg
