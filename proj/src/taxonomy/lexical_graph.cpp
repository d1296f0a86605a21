#include "slg/taxonomy/lexical_graph.hpp"

#include <algorithm>
#include <istream>

#include "slg/core/error.hpp"
#include "slg/core/term.hpp"
#include "slg/core/text_io.hpp"

namespace slg {

std::string_view to_string(PartOfSpeech pos) noexcept {
  switch (pos) {
    case PartOfSpeech::noun:
      return "noun";
    case PartOfSpeech::verb:
      return "verb";
    case PartOfSpeech::adjective:
      return "adjective";
    case PartOfSpeech::other:
      return "other";
  }
  return "other";
}

std::string_view to_string(RelationKind kind) noexcept {
  switch (kind) {
    case RelationKind::antonym:
      return "antonym";
    case RelationKind::hypernym:
      return "hypernym";
    case RelationKind::hyponym:
      return "hyponym";
    case RelationKind::similar:
      return "similar";
    case RelationKind::related:
      return "related";
  }
  return "related";
}

std::optional<PartOfSpeech> parse_part_of_speech(std::string_view s) noexcept {
  for (auto p : {PartOfSpeech::noun, PartOfSpeech::verb, PartOfSpeech::adjective,
                 PartOfSpeech::other}) {
    if (s == to_string(p)) return p;
  }
  return std::nullopt;
}

std::optional<RelationKind> parse_relation_kind(std::string_view s) noexcept {
  for (auto k : {RelationKind::antonym, RelationKind::hypernym, RelationKind::hyponym,
                 RelationKind::similar, RelationKind::related}) {
    if (s == to_string(k)) return k;
  }
  return std::nullopt;
}

LexicalGraph::LexicalGraph(std::vector<Synset> synsets, std::vector<RelationEdge> edges)
    : edges_(std::move(edges)) {
  for (auto& s : synsets) {
    if (s.id.empty()) throw ValidationError("synset with empty id");
    if (s.lemmas.empty()) throw ValidationError("synset '" + s.id + "' has no lemmas");
    std::vector<std::string> unique;
    for (const auto& l : s.lemmas) {
      auto n = normalize_term(l);
      if (std::find(unique.begin(), unique.end(), n) == unique.end()) unique.push_back(std::move(n));
    }
    s.lemmas = std::move(unique);
    for (const auto& l : s.lemmas) lemma_index_[l].insert(s.id);
    auto id = s.id;
    if (!synsets_.try_emplace(std::move(id), std::move(s)).second) {
      throw ValidationError("duplicate synset id '" + id + "'");
    }
  }
  for (const auto& e : edges_) {
    for (const auto* id : {&e.src, &e.dst}) {
      if (!synsets_.contains(*id)) {
        throw ReferentialIntegrityError("relation references unknown synset id '" + *id + "'");
      }
    }
    if (e.kind == RelationKind::antonym && e.src == e.dst) {
      throw ValidationError("antonym self-loop on synset '" + e.src + "'");
    }
  }
}

const Synset* LexicalGraph::find(std::string_view id) const {
  auto it = synsets_.find(id);
  return it == synsets_.end() ? nullptr : &it->second;
}

std::vector<std::string_view> LexicalGraph::glosses_of(std::string_view term) const {
  std::vector<std::string_view> out;
  auto it = lemma_index_.find(term);
  if (it == lemma_index_.end()) return out;
  for (const auto& id : it->second) {
    const auto& s = synsets_.at(id);
    if (s.gloss) out.emplace_back(*s.gloss);
  }
  return out;
}

LexicalGraph read_taxonomy(std::istream& synset_in, std::istream& relation_in,
                           const std::string& synset_source, const std::string& relation_source) {
  std::vector<Synset> synsets;
  std::set<std::string, std::less<>> ids;
  {
    LineReader reader(synset_in, synset_source);
    std::string line;
    while (reader.next(line)) {
      if (is_comment_or_blank(line)) continue;
      const auto f = split_tabs(line);
      if (f.size() < 3 || f.size() > 4) reader.fail("expected id<TAB>pos<TAB>lemmas[<TAB>gloss]");
      Synset s;
      s.id = std::string(f[0]);
      if (s.id.empty()) reader.fail("empty synset id");
      if (!ids.insert(s.id).second) reader.fail("duplicate synset id '" + s.id + "'");
      const auto pos = parse_part_of_speech(f[1]);
      if (!pos) reader.fail("unknown part of speech '" + std::string(f[1]) + "'");
      s.pos = *pos;
      std::string_view lemmas = f[2];
      std::size_t start = 0;
      while (start <= lemmas.size()) {
        const auto bar = lemmas.find('|', start);
        const auto piece =
            lemmas.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
        auto n = try_normalize_term(piece);
        if (n.empty()) reader.fail("empty or invalid lemma in synset '" + s.id + "'");
        s.lemmas.push_back(std::move(n));
        if (bar == std::string_view::npos) break;
        start = bar + 1;
      }
      if (f.size() == 4 && !f[3].empty()) s.gloss = std::string(f[3]);
      synsets.push_back(std::move(s));
    }
  }
  std::vector<RelationEdge> edges;
  {
    LineReader reader(relation_in, relation_source);
    std::string line;
    while (reader.next(line)) {
      if (is_comment_or_blank(line)) continue;
      const auto f = split_tabs(line);
      if (f.size() != 3) reader.fail("expected src<TAB>kind<TAB>dst");
      const auto kind = parse_relation_kind(f[1]);
      if (!kind) reader.fail("unknown relation kind '" + std::string(f[1]) + "'");
      for (const auto id : {f[0], f[2]}) {
        if (!ids.contains(id)) {
          throw ReferentialIntegrityError(relation_source + ":" +
                                          std::to_string(reader.line_number()) +
                                          ": unknown synset id '" + std::string(id) + "'");
        }
      }
      if (*kind == RelationKind::antonym && f[0] == f[2]) reader.fail("antonym self-loop");
      edges.push_back({std::string(f[0]), std::string(f[2]), *kind});
    }
  }
  return LexicalGraph(std::move(synsets), std::move(edges));
}

LexicalGraph load_taxonomy(const std::filesystem::path& synset_file,
                           const std::filesystem::path& relation_file) {
  auto s = open_input(synset_file);
  auto r = open_input(relation_file);
  return read_taxonomy(s, r, synset_file.string(), relation_file.string());
}

LexicalGraph load_taxonomy_dir(const std::filesystem::path& dir) {
  return load_taxonomy(dir / "synsets.tsv", dir / "relations.tsv");
}

double EdgePolicy::weight(RelationKind kind) const noexcept {
  switch (kind) {
    case RelationKind::antonym:
      return antonym;
    case RelationKind::hypernym:
      return hypernym;
    case RelationKind::hyponym:
      return hyponym;
    case RelationKind::similar:
      return similar;
    case RelationKind::related:
      return related;
  }
  return 0.0;
}

void EdgePolicy::validate() const {
  if (!(antonym >= -1.0 && antonym < 0.0)) {
    throw InvalidPolicyError("antonym weight must lie in [-1, 0)");
  }
  if (!(comembership > 0.0 && comembership <= 1.0)) {
    throw InvalidPolicyError("co-membership weight must lie in (0, 1]");
  }
  for (const double w : {similar, hypernym, hyponym, related}) {
    if (!(w >= 0.0 && w <= 1.0)) {
      throw InvalidPolicyError("similar/hypernym/hyponym/related weights must lie in [0, 1]");
    }
  }
}

TermGraph derive_term_graph(const LexicalGraph& graph, const EdgePolicy& policy) {
  policy.validate();
  TermGraph::Builder b(EdgeMerge::strongest);
  for (const auto& [_, s] : graph.synsets()) {
    for (const auto& l : s.lemmas) b.add_node(l);
    for (std::size_t i = 0; i < s.lemmas.size(); ++i) {
      for (std::size_t j = i + 1; j < s.lemmas.size(); ++j) {
        b.add_edge(s.lemmas[i], s.lemmas[j], policy.comembership);
      }
    }
  }
  for (const auto& e : graph.edges()) {
    const double w = policy.weight(e.kind);
    if (w == 0.0) continue;
    const auto& src = graph.synsets().at(e.src);
    const auto& dst = graph.synsets().at(e.dst);
    for (const auto& a : src.lemmas) {
      for (const auto& c : dst.lemmas) b.add_edge(a, c, w);
    }
  }
  return b.build();
}

}  // namespace slg
