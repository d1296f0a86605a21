#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "slg/taxonomy/term_graph.hpp"

namespace slg {

enum class PartOfSpeech { noun, verb, adjective, other };
enum class RelationKind { antonym, hypernym, hyponym, similar, related };

std::string_view to_string(PartOfSpeech pos) noexcept;
std::string_view to_string(RelationKind kind) noexcept;
std::optional<PartOfSpeech> parse_part_of_speech(std::string_view s) noexcept;
std::optional<RelationKind> parse_relation_kind(std::string_view s) noexcept;

struct Synset {
  std::string id;
  PartOfSpeech pos = PartOfSpeech::other;
  std::vector<std::string> lemmas;  // normalized, unique, file order
  std::optional<std::string> gloss;
};

struct RelationEdge {
  std::string src;
  std::string dst;
  RelationKind kind;
};

/// WordNet-style database: synsets, typed relations, and a lemma index.
class LexicalGraph {
 public:
  /// Validates ids, lemma lists and relation endpoints.
  LexicalGraph(std::vector<Synset> synsets, std::vector<RelationEdge> edges);

  const std::map<std::string, Synset, std::less<>>& synsets() const noexcept { return synsets_; }
  const std::vector<RelationEdge>& edges() const noexcept { return edges_; }
  const Synset* find(std::string_view id) const;

  /// term -> ids of synsets listing it
  const std::map<std::string, std::set<std::string>, std::less<>>& lemma_index() const noexcept {
    return lemma_index_;
  }

  /// Glosses of all synsets containing the term.
  std::vector<std::string_view> glosses_of(std::string_view term) const;

 private:
  std::map<std::string, Synset, std::less<>> synsets_;
  std::vector<RelationEdge> edges_;
  std::map<std::string, std::set<std::string>, std::less<>> lemma_index_;
};

/// `synsets.tsv`: id<TAB>pos<TAB>lemma1|lemma2|...[<TAB>gloss]
/// `relations.tsv`: src<TAB>kind<TAB>dst
LexicalGraph read_taxonomy(std::istream& synsets, std::istream& relations,
                           const std::string& synset_source = "synsets.tsv",
                           const std::string& relation_source = "relations.tsv");
LexicalGraph load_taxonomy(const std::filesystem::path& synset_file,
                           const std::filesystem::path& relation_file);
/// Reads `synsets.tsv` and `relations.tsv` from a directory.
LexicalGraph load_taxonomy_dir(const std::filesystem::path& dir);

/// Weight given to each way two lemmas can be linked.
struct EdgePolicy {
  double comembership = 1.0;
  double similar = 0.8;
  double hypernym = 0.3;
  double hyponym = 0.3;
  double related = 0.2;
  double antonym = -1.0;

  double weight(RelationKind kind) const noexcept;
  /// Throws InvalidPolicyError unless antonym is in [-1, 0), co-membership in
  /// (0, 1] and every other kind in [0, 1]. A zero weight drops the kind.
  void validate() const;
};

/// Lemma-level graph: co-members of a synset and lemma pairs across every
/// relation edge are linked; among several derivations of one pair the
/// largest |w| wins, negative on ties.
TermGraph derive_term_graph(const LexicalGraph& graph, const EdgePolicy& policy = {});

}  // namespace slg
