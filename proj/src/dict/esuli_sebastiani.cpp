#include <algorithm>
#include <cmath>
#include <map>

#include "common.hpp"
#include "slg/core/error.hpp"
#include "slg/core/hinge_classifier.hpp"
#include "slg/core/random.hpp"
#include "slg/core/term.hpp"
#include "slg/dict/dict_induction.hpp"

namespace slg {

namespace {

std::string_view strip_punctuation(std::string_view w) {
  constexpr std::string_view punct = ".,;:!?()[]\"'«»„“”-";
  while (!w.empty() && punct.find(w.front()) != std::string_view::npos) w.remove_prefix(1);
  while (!w.empty() && punct.find(w.back()) != std::string_view::npos) w.remove_suffix(1);
  return w;
}

class FeatureSpace {
 public:
  std::uint32_t id(const std::string& f) {
    auto [it, fresh] = ids_.try_emplace(f, static_cast<std::uint32_t>(ids_.size()));
    return it->second;
  }
  std::size_t size() const noexcept { return ids_.size(); }

 private:
  std::map<std::string, std::uint32_t> ids_;
};

/// Unit-length bag of gloss words and neighbor terms.
SparseVector term_features(const LexicalGraph& taxonomy, const TermGraph& graph, NodeId n,
                           FeatureSpace& space) {
  std::map<std::uint32_t, double> counts;
  for (const auto gloss : taxonomy.glosses_of(graph.term(n))) {
    for (const auto& w : split_words(try_normalize_term(gloss))) {
      const auto t = strip_punctuation(w);
      if (!t.empty()) counts[space.id("g:" + std::string(t))] += 1.0;
    }
  }
  for (const auto& nb : graph.neighbors(n)) counts[space.id("n:" + graph.term(nb.node))] += 1.0;
  double norm = 0.0;
  for (const auto& [_, v] : counts) norm += v * v;
  norm = std::sqrt(norm);
  SparseVector out(counts.begin(), counts.end());
  for (auto& [_, v] : out) v /= norm;
  return out;
}

struct Centroid {
  std::vector<double> values;
  double norm = 0.0;

  double cosine(const SparseVector& x) const {
    if (norm == 0.0 || x.empty()) return 0.0;
    double dot = 0.0;
    for (const auto& [i, v] : x) {
      if (i < values.size()) dot += values[i] * v;
    }
    return dot / norm;
  }
};

Centroid centroid_of(const std::vector<const SparseVector*>& members, std::size_t dims) {
  Centroid c;
  c.values.assign(dims, 0.0);
  if (members.empty()) return c;
  for (const auto* m : members) {
    for (const auto& [i, v] : *m) c.values[i] += v;
  }
  double sq = 0.0;
  for (auto& v : c.values) {
    v /= static_cast<double>(members.size());
    sq += v * v;
  }
  c.norm = std::sqrt(sq);
  return c;
}

Polarity member_vote(double f_pos, double f_neg) {
  if (f_pos > 0.0 && f_neg <= 0.0) return Polarity::positive;
  if (f_neg > 0.0 && f_pos <= 0.0) return Polarity::negative;
  return Polarity::neutral;
}

}  // namespace

std::vector<std::optional<Polarity>> expand_seed_sets(const TermGraph& graph,
                                                      const GraphSeeds& seeds, int rounds) {
  std::vector<std::optional<Polarity>> label = seeds.label;
  std::vector<bool> dropped(graph.node_count(), false);
  std::vector<NodeId> frontier;
  for (NodeId n = 0; n < graph.node_count(); ++n) {
    if (label[n]) frontier.push_back(n);
  }
  for (int r = 0; r < rounds && !frontier.empty(); ++r) {
    std::map<NodeId, PolarityMask> reached;
    for (const auto u : frontier) {
      const auto p = *label[u];
      for (const auto& nb : graph.neighbors(u)) {
        if (label[nb.node] || dropped[nb.node]) continue;
        if (nb.weight > 0.0) {
          reached[nb.node].set(p);
        } else if (is_polar(p)) {
          reached[nb.node].set(flip(p));
        }
      }
    }
    frontier.clear();
    for (const auto& [node, mask] : reached) {
      if (const auto p = mask.unique()) {
        label[node] = *p;
        frontier.push_back(node);
      } else {
        dropped[node] = true;
      }
    }
  }
  return label;
}

Polarity resolve_committee(Polarity first, Polarity second,
                           const std::array<double, 3>& centroid_distance) {
  if (first == second) return first;
  const double a = centroid_distance[index_of(first)];
  const double b = centroid_distance[index_of(second)];
  if (a < b) return first;
  if (b < a) return second;
  return Polarity::neutral;
}

Lexicon esuli_sebastiani(const LexicalGraph& taxonomy, const TermGraph& graph,
                         const SeedSet& seeds, const DictParams& params, Diagnostics* diag) {
  params.validate();
  const auto gs = resolve_polar_seeds(graph, seeds, diag);
  const auto train = expand_seed_sets(graph, gs, params.expansion_rounds);

  FeatureSpace space;
  std::vector<SparseVector> x(graph.node_count());
  for (NodeId n = 0; n < graph.node_count(); ++n) x[n] = term_features(taxonomy, graph, n, space);
  const auto dims = space.size();

  std::array<std::vector<const SparseVector*>, 3> by_class;
  std::size_t informative = 0, training = 0;
  for (NodeId n = 0; n < graph.node_count(); ++n) {
    if (!train[n]) continue;
    ++training;
    by_class[index_of(*train[n])].push_back(&x[n]);
    if (!x[n].empty()) ++informative;
  }
  if (informative == 0) throw DegenerateFeaturesError("every training term has an empty feature vector");
  count(diag, "training_terms", static_cast<long long>(training));

  std::size_t relevant = 0, glossed = 0;
  for (const auto& [_, s] : taxonomy.synsets()) {
    const bool candidate = std::any_of(s.lemmas.begin(), s.lemmas.end(), [&](const auto& l) {
      const auto id = graph.find(l);
      return id && !gs.is_seed(*id);
    });
    if (!candidate) continue;
    ++relevant;
    if (s.gloss) ++glossed;
  }
  if (relevant > 0 && 2 * glossed < relevant) {
    warn(diag, "glosses available for only " + std::to_string(glossed) + " of " +
                   std::to_string(relevant) + " candidate synsets");
  }

  std::array<Centroid, 3> centroid;
  for (std::size_t c = 0; c < 3; ++c) centroid[c] = centroid_of(by_class[c], dims);

  // Tasks: positive-vs-rest and negative-vs-rest.
  constexpr std::array<Polarity, 2> tasks{Polarity::positive, Polarity::negative};
  std::array<Centroid, 2> rest;
  std::array<LinearModel, 2> svm;
  for (std::size_t t = 0; t < 2; ++t) {
    std::vector<const SparseVector*> others;
    std::vector<LabeledExample> examples;
    for (NodeId n = 0; n < graph.node_count(); ++n) {
      if (!train[n]) continue;
      const bool yes = *train[n] == tasks[t];
      if (!yes) others.push_back(&x[n]);
      examples.push_back({x[n], yes ? 1 : -1});
    }
    rest[t] = centroid_of(others, dims);
    HingeOptions opt;
    opt.epochs = params.max_iterations;
    opt.seed = mix_seed(params.rng_seed, t);
    svm[t] = train_hinge(examples, dims, opt);
  }

  struct Outcome {
    NodeId node;
    Polarity polarity;
    double margin;
  };
  std::vector<Outcome> outcomes;
  for (NodeId n = 0; n < graph.node_count(); ++n) {
    if (gs.is_seed(n)) continue;
    std::array<double, 2> rocchio{}, linear{};
    for (std::size_t t = 0; t < 2; ++t) {
      rocchio[t] = centroid[index_of(tasks[t])].cosine(x[n]) - rest[t].cosine(x[n]);
      linear[t] = svm[t].decision(x[n]);
    }
    std::array<double, 3> distance{};
    for (std::size_t c = 0; c < 3; ++c) distance[c] = 1.0 - centroid[c].cosine(x[n]);
    const auto p = resolve_committee(member_vote(rocchio[0], rocchio[1]),
                                     member_vote(linear[0], linear[1]), distance);
    const double margin =
        0.5 * (std::abs(rocchio[0] - rocchio[1]) + std::abs(linear[0] - linear[1]));
    outcomes.push_back({n, p, margin});
  }

  auto lex = detail::make_lexicon(params);
  double lo = 0.0, hi = 0.0;
  if (!outcomes.empty()) {
    const auto [mn, mx] = std::minmax_element(
        outcomes.begin(), outcomes.end(),
        [](const Outcome& a, const Outcome& b) { return a.margin < b.margin; });
    lo = mn->margin;
    hi = mx->margin;
  }
  for (const auto& o : outcomes) {
    const double score = hi > lo ? (o.margin - lo) / (hi - lo) : 1.0;
    lex.insert_or_assign({graph.term(o.node), o.polarity, score});
  }
  detail::add_seed_entries(lex, graph, gs);
  return lex;
}

}  // namespace slg
