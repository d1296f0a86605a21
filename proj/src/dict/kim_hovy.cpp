#include <algorithm>
#include <cmath>

#include "common.hpp"
#include "slg/dict/dict_induction.hpp"

namespace slg {

namespace {

struct Bags {
  std::array<std::vector<bool>, 3> member;
  std::array<std::size_t, 3> size{};
};

Bags build_bags(const TermGraph& graph, const GraphSeeds& seeds) {
  Bags b;
  for (const auto p : kAllPolarities) {
    auto& m = b.member[index_of(p)];
    m.assign(graph.node_count(), false);
    for (const auto s : seeds.of(p)) {
      m[s] = true;
      for (const auto& nb : graph.neighbors(s)) {
        if (nb.weight > 0.0) m[nb.node] = true;
      }
    }
    b.size[index_of(p)] = static_cast<std::size_t>(std::count(m.begin(), m.end(), true));
  }
  return b;
}

std::array<double, 3> log_scores(const TermGraph& graph, const Bags& bags, NodeId node,
                                 const std::array<double, 3>& priors) {
  const double vocab = static_cast<double>(graph.node_count());
  std::array<double, 3> out{};
  for (std::size_t c = 0; c < 3; ++c) {
    double s = std::log(priors[c]);
    const double denom = static_cast<double>(bags.size[c]) + vocab;
    for (const auto& nb : graph.neighbors(node)) {
      if (nb.weight <= 0.0) continue;
      s += std::log((bags.member[c][nb.node] ? 2.0 : 1.0) / denom);
    }
    out[c] = s;
  }
  return out;
}

constexpr std::array<double, 3> kUniform{1.0 / 3, 1.0 / 3, 1.0 / 3};

}  // namespace

std::array<double, 3> kim_hovy_log_scores(const TermGraph& graph, const GraphSeeds& seeds,
                                          NodeId node, const std::array<double, 3>& priors) {
  return log_scores(graph, build_bags(graph, seeds), node, priors);
}

Lexicon kim_hovy(const TermGraph& graph, const SeedSet& seeds, const DictParams& params,
                 Diagnostics* diag) {
  params.validate();
  const auto gs = resolve_polar_seeds(graph, seeds, diag);
  const auto bags = build_bags(graph, gs);
  const auto priors = params.priors.value_or(kUniform);
  auto lex = detail::make_lexicon(params);
  for (NodeId n = 0; n < graph.node_count(); ++n) {
    if (gs.is_seed(n)) continue;
    const auto s = log_scores(graph, bags, n, priors);
    std::size_t best = 0;
    for (std::size_t c = 1; c < 3; ++c) {
      if (s[c] > s[best]) best = c;
    }
    const double top = s[best];
    double z = 0.0;
    bool tie = false;
    for (std::size_t c = 0; c < 3; ++c) {
      z += std::exp(s[c] - top);
      if (c != best && top - s[c] <= 1e-12 * std::max(1.0, std::abs(top))) tie = true;
    }
    const auto p = tie ? Polarity::neutral : kAllPolarities[best];
    lex.insert_or_assign({graph.term(n), p, 1.0 / z});
  }
  detail::add_seed_entries(lex, graph, gs);
  return lex;
}

}  // namespace slg
