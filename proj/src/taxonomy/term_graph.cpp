#include "slg/taxonomy/term_graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace slg {

namespace {

std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) noexcept {
  if (a > b) std::swap(a, b);
  return (std::uint64_t{a} << 32) | b;
}

}  // namespace

std::optional<NodeId> TermGraph::find(std::string_view term) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), term,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == terms_.end() || *it != term) return std::nullopt;
  return static_cast<NodeId>(it - terms_.begin());
}

double TermGraph::weight(NodeId u, NodeId v) const {
  const auto& adj = adjacency_.at(u);
  auto it = std::lower_bound(adj.begin(), adj.end(), v,
                             [](const Neighbor& n, NodeId id) { return n.node < id; });
  return it != adj.end() && it->node == v ? it->weight : 0.0;
}

double TermGraph::weighted_degree(NodeId id) const {
  double d = 0.0;
  for (const auto& n : adjacency_.at(id)) d += std::abs(n.weight);
  return d;
}

std::vector<WeightedEdge> TermGraph::edges() const {
  std::vector<WeightedEdge> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < adjacency_.size(); ++u) {
    for (const auto& n : adjacency_[u]) {
      if (u < n.node) out.push_back({u, n.node, n.weight});
    }
  }
  return out;
}

std::string TermGraph::canonical_form() const {
  std::string out;
  for (const auto& t : terms_) {
    out += "N\t";
    out += t;
    out += '\n';
  }
  char buf[64];
  for (const auto& e : edges()) {
    std::snprintf(buf, sizeof buf, "%.17g", e.weight);
    out += "E\t" + terms_[e.u] + '\t' + terms_[e.v] + '\t' + buf + '\n';
  }
  return out;
}

std::uint64_t TermGraph::fingerprint() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (const unsigned char c : canonical_form()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint32_t TermGraph::Builder::intern(std::string_view term) {
  auto [it, fresh] = ids_.try_emplace(std::string(term), static_cast<std::uint32_t>(terms_.size()));
  if (fresh) terms_.emplace_back(term);
  return it->second;
}

void TermGraph::Builder::add_node(std::string_view term) { intern(term); }

void TermGraph::Builder::add_edge(std::string_view u, std::string_view v, double weight) {
  const auto a = intern(u);
  const auto b = intern(v);
  if (a == b || weight == 0.0) return;
  auto [it, fresh] = edges_.try_emplace(pair_key(a, b), weight);
  if (fresh) return;
  double& cur = it->second;
  if (merge_ == EdgeMerge::sum) {
    cur += weight;
  } else if (std::abs(weight) > std::abs(cur) ||
             (std::abs(weight) == std::abs(cur) && weight < 0.0)) {
    cur = weight;
  }
}

void TermGraph::Builder::add_graph(const TermGraph& g) {
  for (const auto& t : g.terms()) add_node(t);
  for (const auto& e : g.edges()) add_edge(g.term(e.u), g.term(e.v), e.weight);
}

TermGraph TermGraph::Builder::build() const {
  std::vector<std::uint32_t> order(terms_.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return terms_[a] < terms_[b]; });
  std::vector<NodeId> remap(terms_.size());
  TermGraph g;
  g.terms_.reserve(terms_.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    remap[order[i]] = static_cast<NodeId>(i);
    g.terms_.push_back(terms_[order[i]]);
  }
  g.adjacency_.resize(terms_.size());
  for (const auto& [key, w] : edges_) {
    if (w == 0.0) continue;
    const auto a = remap[static_cast<std::uint32_t>(key >> 32)];
    const auto b = remap[static_cast<std::uint32_t>(key & 0xffffffffu)];
    g.adjacency_[a].push_back({b, w});
    g.adjacency_[b].push_back({a, w});
    ++g.edge_count_;
  }
  for (auto& adj : g.adjacency_) {
    std::sort(adj.begin(), adj.end(),
              [](const Neighbor& x, const Neighbor& y) { return x.node < y.node; });
  }
  return g;
}

}  // namespace slg
