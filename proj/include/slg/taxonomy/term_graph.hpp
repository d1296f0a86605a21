#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace slg {

using NodeId = std::uint32_t;

struct Neighbor {
  NodeId node;
  double weight;
};

struct WeightedEdge {
  NodeId u;
  NodeId v;  // u < v
  double weight;
};

/// Undirected graph over normalized terms with signed, non-zero edge weights
/// and at most one edge per unordered pair. Node ids follow term order.
/// Immutable once built.
class TermGraph {
 public:
  class Builder;

  TermGraph() = default;

  std::size_t node_count() const noexcept { return terms_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const std::string& term(NodeId id) const { return terms_.at(id); }
  const std::vector<std::string>& terms() const noexcept { return terms_; }
  std::optional<NodeId> find(std::string_view term) const;

  /// Neighbors sorted by node id.
  std::span<const Neighbor> neighbors(NodeId id) const { return adjacency_.at(id); }
  /// Weight of the edge between u and v, or 0 when there is none.
  double weight(NodeId u, NodeId v) const;
  /// Sum of absolute incident weights.
  double weighted_degree(NodeId id) const;

  /// Each edge once, sorted by (u, v).
  std::vector<WeightedEdge> edges() const;

  /// Sorted textual dump; equal graphs have equal canonical forms.
  std::string canonical_form() const;
  /// FNV-1a of canonical_form().
  std::uint64_t fingerprint() const;

 private:
  std::vector<std::string> terms_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// How add_edge resolves a second weight for the same pair.
enum class EdgeMerge {
  strongest,  // keep the largest |w|, negative on ties
  sum,        // add weights; a zero sum removes the edge
};

class TermGraph::Builder {
 public:
  explicit Builder(EdgeMerge merge = EdgeMerge::strongest) : merge_(merge) {}

  void add_node(std::string_view term);
  /// Adds both endpoints. Zero weights and self-loops are ignored.
  void add_edge(std::string_view u, std::string_view v, double weight);
  /// Copies every node and edge of another graph.
  void add_graph(const TermGraph& g);

  TermGraph build() const;

 private:
  std::uint32_t intern(std::string_view term);

  EdgeMerge merge_;
  std::vector<std::string> terms_;
  std::unordered_map<std::string, std::uint32_t> ids_;
  std::unordered_map<std::uint64_t, double> edges_;
};

}  // namespace slg
