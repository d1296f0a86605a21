#pragma once

#include <cstddef>
#include <limits>
#include <vector>

namespace slg {

inline constexpr double kInfiniteCapacity = std::numeric_limits<double>::infinity();

/// Directed capacity network solved with Dinic's algorithm.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes);

  std::size_t node_count() const noexcept { return head_.size(); }
  void add_arc(std::size_t from, std::size_t to, double capacity);
  /// Two opposite arcs of the same capacity.
  void add_edge(std::size_t u, std::size_t v, double capacity);

  /// Maximum s-t flow. Returns +inf when an infinite-capacity path exists.
  double max_flow(std::size_t source, std::size_t sink);

  /// After max_flow: nodes reachable from the source in the residual
  /// network. This is the source side of the minimal minimum cut.
  std::vector<bool> source_side(std::size_t source) const;

 private:
  struct Arc {
    std::size_t to;
    std::size_t next;
    double residual;
  };

  bool build_levels(std::size_t s, std::size_t t);
  double push(std::size_t u, std::size_t t, double limit);
  double epsilon() const noexcept;

  std::vector<std::size_t> head_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
  double max_capacity_ = 0.0;
};

}  // namespace slg
