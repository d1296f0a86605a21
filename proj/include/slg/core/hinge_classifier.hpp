#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace slg {

/// (feature index, value) pairs with unique indices.
using SparseVector = std::vector<std::pair<std::uint32_t, double>>;

struct LabeledExample {
  SparseVector features;
  int label = 1;  // +1 or -1
};

struct HingeOptions {
  double lambda = 1e-4;  // L2 regularization strength
  int epochs = 10;
  std::uint64_t seed = 1;
};

struct LinearModel {
  std::vector<double> weights;
  double bias = 0.0;

  double decision(const SparseVector& x) const noexcept;
};

/// Soft-margin linear classifier trained by stochastic subgradient descent on
/// the L2-regularized hinge loss. The example order of each epoch is a seeded
/// shuffle, so the model is a pure function of (examples, options).
/// Negating every label negates the model exactly.
LinearModel train_hinge(std::span<const LabeledExample> examples, std::size_t dimensions,
                        const HingeOptions& options);

}  // namespace slg
