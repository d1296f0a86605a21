#include "slg/core/hinge_classifier.hpp"

#include <algorithm>
#include <numeric>

#include "slg/core/error.hpp"
#include "slg/core/random.hpp"

namespace slg {

double LinearModel::decision(const SparseVector& x) const noexcept {
  double s = bias;
  for (const auto& [i, v] : x) {
    if (i < weights.size()) s += weights[i] * v;
  }
  return s;
}

LinearModel train_hinge(std::span<const LabeledExample> examples, std::size_t dimensions,
                        const HingeOptions& options) {
  if (options.lambda <= 0.0) throw ValidationError("hinge lambda must be > 0");
  if (options.epochs < 1) throw ValidationError("hinge epochs must be >= 1");

  // w = scale * v keeps the shrink step O(1) for sparse inputs.
  std::vector<double> v(dimensions, 0.0);
  double scale = 1.0;
  double bias = 0.0;
  const double eta0 = std::min(1.0, 0.5 / options.lambda);

  std::vector<std::size_t> order(examples.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(options.seed);
  std::size_t t = 0;

  for (int epoch = 0; epoch < options.epochs; ++epoch) {
    rng.shuffle(order.begin(), order.end());
    for (const auto idx : order) {
      const auto& ex = examples[idx];
      const double eta = eta0 / (1.0 + eta0 * options.lambda * static_cast<double>(t));
      ++t;
      double dot = 0.0;
      for (const auto& [i, x] : ex.features) dot += v[i] * x;
      const double y = ex.label > 0 ? 1.0 : -1.0;
      const double margin = y * (scale * dot + bias);

      scale *= 1.0 - eta * options.lambda;
      if (margin < 1.0) {
        const double step = eta * y / scale;
        for (const auto& [i, x] : ex.features) v[i] += step * x;
        bias += eta * y;
      }
      if (scale < 1e-9) {
        for (auto& w : v) w *= scale;
        scale = 1.0;
      }
    }
  }

  LinearModel model;
  model.weights.resize(dimensions);
  for (std::size_t i = 0; i < dimensions; ++i) model.weights[i] = scale * v[i];
  model.bias = bias;
  return model;
}

}  // namespace slg
