#include "slg/dict/params.hpp"

#include <cmath>
#include <cstdio>

#include "slg/core/error.hpp"

namespace slg {

std::string_view to_string(DictAlgorithm a) noexcept {
  switch (a) {
    case DictAlgorithm::hu_liu:
      return "hl";
    case DictAlgorithm::blair_goldensohn:
      return "bg";
    case DictAlgorithm::kim_hovy:
      return "kh";
    case DictAlgorithm::esuli_sebastiani:
      return "es";
    case DictAlgorithm::rao_mincut:
      return "mincut";
    case DictAlgorithm::rao_label_propagation:
      return "lblprop";
    case DictAlgorithm::awadallah_radwan:
      return "rndwalk";
  }
  return "hl";
}

std::optional<DictAlgorithm> parse_dict_algorithm(std::string_view s) noexcept {
  for (const auto a : kDictAlgorithms) {
    if (s == to_string(a)) return a;
  }
  if (s == "rr-mincut") return DictAlgorithm::rao_mincut;
  if (s == "rr-lblprop") return DictAlgorithm::rao_label_propagation;
  if (s == "ar") return DictAlgorithm::awadallah_radwan;
  return std::nullopt;
}

DictParams DictParams::defaults(DictAlgorithm a) {
  DictParams p;
  p.algorithm = a;
  switch (a) {
    case DictAlgorithm::esuli_sebastiani:
      p.max_iterations = 20;
      break;
    case DictAlgorithm::rao_label_propagation:
      p.max_iterations = 1000;
      p.threshold = 0.05;
      break;
    case DictAlgorithm::awadallah_radwan:
      p.threshold = 0.1;
      break;
    default:
      break;
  }
  return p;
}

void DictParams::validate() const {
  if (max_iterations < 1) throw ValidationError("max_iterations must be at least 1");
  if (!(threshold >= 0.0) || !std::isfinite(threshold)) {
    throw ValidationError("threshold must be a finite value >= 0");
  }
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
    throw ValidationError("tolerance must be a finite value > 0");
  }
  if (walks_per_node < 1) throw ValidationError("walks_per_node must be at least 1");
  if (max_walk_length < 1) throw ValidationError("max_walk_length must be at least 1");
  if (expansion_rounds < 1) throw ValidationError("expansion_rounds must be at least 1");
  if (priors) {
    double sum = 0.0;
    for (const double p : *priors) {
      if (!(p > 0.0) || !std::isfinite(p)) throw ValidationError("priors must be positive");
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw ValidationError("priors must sum to 1");
  }
}

std::string DictParams::describe() const {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "algorithm=%s max_iterations=%d threshold=%.17g tolerance=%.17g rng_seed=%llu "
                "walks_per_node=%d max_walk_length=%d expansion_rounds=%d",
                std::string(to_string(algorithm)).c_str(), max_iterations, threshold, tolerance,
                static_cast<unsigned long long>(rng_seed), walks_per_node, max_walk_length,
                expansion_rounds);
  std::string out = buf;
  if (priors) {
    std::snprintf(buf, sizeof buf, " priors=%.17g,%.17g,%.17g", (*priors)[0], (*priors)[1],
                  (*priors)[2]);
    out += buf;
  }
  return out;
}

}  // namespace slg
