#include "slg/corpus_induction/params.hpp"

#include <cmath>
#include <cstdio>

#include "slg/core/error.hpp"

namespace slg {

std::string_view to_string(CorpusAlgorithm a) noexcept {
  switch (a) {
    case CorpusAlgorithm::takamura:
      return "tkm";
    case CorpusAlgorithm::velikovich:
      return "vel";
    case CorpusAlgorithm::kiritchenko:
      return "kir";
    case CorpusAlgorithm::severyn:
      return "sev";
  }
  return "tkm";
}

std::optional<CorpusAlgorithm> parse_corpus_algorithm(std::string_view s) noexcept {
  for (const auto a : kCorpusAlgorithms) {
    if (s == to_string(a)) return a;
  }
  return std::nullopt;
}

CorpusParams CorpusParams::defaults(CorpusAlgorithm a) {
  CorpusParams p;
  p.algorithm = a;
  switch (a) {
    case CorpusAlgorithm::takamura:
      p.neutral_threshold = 0.05;
      break;
    case CorpusAlgorithm::velikovich:
      p.neutral_threshold = 0.01;
      break;
    case CorpusAlgorithm::kiritchenko:
      p.neutral_threshold = 0.1;
      break;
    case CorpusAlgorithm::severyn:
      p.neutral_threshold = 0.0;
      p.max_iterations = 10;
      break;
  }
  return p;
}

namespace {

void require_finite(double v, bool ok, const char* message) {
  if (!std::isfinite(v) || !ok) throw ValidationError(message);
}

}  // namespace

void CorpusParams::validate() const {
  require_finite(beta, beta >= 0.0, "beta must be a finite value >= 0");
  if (max_iterations < 1) throw ValidationError("max_iterations must be at least 1");
  require_finite(tolerance, tolerance > 0.0, "tolerance must be a finite value > 0");
  if (path_length < 1) throw ValidationError("path_length must be at least 1");
  if (gamma) require_finite(*gamma, *gamma > 0.0, "gamma must be a finite value > 0");
  require_finite(neutral_threshold, neutral_threshold >= 0.0,
                 "neutral_threshold must be a finite value >= 0");
  require_finite(regularization, regularization > 0.0, "regularization must be a finite value > 0");
}

std::string CorpusParams::describe() const {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "algorithm=%s beta=%.17g max_iterations=%d tolerance=%.17g path_length=%d "
                "top_k=%zu neutral_threshold=%.17g rng_seed=%llu regularization=%.17g",
                std::string(to_string(algorithm)).c_str(), beta, max_iterations, tolerance,
                path_length, top_k, neutral_threshold, static_cast<unsigned long long>(rng_seed),
                regularization);
  std::string out = buf;
  if (gamma) {
    std::snprintf(buf, sizeof buf, " gamma=%.17g", *gamma);
    out += buf;
  }
  return out;
}

}  // namespace slg
