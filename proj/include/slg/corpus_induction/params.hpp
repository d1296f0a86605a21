#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace slg {

enum class CorpusAlgorithm { takamura, velikovich, kiritchenko, severyn };

inline constexpr std::array<CorpusAlgorithm, 4> kCorpusAlgorithms{
    CorpusAlgorithm::takamura, CorpusAlgorithm::velikovich, CorpusAlgorithm::kiritchenko,
    CorpusAlgorithm::severyn};

/// tkm, vel, kir, sev.
std::string_view to_string(CorpusAlgorithm a) noexcept;
std::optional<CorpusAlgorithm> parse_corpus_algorithm(std::string_view s) noexcept;

struct CorpusParams {
  CorpusAlgorithm algorithm = CorpusAlgorithm::takamura;
  double beta = 1.0;
  int max_iterations = 100;
  double tolerance = 1e-9;
  int path_length = 3;           // T
  std::optional<double> gamma;   // mass ratio when unset
  std::size_t top_k = 0;         // per class, 0 keeps all
  double neutral_threshold = 0.05;
  std::uint64_t rng_seed = 1;
  double regularization = 1e-4;  // hinge classifier lambda

  static CorpusParams defaults(CorpusAlgorithm a);
  void validate() const;
  std::string describe() const;
};

}  // namespace slg
