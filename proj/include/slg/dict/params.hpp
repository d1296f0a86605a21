#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace slg {

enum class DictAlgorithm { hu_liu, blair_goldensohn, kim_hovy, esuli_sebastiani, rao_mincut,
                           rao_label_propagation, awadallah_radwan };

inline constexpr std::array<DictAlgorithm, 7> kDictAlgorithms{
    DictAlgorithm::hu_liu,           DictAlgorithm::blair_goldensohn,
    DictAlgorithm::kim_hovy,         DictAlgorithm::esuli_sebastiani,
    DictAlgorithm::rao_mincut,       DictAlgorithm::rao_label_propagation,
    DictAlgorithm::awadallah_radwan};

/// Short command-line ids: hl, bg, kh, es, mincut, lblprop, rndwalk.
/// rr-mincut, rr-lblprop and ar are accepted as aliases.
std::string_view to_string(DictAlgorithm a) noexcept;
std::optional<DictAlgorithm> parse_dict_algorithm(std::string_view s) noexcept;

struct DictParams {
  DictAlgorithm algorithm = DictAlgorithm::hu_liu;
  int max_iterations = 5;
  double threshold = 0.0;
  double tolerance = 1e-9;
  std::uint64_t rng_seed = 1;
  int walks_per_node = 100;
  int max_walk_length = 10;
  int expansion_rounds = 2;
  std::optional<std::array<double, 3>> priors;  // positive, negative, neutral

  /// Defaults tuned for each algorithm.
  static DictParams defaults(DictAlgorithm a);

  /// Throws ValidationError on out-of-range values.
  void validate() const;

  /// Space-separated key=value summary for lexicon provenance.
  std::string describe() const;
};

}  // namespace slg
