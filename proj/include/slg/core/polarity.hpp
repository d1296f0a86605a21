#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace slg {

enum class Polarity { positive, negative, neutral };

inline constexpr std::array<Polarity, 3> kAllPolarities{Polarity::positive, Polarity::negative,
                                                        Polarity::neutral};

constexpr std::string_view to_string(Polarity p) noexcept {
  switch (p) {
    case Polarity::positive:
      return "positive";
    case Polarity::negative:
      return "negative";
    case Polarity::neutral:
      return "neutral";
  }
  return "neutral";
}

constexpr std::optional<Polarity> parse_polarity(std::string_view s) noexcept {
  if (s == "positive") return Polarity::positive;
  if (s == "negative") return Polarity::negative;
  if (s == "neutral") return Polarity::neutral;
  return std::nullopt;
}

constexpr bool is_polar(Polarity p) noexcept { return p != Polarity::neutral; }

/// Swaps positive and negative; neutral is a fixed point.
constexpr Polarity flip(Polarity p) noexcept {
  switch (p) {
    case Polarity::positive:
      return Polarity::negative;
    case Polarity::negative:
      return Polarity::positive;
    case Polarity::neutral:
      return Polarity::neutral;
  }
  return p;
}

constexpr std::size_t index_of(Polarity p) noexcept { return static_cast<std::size_t>(p); }

}  // namespace slg
