#pragma once

#include <array>
#include <optional>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "slg/core/lexicon.hpp"
#include "slg/eval/gold.hpp"
#include "slg/eval/match.hpp"

namespace slg {

struct ClassScores {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f = 0.0;

  friend bool operator==(const ClassScores&, const ClassScores&) = default;
};

/// Positive and negative are scored on exact spans, neutral and micro on
/// tokens.
struct EvalReport {
  std::array<ClassScores, 3> classes;  // polarity order
  double macro_f = 0.0;
  double micro_f = 0.0;
  std::uint64_t tokens = 0;
  std::uint64_t correct_tokens = 0;

  const ClassScores& operator[](Polarity p) const { return classes[index_of(p)]; }
  friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

/// Fills precision, recall and F from the counts; a zero denominator gives 0.
void finish_scores(ClassScores& s);

EvalReport evaluate(std::span<const MatchSpan> matches, std::span<const GoldAnnotation> gold,
                    std::span<const TokenizedDocument> docs);

/// Builds the trie, matches and evaluates.
EvalReport evaluate_lexicon(const Lexicon& lexicon, std::span<const TokenizedDocument> docs,
                            std::span<const GoldAnnotation> gold);

/// Lexicon without entries lacking alphabetic characters.
Lexicon drop_nonalphabetic(const Lexicon& lexicon);

enum class ReportFormat { text, json, csv_row };
std::optional<ReportFormat> parse_report_format(std::string_view s) noexcept;

inline constexpr std::string_view kScoringNote =
    "positive/negative: exact span and polarity; neutral and micro: token level";

nlohmann::json report_to_json(const EvalReport& r);
EvalReport report_from_json(const nlohmann::json& j);

/// Column names matching format_report(csv_row).
std::string csv_header();
/// text: table with three decimals; json: counts and scores; csv-row: one
/// comma-separated line.
std::string format_report(const EvalReport& r, ReportFormat format, std::string_view label = "lexicon");

}  // namespace slg
