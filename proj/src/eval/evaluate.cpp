#include "slg/eval/evaluate.hpp"

#include <cstdio>
#include <map>
#include <set>
#include <tuple>

#include "slg/core/error.hpp"
#include "slg/core/term.hpp"

namespace slg {

void finish_scores(ClassScores& s) {
  const auto tp = static_cast<double>(s.tp);
  s.precision = s.tp + s.fp == 0 ? 0.0 : tp / static_cast<double>(s.tp + s.fp);
  s.recall = s.tp + s.fn == 0 ? 0.0 : tp / static_cast<double>(s.tp + s.fn);
  s.f = s.precision + s.recall == 0.0 ? 0.0
                                      : 2.0 * s.precision * s.recall / (s.precision + s.recall);
}

EvalReport evaluate(std::span<const MatchSpan> matches, std::span<const GoldAnnotation> gold,
                    std::span<const TokenizedDocument> docs) {
  validate_gold(gold, docs);
  std::map<std::string_view, std::size_t> index;
  for (std::size_t d = 0; d < docs.size(); ++d) index.emplace(docs[d].id, d);

  std::vector<std::vector<Polarity>> gold_class(docs.size()), pred_class(docs.size());
  for (std::size_t d = 0; d < docs.size(); ++d) {
    gold_class[d].assign(docs[d].tokens.size(), Polarity::neutral);
    pred_class[d].assign(docs[d].tokens.size(), Polarity::neutral);
  }
  using Key = std::tuple<std::size_t, std::size_t, std::size_t, Polarity>;
  std::set<Key> gold_spans;
  for (const auto& g : gold) {
    const auto d = index.at(g.doc_id);
    gold_spans.emplace(d, g.start, g.end, g.polarity);
    for (auto i = g.start; i < g.end; ++i) gold_class[d][i] = g.polarity;
  }

  EvalReport r;
  for (const auto& m : matches) {
    if (!is_polar(m.polarity)) continue;
    if (m.doc >= docs.size() || m.end > docs[m.doc].tokens.size() || m.start >= m.end) {
      throw ValidationError("match span outside its document");
    }
    auto& s = r.classes[index_of(m.polarity)];
    if (gold_spans.contains({m.doc, m.start, m.end, m.polarity})) {
      ++s.tp;
    } else {
      ++s.fp;
    }
    for (auto i = m.start; i < m.end; ++i) pred_class[m.doc][i] = m.polarity;
  }
  for (const auto& g : gold) ++r.classes[index_of(g.polarity)].fn;
  for (const auto p : {Polarity::positive, Polarity::negative}) {
    auto& s = r.classes[index_of(p)];
    s.fn -= s.tp;
  }

  auto& neu = r.classes[index_of(Polarity::neutral)];
  for (std::size_t d = 0; d < docs.size(); ++d) {
    for (std::size_t i = 0; i < gold_class[d].size(); ++i) {
      const auto g = gold_class[d][i];
      const auto p = pred_class[d][i];
      ++r.tokens;
      if (g == p) ++r.correct_tokens;
      const bool gn = g == Polarity::neutral;
      const bool pn = p == Polarity::neutral;
      if (gn && pn) ++neu.tp;
      if (!gn && pn) ++neu.fp;
      if (gn && !pn) ++neu.fn;
    }
  }
  double sum = 0.0;
  for (auto& s : r.classes) {
    finish_scores(s);
    sum += s.f;
  }
  r.macro_f = sum / 3.0;
  r.micro_f = r.tokens == 0 ? 0.0 : static_cast<double>(r.correct_tokens) / static_cast<double>(r.tokens);
  return r;
}

EvalReport evaluate_lexicon(const Lexicon& lexicon, std::span<const TokenizedDocument> docs,
                            std::span<const GoldAnnotation> gold) {
  const MatchTrie trie(lexicon);
  const auto matches = match_corpus(trie, docs);
  return evaluate(matches, gold, docs);
}

Lexicon drop_nonalphabetic(const Lexicon& lexicon) {
  Lexicon out(lexicon.provenance());
  for (const auto& [term, e] : lexicon.entries()) {
    if (has_alphabetic(term)) out.insert_or_assign(e);
  }
  return out;
}

std::optional<ReportFormat> parse_report_format(std::string_view s) noexcept {
  if (s == "text") return ReportFormat::text;
  if (s == "json") return ReportFormat::json;
  if (s == "csv-row") return ReportFormat::csv_row;
  return std::nullopt;
}

namespace {

constexpr std::array<const char*, 3> kClassKeys{"positive", "negative", "neutral"};

}  // namespace

nlohmann::json report_to_json(const EvalReport& r) {
  nlohmann::json j;
  for (std::size_t c = 0; c < 3; ++c) {
    const auto& s = r.classes[c];
    j[kClassKeys[c]] = {{"tp", s.tp},
                        {"fp", s.fp},
                        {"fn", s.fn},
                        {"precision", s.precision},
                        {"recall", s.recall},
                        {"f", s.f}};
  }
  j["macro_f"] = r.macro_f;
  j["micro_f"] = r.micro_f;
  j["tokens"] = r.tokens;
  j["correct_tokens"] = r.correct_tokens;
  j["scoring"] = kScoringNote;
  return j;
}

EvalReport report_from_json(const nlohmann::json& j) {
  EvalReport r;
  try {
    for (std::size_t c = 0; c < 3; ++c) {
      const auto& o = j.at(kClassKeys[c]);
      auto& s = r.classes[c];
      s.tp = o.at("tp").get<std::uint64_t>();
      s.fp = o.at("fp").get<std::uint64_t>();
      s.fn = o.at("fn").get<std::uint64_t>();
      s.precision = o.at("precision").get<double>();
      s.recall = o.at("recall").get<double>();
      s.f = o.at("f").get<double>();
    }
    r.macro_f = j.at("macro_f").get<double>();
    r.micro_f = j.at("micro_f").get<double>();
    r.tokens = j.at("tokens").get<std::uint64_t>();
    r.correct_tokens = j.at("correct_tokens").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed report: ") + e.what());
  }
  return r;
}

std::string csv_header() {
  return "pos_p,pos_r,pos_f,neg_p,neg_r,neg_f,neu_p,neu_r,neu_f,macro_f,micro_f";
}

std::string format_report(const EvalReport& r, ReportFormat format, std::string_view label) {
  char buf[64];
  switch (format) {
    case ReportFormat::json:
      return report_to_json(r).dump(2) + "\n";
    case ReportFormat::csv_row: {
      std::string out;
      for (const auto& s : r.classes) {
        for (const double v : {s.precision, s.recall, s.f}) {
          std::snprintf(buf, sizeof buf, "%.6f,", v);
          out += buf;
        }
      }
      std::snprintf(buf, sizeof buf, "%.6f,%.6f\n", r.macro_f, r.micro_f);
      return out + buf;
    }
    case ReportFormat::text:
      break;
  }
  std::string head = "lexicon";
  std::string row(label);
  const auto width = std::max(head.size(), row.size()) + 2;
  head.resize(width, ' ');
  row.resize(width, ' ');
  const char* names[] = {"Pos", "Neg", "Neu"};
  for (std::size_t c = 0; c < 3; ++c) {
    for (const char* m : {".P", ".R", ".F"}) {
      std::snprintf(buf, sizeof buf, "%-7s", (std::string(names[c]) + m).c_str());
      head += buf;
    }
    const auto& s = r.classes[c];
    for (const double v : {s.precision, s.recall, s.f}) {
      std::snprintf(buf, sizeof buf, "%-7.3f", v);
      row += buf;
    }
  }
  head += "Macro-F  Micro-F\n";
  std::snprintf(buf, sizeof buf, "%-9.3f%.3f\n", r.macro_f, r.micro_f);
  row += buf;
  return head + row + "(" + std::string(kScoringNote) + ")\n";
}

}  // namespace slg
