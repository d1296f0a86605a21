#include "slg/eval/gold.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>

#include "slg/core/error.hpp"
#include "slg/core/term.hpp"
#include "slg/core/text_io.hpp"

namespace slg {

std::vector<GoldAnnotation> read_gold(std::istream& in, const std::string& source) {
  std::vector<GoldAnnotation> out;
  LineReader reader(in, source);
  std::string line;
  while (reader.next(line)) {
    if (is_comment_or_blank(line)) continue;
    const auto f = split_tabs(line);
    if (f.size() < 4 || f.size() > 5) {
      reader.fail("expected doc_id<TAB>start<TAB>end<TAB>polarity[<TAB>surface]");
    }
    GoldAnnotation g;
    g.doc_id = std::string(f[0]);
    if (g.doc_id.empty()) reader.fail("empty document id");
    const auto start = parse_integer(f[1]);
    const auto end = parse_integer(f[2]);
    if (!start || !end || *start < 0 || *end <= *start) {
      reader.fail("span must be two integers with 0 <= start < end");
    }
    g.start = static_cast<std::size_t>(*start);
    g.end = static_cast<std::size_t>(*end);
    const auto p = parse_polarity(f[3]);
    if (!p || !is_polar(*p)) reader.fail("gold polarity must be positive or negative");
    g.polarity = *p;
    if (f.size() == 5) g.surface = std::string(f[4]);
    g.line = reader.line_number();
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<GoldAnnotation> read_gold_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_gold(in, path.string());
}

void write_gold(std::ostream& out, std::span<const GoldAnnotation> gold) {
  for (const auto& g : gold) {
    out << g.doc_id << '\t' << g.start << '\t' << g.end << '\t' << to_string(g.polarity);
    if (!g.surface.empty()) out << '\t' << g.surface;
    out << '\n';
  }
}

void validate_gold(std::span<const GoldAnnotation> gold, std::span<const TokenizedDocument> docs,
                   const std::string& source) {
  std::map<std::string_view, std::size_t> length;
  for (const auto& d : docs) length[d.id] = d.tokens.size();
  std::map<std::string_view, std::vector<std::pair<std::size_t, std::size_t>>> taken;
  std::string problems;
  std::size_t count = 0;
  auto report = [&](const GoldAnnotation& g, const std::string& what) {
    ++count;
    problems += "\n  " + source + ":" + std::to_string(g.line) + ": " + what;
  };
  for (const auto& g : gold) {
    auto it = length.find(g.doc_id);
    if (it == length.end()) {
      report(g, "unknown document '" + g.doc_id + "'");
      continue;
    }
    if (g.end <= g.start || g.end > it->second) {
      report(g, "span [" + std::to_string(g.start) + ", " + std::to_string(g.end) +
                    ") outside document '" + g.doc_id + "' of " + std::to_string(it->second) +
                    " tokens");
      continue;
    }
    auto& spans = taken[g.doc_id];
    const bool overlaps = std::any_of(spans.begin(), spans.end(), [&](const auto& s) {
      return g.start < s.second && s.first < g.end;
    });
    if (overlaps) {
      report(g, "span [" + std::to_string(g.start) + ", " + std::to_string(g.end) +
                    ") overlaps another annotation in '" + g.doc_id + "'");
      continue;
    }
    spans.emplace_back(g.start, g.end);
  }
  if (count > 0) throw ValidationError(std::to_string(count) + " invalid gold annotation(s):" + problems);
}

std::vector<GoldAnnotation> drop_nonalphabetic(std::span<const GoldAnnotation> gold,
                                               std::span<const TokenizedDocument> docs) {
  std::map<std::string_view, const TokenizedDocument*> by_id;
  for (const auto& d : docs) by_id[d.id] = &d;
  std::vector<GoldAnnotation> out;
  for (const auto& g : gold) {
    auto it = by_id.find(g.doc_id);
    bool alpha = false;
    if (it != by_id.end()) {
      const auto& tokens = it->second->tokens;
      for (auto i = g.start; i < g.end && i < tokens.size() && !alpha; ++i) {
        alpha = has_alphabetic(tokens[i].form);
      }
    }
    if (alpha) out.push_back(g);
  }
  return out;
}

}  // namespace slg
