#include "slg/core/lexicon_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>

#include "slg/core/error.hpp"
#include "slg/core/term.hpp"
#include "slg/core/text_io.hpp"

namespace slg {

namespace {

LexiconEntry parse_entry_fields(const LineReader& reader, const std::vector<std::string_view>& f) {
  if (f.size() < 3) reader.fail("expected term<TAB>polarity<TAB>score");
  LexiconEntry e;
  try {
    e.term = normalize_term(f[0]);
  } catch (const InvalidTermError& err) {
    reader.fail(err.what());
  }
  const auto pol = parse_polarity(f[1]);
  if (!pol) reader.fail("unknown polarity '" + std::string(f[1]) + "'");
  e.polarity = *pol;
  const auto score = parse_double(f[2]);
  if (!score || !std::isfinite(*score) || *score < 0.0) {
    reader.fail("score must be a finite number >= 0");
  }
  e.score = *score;
  return e;
}

}  // namespace

std::string format_score(double score) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", score);
  return buf;
}

std::vector<LexiconEntry> read_ranked_entries(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  std::vector<LexiconEntry> out;
  std::string line;
  while (reader.next(line)) {
    if (is_comment_or_blank(line)) continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 3) reader.fail("expected exactly three tab-separated fields");
    out.push_back(parse_entry_fields(reader, fields));
  }
  return out;
}

std::vector<LexiconEntry> read_ranked_entries_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_ranked_entries(in, path.string());
}

Lexicon read_lexicon(std::istream& in, const std::string& source) {
  auto entries = read_ranked_entries(in, source);
  Lexicon merged(source);
  for (auto& e : entries) {
    const auto* cur = merged.find(e.term);
    if (cur == nullptr) {
      merged.insert(std::move(e));
      continue;
    }
    // Same rule as lexicon_union.
    if (e.score > cur->score) {
      merged.insert_or_assign(std::move(e));
    } else if (e.score == cur->score && e.polarity != cur->polarity) {
      merged.insert_or_assign({e.term, Polarity::neutral, e.score});
    }
  }
  return merged;
}

Lexicon read_lexicon_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  auto lex = read_lexicon(in, path.string());
  lex.set_provenance(path.string());
  return lex;
}

void write_lexicon(std::ostream& out, const Lexicon& lexicon) {
  struct Row {
    const LexiconEntry* entry;
    std::string score_text;
    double printed;
  };
  std::vector<Row> rows;
  rows.reserve(lexicon.size());
  for (const auto& [_, e] : lexicon.entries()) {
    auto text = format_score(e.score);
    const double printed = parse_double(text).value_or(e.score);
    rows.push_back({&e, std::move(text), printed});
  }
  // Order by the printed value so that reading the file back reproduces it.
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.printed != b.printed) return a.printed > b.printed;
    return a.entry->term < b.entry->term;
  });
  for (const auto& r : rows) {
    out << r.entry->term << '\t' << to_string(r.entry->polarity) << '\t' << r.score_text << '\n';
  }
}

void write_lexicon_file(const std::filesystem::path& path, const Lexicon& lexicon) {
  auto out = open_output(path);
  write_lexicon(out, lexicon);
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

SeedSet read_seed_set(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  std::vector<SeedEntry> entries;
  std::string line;
  while (reader.next(line)) {
    if (is_comment_or_blank(line)) continue;
    const auto f = split_tabs(line);
    if (f.size() < 2 || f.size() > 4) {
      reader.fail("expected term<TAB>polarity[<TAB>score[<TAB>pattern]]");
    }
    SeedEntry e;
    const auto pol = parse_polarity(f[1]);
    if (!pol) reader.fail("unknown polarity '" + std::string(f[1]) + "'");
    e.polarity = *pol;
    if (f.size() >= 3 && !f[2].empty() && !parse_double(f[2])) reader.fail("bad score");
    if (f.size() == 4) {
      if (f[3] == "pattern") {
        e.kind = SeedKind::pattern;
      } else if (f[3] != "literal") {
        reader.fail("fourth column must be 'pattern' or 'literal'");
      }
    }
    if (e.kind == SeedKind::literal) {
      try {
        e.text = normalize_term(f[0]);
      } catch (const InvalidTermError& err) {
        reader.fail(err.what());
      }
    } else {
      e.text = std::string(f[0]);
    }
    entries.push_back(std::move(e));
  }
  try {
    return SeedSet(std::move(entries));
  } catch (const ValidationError& err) {
    throw ValidationError(source + ": " + err.what());
  }
}

SeedSet read_seed_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_seed_set(in, path.string());
}

}  // namespace slg
