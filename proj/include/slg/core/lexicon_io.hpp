#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "slg/core/lexicon.hpp"
#include "slg/core/seed_set.hpp"

namespace slg {

/// `term<TAB>polarity<TAB>score`, LF, score with six decimals, lines in
/// (score desc, term asc) order of the printed score. `#` lines are comments.
std::string format_score(double score);

/// Reads a lexicon. Duplicate terms (after normalization) are merged with the
/// union conflict rule.
Lexicon read_lexicon(std::istream& in, const std::string& source = "<stream>");
Lexicon read_lexicon_file(const std::filesystem::path& path);

void write_lexicon(std::ostream& out, const Lexicon& lexicon);
void write_lexicon_file(const std::filesystem::path& path, const Lexicon& lexicon);

/// Entries in file order, without merging; used for ranked candidate lists.
std::vector<LexiconEntry> read_ranked_entries(std::istream& in,
                                              const std::string& source = "<stream>");
std::vector<LexiconEntry> read_ranked_entries_file(const std::filesystem::path& path);

/// Seed files: `term<TAB>polarity[<TAB>score[<TAB>pattern|literal]]`.
SeedSet read_seed_set(std::istream& in, const std::string& source = "<stream>");
SeedSet read_seed_file(const std::filesystem::path& path);

}  // namespace slg
