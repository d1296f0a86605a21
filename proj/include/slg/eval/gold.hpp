#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "slg/core/polarity.hpp"
#include "slg/corpus/corpus.hpp"

namespace slg {

struct GoldAnnotation {
  std::string doc_id;
  std::size_t start = 0;
  std::size_t end = 0;  // exclusive
  Polarity polarity = Polarity::positive;
  std::string surface;
  std::size_t line = 0;  // source line, 0 when built in memory
};

/// `doc_id<TAB>start<TAB>end<TAB>polarity[<TAB>surface]`, `#` comments.
std::vector<GoldAnnotation> read_gold(std::istream& in, const std::string& source = "gold");
std::vector<GoldAnnotation> read_gold_file(const std::filesystem::path& path);
void write_gold(std::ostream& out, std::span<const GoldAnnotation> gold);

/// Throws ValidationError listing every annotation with an unknown document,
/// a span outside its document, or a span overlapping an earlier one.
void validate_gold(std::span<const GoldAnnotation> gold, std::span<const TokenizedDocument> docs,
                   const std::string& source = "gold");

/// Drops annotations whose covered forms contain no alphabetic character.
std::vector<GoldAnnotation> drop_nonalphabetic(std::span<const GoldAnnotation> gold,
                                               std::span<const TokenizedDocument> docs);

}  // namespace slg
