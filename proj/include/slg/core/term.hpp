#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace slg {

/// Canonical form of a term: Unicode simple case folding, whitespace runs
/// collapsed to one ASCII space, no leading or trailing whitespace.
/// Throws InvalidTermError when nothing remains after trimming or the input
/// is not valid UTF-8.
std::string normalize_term(std::string_view raw);

/// Same as normalize_term but returns an empty string instead of throwing.
std::string try_normalize_term(std::string_view raw) noexcept;

/// Splits a normalized term on single spaces.
std::vector<std::string> split_words(std::string_view normalized);

/// True if the UTF-8 string contains at least one alphabetic code point.
bool has_alphabetic(std::string_view utf8) noexcept;

}  // namespace slg
