#include "slg/core/term.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include "slg/core/error.hpp"

namespace slg {

namespace {

void append_utf8(std::string& out, UChar32 c) {
  char buf[U8_MAX_LENGTH];
  int32_t len = 0;
  U8_APPEND_UNSAFE(buf, len, c);
  out.append(buf, static_cast<std::size_t>(len));
}

// Returns false on invalid UTF-8.
bool fold_into(std::string_view raw, std::string& out) {
  const auto* s = reinterpret_cast<const uint8_t*>(raw.data());
  const auto length = static_cast<int32_t>(raw.size());
  int32_t i = 0;
  bool pending_space = false;
  while (i < length) {
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) return false;
    if (u_isUWhiteSpace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    append_utf8(out, u_foldCase(c, U_FOLD_CASE_DEFAULT));
  }
  return true;
}

}  // namespace

std::string normalize_term(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  if (!fold_into(raw, out)) throw InvalidTermError("term is not valid UTF-8");
  if (out.empty()) throw InvalidTermError("term is empty after trimming");
  return out;
}

std::string try_normalize_term(std::string_view raw) noexcept {
  std::string out;
  try {
    out.reserve(raw.size());
    if (!fold_into(raw, out)) out.clear();
  } catch (...) {
    out.clear();
  }
  return out;
}

std::vector<std::string> split_words(std::string_view normalized) {
  std::vector<std::string> words;
  std::size_t start = 0;
  while (start <= normalized.size()) {
    const auto end = normalized.find(' ', start);
    const auto stop = end == std::string_view::npos ? normalized.size() : end;
    if (stop > start) words.emplace_back(normalized.substr(start, stop - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return words;
}

bool has_alphabetic(std::string_view utf8) noexcept {
  const auto* s = reinterpret_cast<const uint8_t*>(utf8.data());
  const auto length = static_cast<int32_t>(utf8.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c >= 0 && u_isUAlphabetic(c)) return true;
  }
  return false;
}

}  // namespace slg
