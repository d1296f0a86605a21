#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace slg {

/// Splits on every tab; empty fields are kept.
std::vector<std::string_view> split_tabs(std::string_view line);

std::optional<double> parse_double(std::string_view s) noexcept;
std::optional<long long> parse_integer(std::string_view s) noexcept;

/// Line-by-line reader tracking 1-based line numbers.
class LineReader {
 public:
  LineReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  /// Next line without its terminator; false at end of input.
  bool next(std::string& line);
  std::size_t line_number() const noexcept { return line_; }
  const std::string& source() const noexcept { return source_; }

  [[noreturn]] void fail(const std::string& what) const;

 private:
  std::istream& in_;
  std::string source_;
  std::size_t line_ = 0;
};

/// Opens a file for reading or throws slg::Error.
std::ifstream open_input(const std::filesystem::path& path);
/// Opens (truncates) a file for binary writing or throws slg::Error.
std::ofstream open_output(const std::filesystem::path& path);

inline bool is_comment_or_blank(std::string_view line) {
  return line.empty() || line.front() == '#';
}

}  // namespace slg
