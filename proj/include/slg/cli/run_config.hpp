#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace slg::cli {

/// Flat key=value settings of one command. Typed getters throw
/// ValidationError on malformed values.
class RunConfig {
 public:
  /// `key=value` lines; blank lines and `#` comments are skipped.
  static RunConfig parse(std::istream& in, const std::string& source = "config");
  static RunConfig load(const std::filesystem::path& path);

  void set(std::string key, std::string value) { values_[std::move(key)] = std::move(value); }
  void erase(std::string_view key);
  bool has(std::string_view key) const { return values_.find(key) != values_.end(); }
  const std::map<std::string, std::string, std::less<>>& values() const noexcept { return values_; }

  /// Throws ValidationError naming every key not in `known`.
  void require_known(std::span<const std::string_view> known) const;

  std::optional<std::string> text(std::string_view key) const;
  /// Throws ValidationError when the key is missing.
  std::string required(std::string_view key) const;
  std::optional<long long> integer(std::string_view key) const;
  std::optional<double> real(std::string_view key) const;
  std::optional<bool> boolean(std::string_view key) const;
  /// Comma-separated values; empty items are rejected.
  std::optional<std::vector<std::string>> list(std::string_view key) const;

  /// Sorted `key=value` lines.
  void write(std::ostream& out) const;

 private:
  std::map<std::string, std::string, std::less<>> values_;
};

/// Shortest decimal text that reads back as the same double.
std::string format_real(double v);

}  // namespace slg::cli
