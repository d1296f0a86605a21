#include "slg/cli/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

#include "slg/core/error.hpp"
#include "slg/core/text_io.hpp"

namespace slg::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

RunConfig RunConfig::parse(std::istream& in, const std::string& source) {
  RunConfig c;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto t = trim(line);
    if (is_comment_or_blank(t)) continue;
    const auto eq = t.find('=');
    const auto where = source + ":" + std::to_string(number) + ": ";
    if (eq == std::string_view::npos) throw ValidationError(where + "expected key=value");
    const auto key = trim(t.substr(0, eq));
    if (key.empty()) throw ValidationError(where + "empty key");
    if (c.has(key)) throw ValidationError(where + "duplicate key '" + std::string(key) + "'");
    c.set(std::string(key), std::string(trim(t.substr(eq + 1))));
  }
  return c;
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse(in, path.string());
}

void RunConfig::erase(std::string_view key) {
  if (const auto it = values_.find(key); it != values_.end()) values_.erase(it);
}

void RunConfig::require_known(std::span<const std::string_view> known) const {
  std::string unknown;
  for (const auto& [k, _] : values_) {
    if (std::find(known.begin(), known.end(), k) != known.end()) continue;
    unknown += unknown.empty() ? "" : ", ";
    unknown += k;
  }
  if (!unknown.empty()) throw ValidationError("unknown configuration key(s): " + unknown);
}

std::optional<std::string> RunConfig::text(std::string_view key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::string RunConfig::required(std::string_view key) const {
  auto v = text(key);
  if (!v || v->empty()) throw ValidationError("missing required setting '" + std::string(key) + "'");
  return *v;
}

std::optional<long long> RunConfig::integer(std::string_view key) const {
  const auto v = text(key);
  if (!v) return std::nullopt;
  const auto n = parse_integer(*v);
  if (!n) throw ValidationError(std::string(key) + ": expected an integer, got '" + *v + "'");
  return n;
}

std::optional<double> RunConfig::real(std::string_view key) const {
  const auto v = text(key);
  if (!v) return std::nullopt;
  const auto d = parse_double(*v);
  if (!d || !std::isfinite(*d)) throw ValidationError(std::string(key) + ": expected a number, got '" + *v + "'");
  return d;
}

std::optional<bool> RunConfig::boolean(std::string_view key) const {
  const auto v = text(key);
  if (!v) return std::nullopt;
  if (*v == "true" || *v == "1" || *v == "yes") return true;
  if (*v == "false" || *v == "0" || *v == "no") return false;
  throw ValidationError(std::string(key) + ": expected true or false, got '" + *v + "'");
}

std::optional<std::vector<std::string>> RunConfig::list(std::string_view key) const {
  const auto v = text(key);
  if (!v) return std::nullopt;
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = v->find(',', start);
    const auto item = trim(std::string_view(*v).substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (item.empty()) throw ValidationError(std::string(key) + ": empty list item in '" + *v + "'");
    out.emplace_back(item);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void RunConfig::write(std::ostream& out) const {
  for (const auto& [k, v] : values_) out << k << '=' << v << '\n';
}

std::string format_real(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

}  // namespace slg::cli
