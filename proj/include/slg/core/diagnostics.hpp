#pragma once

#include <map>
#include <string>
#include <vector>

namespace slg {

/// Warnings and counts collected during a run; written to provenance.
struct Diagnostics {
  std::vector<std::string> warnings;
  std::map<std::string, std::string> counts;

  void warn(std::string message) { warnings.push_back(std::move(message)); }
  void count(const std::string& key, std::string value) { counts[key] = std::move(value); }
  void count(const std::string& key, long long value) { counts[key] = std::to_string(value); }
};

/// Null-safe helpers for optional diagnostics sinks.
inline void warn(Diagnostics* d, std::string message) {
  if (d) d->warn(std::move(message));
}
inline void count(Diagnostics* d, const std::string& key, long long value) {
  if (d) d->count(key, value);
}

}  // namespace slg
