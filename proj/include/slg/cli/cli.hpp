#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slg/cli/run_config.hpp"
#include "slg/core/diagnostics.hpp"

namespace slg::cli {

struct KeySpec {
  std::string_view key;
  std::string_view help;
  bool required = false;
  bool flag = false;  // boolean switch on the command line
};

struct CommandResult {
  /// Output files in write order; the first one carries the provenance sidecar.
  std::vector<std::pair<std::filesystem::path, std::string>> files;
  std::string standard_output;
  RunConfig effective;  // every setting that determined the result
  Diagnostics diagnostics;
  int status = 0;
};

struct CommandSpec {
  std::string_view name;
  std::string_view summary;
  std::vector<KeySpec> keys;
  std::string_view positional;  // key collecting positional arguments, if any
  CommandResult (*execute)(const RunConfig&);
};

const std::vector<CommandSpec>& command_specs();
const CommandSpec* find_command(std::string_view name);

/// Rejects unknown keys, runs the command and writes its files and sidecar.
CommandResult execute(const CommandSpec& spec, const RunConfig& config);

/// Sidecar text: the effective configuration followed by warnings and counts
/// as comments. Loading it as a configuration reproduces the run.
std::string provenance_text(std::string_view command, const CommandResult& result);
std::filesystem::path sidecar_path(const std::filesystem::path& output);

/// Entry point: returns 0 on success, 2 for usage and validation errors,
/// 1 for runtime errors.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace slg::cli
