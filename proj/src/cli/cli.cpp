#include "slg/cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "slg/core/error.hpp"
#include "slg/core/text_io.hpp"

namespace slg::cli {

namespace fs = std::filesystem;

namespace {

std::string flag_name(std::string_view key) {
  std::string f(key);
  std::replace(f.begin(), f.end(), '_', '-');
  return "--" + f;
}

void write_file(const fs::path& path, const std::string& content) {
  auto out = open_output(path);
  out << content;
  out.close();
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace

fs::path sidecar_path(const fs::path& output) {
  auto p = output;
  p += ".prov";
  return p;
}

std::string provenance_text(std::string_view command, const CommandResult& result) {
  std::ostringstream out;
  out << "# slg provenance; replay with: slg replay <this file>\n";
  out << "command=" << command << '\n';
  result.effective.write(out);
  for (const auto& w : result.diagnostics.warnings) out << "# warning: " << w << '\n';
  for (const auto& [k, v] : result.diagnostics.counts) out << "# count: " << k << '=' << v << '\n';
  return out.str();
}

CommandResult execute(const CommandSpec& spec, const RunConfig& config) {
  std::vector<std::string_view> known;
  for (const auto& k : spec.keys) known.push_back(k.key);
  config.require_known(known);
  auto result = spec.execute(config);
  for (const auto& [path, content] : result.files) write_file(path, content);
  if (!result.files.empty()) {
    write_file(sidecar_path(result.files.front().first), provenance_text(spec.name, result));
  }
  return result;
}

namespace {

int report(const CommandResult& r, std::ostream& out, std::ostream& err) {
  out << r.standard_output;
  for (const auto& w : r.diagnostics.warnings) err << "warning: " << w << '\n';
  return r.status;
}

RunConfig config_file(const std::string& path, std::string_view command) {
  auto c = RunConfig::load(path);
  if (const auto cmd = c.text("command")) {
    if (*cmd != command) {
      throw ValidationError("configuration '" + path + "' is for command '" + *cmd + "'");
    }
    c.erase("command");
  }
  return c;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app("Sentiment lexicon induction and evaluation", "slg");
  app.require_subcommand(1);

  struct Bound {
    const CommandSpec* spec;
    CLI::App* app;
    std::map<std::string, std::string, std::less<>> values;
    std::map<std::string, bool, std::less<>> flags;
    std::vector<std::string> positional;
    std::string config;
  };
  std::vector<std::unique_ptr<Bound>> bound;
  for (const auto& spec : command_specs()) {
    auto b = std::make_unique<Bound>();
    b->spec = &spec;
    b->app = app.add_subcommand(std::string(spec.name), std::string(spec.summary));
    b->app->add_option("--config", b->config, "key=value configuration file");
    for (const auto& k : spec.keys) {
      std::string names = flag_name(k.key);
      if (k.key == "output") names = "-o," + names;
      if (k.key == spec.positional) {
        b->app->add_option(std::string(k.key), b->positional, std::string(k.help));
        continue;
      }
      const std::string help(k.help);
      if (k.flag) {
        b->app->add_flag(names, b->flags[std::string(k.key)], help);
      } else {
        b->app->add_option(names, b->values[std::string(k.key)], help);
      }
    }
    bound.push_back(std::move(b));
  }
  std::string replay_path;
  auto* replay = app.add_subcommand("replay", "re-run a command from its provenance sidecar");
  replay->add_option("sidecar", replay_path, "provenance file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\nRun 'slg <command> --help' for usage.\n";
    return 2;
  }

  try {
    if (replay->parsed()) {
      auto c = RunConfig::load(replay_path);
      const auto name = c.required("command");
      const auto* spec = find_command(name);
      if (!spec) throw ValidationError("unknown command '" + name + "' in " + replay_path);
      c.erase("command");
      return report(execute(*spec, c), out, err);
    }
    for (const auto& b : bound) {
      if (!b->app->parsed()) continue;
      RunConfig c;
      if (!b->config.empty()) c = config_file(b->config, b->spec->name);
      for (const auto& k : b->spec->keys) {
        const auto* opt = k.key == b->spec->positional ? b->app->get_option(std::string(k.key))
                                                        : b->app->get_option(flag_name(k.key));
        if (opt->count() == 0) continue;
        const std::string key(k.key);
        if (k.key == b->spec->positional) {
          std::string joined;
          for (const auto& p : b->positional) joined += (joined.empty() ? "" : ",") + p;
          c.set(key, joined);
        } else if (k.flag) {
          c.set(key, b->flags[key] ? "true" : "false");
        } else {
          c.set(key, b->values[key]);
        }
      }
      return report(execute(*b->spec, c), out, err);
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\nRun 'slg <command> --help' for usage.\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace slg::cli
