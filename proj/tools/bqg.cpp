// bqg irr|fuse|growth|rd --instance <file.json> [--preset <name>] [--kmax N] [--seed S] [--tol T] [--out DIR]

#include <iostream>
#include <optional>
#include <utility>
#include <string>

#include <CLI11.hpp>

#include "bqg/commands.hpp"

#ifndef BQG_PRESET_DIR
#define BQG_PRESET_DIR "presets"
#endif

int main(int argc, char** argv) {
  using namespace bqg;
  CLI::App app{"Representation tables, fusion rules, growth and rapid-decay reports for bicrossed products"};
  app.require_subcommand(1, 1);
  std::string instance, preset, out = ".";
  std::optional<int> kmax;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  const std::pair<const char*, const char*> commands[] = {
      {"irr", "irreducible corepresentation classes (irr.json, irr.csv)"},
      {"fuse", "fusion rules with oracle diff and audit (fusion.json, fusion.csv)"},
      {"growth", "group and dual shell counts (growth.csv)"},
      {"rd", "rapid-decay constants per dual shell (rd.json)"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--instance", instance, "instance descriptor (JSON)");
    sub->add_option("--preset", preset, "shipped preset name");
    sub->add_option("--kmax", kmax, "largest shell or radius")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", seed, "random seed");
    sub->add_option("--tol", tol, "numerical tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--out", out, "output directory");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitConfig;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (instance.empty() == preset.empty()) throw ConfigError("--instance", "give exactly one of --instance and --preset");
    std::filesystem::path path = preset.empty() ? std::filesystem::path(instance)
                                                : std::filesystem::path(BQG_PRESET_DIR) / (preset + ".json");
    auto cfg = io::parse_config(io::load_json(path));
    if (kmax) cfg.run.kmax = *kmax;
    if (seed) cfg.run.seed = *seed;
    if (tol) cfg.run.tol = *tol;
    cli::Context ctx{cfg, out, std::cerr};
    return cli::run_command(command, ctx);
  } catch (const ConfigError& e) {
    std::cerr << "bqg: config error at " << e.what() << "\n";
    return cli::kExitConfig;
  }
}
