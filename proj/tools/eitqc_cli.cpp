#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "eitqc/scenario.hpp"

namespace {

constexpr int kConfigError = 2;
constexpr int kPreconditionFailure = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"EIT quantum-information scenario runner"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  app.add_option("--seed", seed, "Override [scenario] seed");
  app.add_option("--out", out_dir, "Override [scenario] out directory");

  auto* run = app.add_subcommand("run", "Run the scenario described by a config file");
  run->add_option("config", config_path, "Scenario config (INI)")->required();
  run->fallthrough();
  auto* check = app.add_subcommand("validate", "Evaluate validity diagnostics without simulating");
  check->add_option("config", config_path, "Scenario config (INI)")->required();
  check->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  try {
    eitqc::ScenarioConfig cfg = eitqc::ScenarioConfig::load(config_path);
    if (seed) cfg.seed = *seed;
    if (out_dir) cfg.out_dir = *out_dir;

    if (check->parsed()) {
      const eitqc::ValidationReport report = eitqc::validate(cfg);
      std::cout << "scenario " << cfg.name << "\n" << report.table();
      std::cout << (report.all_pass() ? "all checks pass\n" : "some checks fail\n");
      return 0;
    }

    const eitqc::ScenarioResult result = eitqc::run_scenario(cfg);
    std::cout << "scenario " << cfg.name << " (seed " << cfg.seed << ")\n";
    for (const auto& line : result.summary) std::cout << "  " << line << "\n";
    for (const auto& f : result.files) std::cout << "  wrote " << f << "\n";
    return 0;
  } catch (const eitqc::PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kPreconditionFailure;
  } catch (const eitqc::DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
