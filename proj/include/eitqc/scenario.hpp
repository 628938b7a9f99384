#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eitqc/blockade.hpp"
#include "eitqc/detector.hpp"
#include "eitqc/medium.hpp"
#include "eitqc/types.hpp"
#include "eitqc/xpm.hpp"

namespace eitqc {

/// Invalid configuration; the message names the offending field.
struct ConfigError : DomainError {
  using DomainError::DomainError;
};

const std::vector<std::string>& scenario_names();

/// Sectioned key-value configuration.  Physical values carry unit suffixes
/// understood by units::parse.
struct ScenarioConfig {
  std::string name;
  std::string out_dir = ".";
  std::uint64_t seed = 0;
  std::string base_dir = ".";  // relative file references resolve here
  std::map<std::string, std::map<std::string, std::string>> sections;

  static ScenarioConfig load(const std::string& path);
  static ScenarioConfig parse(const std::string& text, const std::string& base_dir = ".");

  bool has(const std::string& section) const { return sections.count(section) != 0; }
  bool has(const std::string& section, const std::string& key) const;
  std::optional<std::string> raw(const std::string& section, const std::string& key) const;
  Real quantity(const std::string& section, const std::string& key) const;
  Real quantity(const std::string& section, const std::string& key, Real fallback) const;
  long long integer(const std::string& section, const std::string& key, long long fallback) const;
  bool flag(const std::string& section, const std::string& key, bool fallback) const;
  std::string text(const std::string& section, const std::string& key, const std::string& fallback) const;
  std::string path(const std::string& section, const std::string& key) const;
};

MediumParams medium_from(const ScenarioConfig& cfg);
TripodParams tripod_from(const ScenarioConfig& cfg);
TrapConfig trap_from(const ScenarioConfig& cfg);
DetectorParams detector_from(const ScenarioConfig& cfg);

struct ValidationRow {
  std::string section;
  Check check;
};

struct ValidationReport {
  std::vector<ValidationRow> rows;
  bool all_pass() const;
  std::string table() const;
};

/// Module validity diagnostics for the scenario, without simulating.
ValidationReport validate(const ScenarioConfig& cfg);

struct ScenarioResult {
  std::vector<std::string> files;
  std::vector<std::string> summary;  // "key = value" lines for the console
};

/// Runs the named scenario, writing params.json and its data files into
/// cfg.out_dir.
ScenarioResult run_scenario(const ScenarioConfig& cfg);

}  // namespace eitqc
