#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "igeo/report.hpp"
#include "igeo/suites.hpp"

namespace igeo {

enum class ReportFormat { Json, Csv };

/// Declarative run description. See docs/config.md for the schema and one
/// example per built-in model.
struct RunConfig {
  std::uint64_t seed = 42;
  std::vector<std::string> checks;            // empty -> empty report
  std::map<std::string, double> tolerances;   // overrides by name
  std::vector<ExponentialFamily> families;    // empty -> catalog trio
  std::string out_path;                       // empty -> stdout only
  ReportFormat format = ReportFormat::Json;
};

/// Parses a JSON config document. Throws ConfigError naming the offending
/// field on invalid input.
RunConfig parse_config(const std::string& json_text);

/// Loads a config file; a relative path that does not exist is also looked
/// up under $IGEO_CONFIG_DIR.
RunConfig load_config(const std::string& path);

/// Executes the requested check suites. Deterministic for a fixed config:
/// identical configs (and seeds) produce byte-identical serialized reports.
ReportBundle run(const RunConfig& config);

std::string serialize(const ReportBundle& bundle, ReportFormat format);

}  // namespace igeo
