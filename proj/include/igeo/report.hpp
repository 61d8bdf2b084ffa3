#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace igeo {

/// One verification result. `claim` names the identity being checked so a
/// failing row cites what was violated; `input_hash` fingerprints the inputs
/// that produced the row.
struct ReportRow {
  std::string check;
  std::string claim;
  std::uint64_t input_hash = 0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct ReportBundle {
  std::vector<ReportRow> rows;

  bool all_pass() const;
  void add(std::string check, std::string claim, std::uint64_t input_hash, double residual,
           double tolerance);
  void append(const ReportBundle& other);
};

/// Deterministic shortest round-trip formatting (%.17g).
std::string format_double(double x);

/// Serializations are byte-deterministic for identical bundles.
std::string to_json(const ReportBundle& bundle);
std::string to_csv(const ReportBundle& bundle);

}  // namespace igeo
