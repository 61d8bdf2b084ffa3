#include "igeo/report.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

namespace igeo {

bool ReportBundle::all_pass() const {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

void ReportBundle::add(std::string check, std::string claim, std::uint64_t input_hash,
                       double residual, double tolerance) {
  ReportRow r;
  r.check = std::move(check);
  r.claim = std::move(claim);
  r.input_hash = input_hash;
  r.residual = residual;
  r.tolerance = tolerance;
  r.pass = residual <= tolerance;
  rows.push_back(std::move(r));
}

void ReportBundle::append(const ReportBundle& other) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string to_json(const ReportBundle& bundle) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : bundle.rows) {
    nlohmann::ordered_json row;
    row["check"] = r.check;
    row["claim"] = r.claim;
    char hash[24];
    std::snprintf(hash, sizeof(hash), "%016llx", static_cast<unsigned long long>(r.input_hash));
    row["input_hash"] = hash;
    // residual/tolerance serialized as strings to keep the bytes deterministic
    row["residual"] = format_double(r.residual);
    row["tolerance"] = format_double(r.tolerance);
    row["pass"] = r.pass;
    rows.push_back(std::move(row));
  }
  nlohmann::ordered_json out;
  out["rows"] = std::move(rows);
  out["all_pass"] = bundle.all_pass();
  return out.dump(2) + "\n";
}

std::string to_csv(const ReportBundle& bundle) {
  std::string out = "check,claim,input_hash,residual,tolerance,pass\n";
  for (const auto& r : bundle.rows) {
    char hash[24];
    std::snprintf(hash, sizeof(hash), "%016llx", static_cast<unsigned long long>(r.input_hash));
    out += r.check + "," + r.claim + "," + hash + "," + format_double(r.residual) + "," +
           format_double(r.tolerance) + "," + (r.pass ? "true" : "false") + "\n";
  }
  return out;
}

}  // namespace igeo
