// igeo command line: runs the verification suites described by a config
// file and emits deterministic reports.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>

#include "igeo/catalog.hpp"
#include "igeo/config.hpp"
#include "igeo/orbit_method.hpp"

namespace {

struct CommonOpts {
  std::string config_path;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::vector<std::string> tol_overrides;
  std::string out_path;
  std::string format;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config_path, "config file (JSON; see docs/config.md)");
  cmd->add_option("--seed", opts.seed, "override the config seed")->each([&](const std::string&) {
    opts.seed_set = true;
  });
  cmd->add_option("--tol", opts.tol_overrides, "tolerance override, name=value (repeatable)");
  cmd->add_option("--out", opts.out_path, "report output path");
  cmd->add_option("--format", opts.format, "report format: json|csv");
}

igeo::RunConfig resolve_config(const CommonOpts& opts) {
  igeo::RunConfig cfg;
  if (!opts.config_path.empty()) cfg = igeo::load_config(opts.config_path);
  if (opts.seed_set) cfg.seed = opts.seed;
  for (const auto& kv : opts.tol_overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw igeo::ConfigError("--tol expects name=value, got: " + kv);
    const double v = std::stod(kv.substr(eq + 1));
    if (!(v > 0.0)) throw igeo::ConfigError("--tol " + kv.substr(0, eq) + ": must be positive");
    cfg.tolerances[kv.substr(0, eq)] = v;
  }
  if (!opts.out_path.empty()) cfg.out_path = opts.out_path;
  if (!opts.format.empty()) {
    if (opts.format == "json")
      cfg.format = igeo::ReportFormat::Json;
    else if (opts.format == "csv")
      cfg.format = igeo::ReportFormat::Csv;
    else
      throw igeo::ConfigError("--format expects json or csv");
  }
  return cfg;
}

int emit(const igeo::ReportBundle& bundle, const igeo::RunConfig& cfg) {
  const std::string text = igeo::serialize(bundle, cfg.format);
  if (!cfg.out_path.empty()) {
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw igeo::ConfigError("cannot open output path: " + cfg.out_path);
    out << text;
  } else {
    std::cout << text;
  }
  std::size_t failed = 0;
  for (const auto& r : bundle.rows)
    if (!r.pass) {
      ++failed;
      std::cerr << "[FAIL] " << r.check << " (" << r.claim << "): residual "
                << igeo::format_double(r.residual) << " > tolerance "
                << igeo::format_double(r.tolerance) << "\n";
    }
  std::cerr << bundle.rows.size() - failed << "/" << bundle.rows.size() << " checks passed\n";
  return bundle.all_pass() ? 0 : 1;
}

std::string matrix_csv(const Eigen::MatrixXcd& m) {
  std::string out = "row,col,re,im\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out += std::to_string(i) + "," + std::to_string(j) + "," +
             igeo::format_double(m(i, j).real()) + "," + igeo::format_double(m(i, j).imag()) + "\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"desk-scale verification of information-geometric Kahler structures and"
               " nilpotent-group representation checks"};
  app.require_subcommand(1);

  CommonOpts verify_opts, orbits_opts, induce_opts, report_opts;

  auto* verify = app.add_subcommand("verify", "run check suites and emit a report");
  std::vector<std::string> suite_args;
  verify->add_option("suites", suite_args, "suites to run (default: those in the config)");
  add_common(verify, verify_opts);

  auto* orbits = app.add_subcommand("orbits", "coadjoint orbit and polarization checks");
  add_common(orbits, orbits_opts);

  auto* induce = app.add_subcommand("induce", "induced representation checks");
  std::string export_path;
  std::string export_algebra = "heisenberg3";
  int export_grid = 64;
  std::vector<double> export_lambda{0.0, 0.0, 1.0};
  std::vector<double> export_g{0.25, 1.0, 0.0};
  induce->add_option("--export-operator", export_path,
                     "write one induced operator as CSV (re/im pairs) and exit");
  induce->add_option("--algebra", export_algebra, "algebra for --export-operator");
  induce->add_option("--grid", export_grid, "quotient grid size for --export-operator");
  induce->add_option("--lambda", export_lambda, "functional for --export-operator");
  induce->add_option("--element", export_g, "group element for --export-operator");
  add_common(induce, induce_opts);

  auto* report = app.add_subcommand("report", "re-emit an existing JSON report");
  std::string report_in;
  report->add_option("--in", report_in, "existing report (JSON)")->required();
  add_common(report, report_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      igeo::RunConfig cfg = resolve_config(verify_opts);
      if (!suite_args.empty()) cfg.checks = suite_args;
      for (const auto& name : cfg.checks) {
        const auto& known = igeo::suite_names();
        if (std::find(known.begin(), known.end(), name) == known.end())
          throw igeo::ConfigError("unknown check suite: " + name);
      }
      return emit(igeo::run(cfg), cfg);
    }
    if (orbits->parsed()) {
      igeo::RunConfig cfg = resolve_config(orbits_opts);
      cfg.checks = {"orbits"};
      return emit(igeo::run(cfg), cfg);
    }
    if (induce->parsed()) {
      igeo::RunConfig cfg = resolve_config(induce_opts);
      if (!export_path.empty()) {
        const igeo::LieAlgebra alg = igeo::algebra_by_name(export_algebra);
        Eigen::VectorXd lam(static_cast<Eigen::Index>(export_lambda.size()));
        for (std::size_t i = 0; i < export_lambda.size(); ++i)
          lam[static_cast<Eigen::Index>(i)] = export_lambda[i];
        Eigen::VectorXd g(static_cast<Eigen::Index>(export_g.size()));
        for (std::size_t i = 0; i < export_g.size(); ++i)
          g[static_cast<Eigen::Index>(i)] = export_g[i];
        const igeo::Polarization pol = igeo::polarize(alg, lam);
        const igeo::PeriodicLattice lat = igeo::PeriodicLattice::cubic(
            static_cast<int>(igeo::complement_indices(alg.dim(), pol.basis).size()), 0.0, 1.0,
            export_grid);
        std::ofstream out(export_path, std::ios::binary);
        if (!out) throw igeo::ConfigError("cannot open output path: " + export_path);
        out << matrix_csv(igeo::induced_rep_operator(alg, pol, g, lat));
        return 0;
      }
      cfg.checks = {"induce"};
      return emit(igeo::run(cfg), cfg);
    }
    if (report->parsed()) {
      igeo::RunConfig cfg = resolve_config(report_opts);
      std::ifstream in(report_in);
      if (!in) throw igeo::ConfigError("cannot open report: " + report_in);
      std::stringstream ss;
      ss << in.rdbuf();
      const auto j = nlohmann::json::parse(ss.str());
      igeo::ReportBundle bundle;
      for (const auto& row : j.at("rows")) {
        igeo::ReportRow r;
        r.check = row.at("check").get<std::string>();
        r.claim = row.at("claim").get<std::string>();
        r.input_hash = std::stoull(row.at("input_hash").get<std::string>(), nullptr, 16);
        r.residual = std::stod(row.at("residual").get<std::string>());
        r.tolerance = std::stod(row.at("tolerance").get<std::string>());
        r.pass = row.at("pass").get<bool>();
        bundle.rows.push_back(std::move(r));
      }
      return emit(bundle, cfg);
    }
  } catch (const igeo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
