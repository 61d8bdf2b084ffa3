#include "igeo/config.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "igeo/catalog.hpp"

namespace igeo {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ConfigError("config field '" + field + "': " + what);
}

SpaceDescriptor parse_space(const json& j, const std::string& field) {
  if (!j.is_object()) fail(field, "expected an object");
  const std::string type = j.value("type", "");
  if (type == "finite_counting") {
    return FiniteCounting{j.value("n", 0)};
  }
  if (type == "uniform_grid") {
    UniformGrid g;
    g.lo = j.value("lo", 0.0);
    g.hi = j.value("hi", 1.0);
    g.count = j.value("count", 0);
    g.periodic = j.value("periodic", false);
    return g;
  }
  if (type == "gauss_hermite") {
    GaussHermite g;
    g.order = j.value("order", 0);
    g.center = j.value("center", 0.0);
    g.scale = j.value("scale", 1.0);
    return g;
  }
  if (type == "product_grid") {
    ProductGrid g;
    if (!j.contains("axes") || !j["axes"].is_array()) fail(field + ".axes", "expected an array");
    for (const auto& ax : j["axes"]) {
      const SpaceDescriptor d = parse_space(ax, field + ".axes[]");
      if (!std::holds_alternative<UniformGrid>(d))
        fail(field + ".axes[]", "product axes must be uniform grids");
      g.axes.push_back(std::get<UniformGrid>(d));
    }
    return g;
  }
  fail(field + ".type", "unknown space type '" + type + "'");
}

Eigen::VectorXd parse_vector(const json& j, const std::string& field) {
  if (!j.is_array()) fail(field, "expected an array of numbers");
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) fail(field, "expected numbers");
    v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  }
  return v;
}

ExponentialFamily parse_family(const json& j, const std::string& field) {
  if (!j.is_object()) fail(field, "expected an object");
  const std::string name = j.value("name", "");
  if (name.empty()) fail(field + ".name", "missing family name");

  SpacePtr space;
  if (j.contains("space")) space = build_space(parse_space(j["space"], field + ".space"));

  if (name == "custom") {
    if (!space) fail(field + ".space", "custom families need an explicit space");
    if (!j.contains("base") || !j.contains("carriers"))
      fail(field, "custom families need 'base' and 'carriers' node tables");
    const Eigen::VectorXd base = parse_vector(j["base"], field + ".base");
    if (!j["carriers"].is_array() || j["carriers"].empty())
      fail(field + ".carriers", "expected a nonempty array of node tables");
    const int n = static_cast<int>(j["carriers"].size());
    Eigen::MatrixXd carriers(n, base.size());
    for (int k = 0; k < n; ++k) {
      const Eigen::VectorXd row = parse_vector(j["carriers"][static_cast<std::size_t>(k)],
                                               field + ".carriers[]");
      if (row.size() != base.size()) fail(field + ".carriers[]", "length mismatch against base");
      carriers.row(k) = row;
    }
    Eigen::VectorXd lo = Eigen::VectorXd::Constant(n, -2.0);
    Eigen::VectorXd hi = Eigen::VectorXd::Constant(n, 2.0);
    if (j.contains("domain_lo")) lo = parse_vector(j["domain_lo"], field + ".domain_lo");
    if (j.contains("domain_hi")) hi = parse_vector(j["domain_hi"], field + ".domain_hi");
    try {
      return ExponentialFamily(space, base, carriers, lo, hi, j.value("label", "custom"));
    } catch (const Error& e) {
      fail(field, e.what());
    }
  }

  const int n = j.value("n", 3);
  try {
    return family_by_name(name, n, space);
  } catch (const Error& e) {
    fail(field + ".name", e.what());
  }
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config root: expected an object");

  RunConfig cfg;
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer())
      fail("seed", "expected an integer");
    cfg.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("checks")) {
    if (!j["checks"].is_array()) fail("checks", "expected an array of suite names");
    for (const auto& c : j["checks"]) {
      if (!c.is_string()) fail("checks", "expected strings");
      const std::string name = c.get<std::string>();
      const auto& known = suite_names();
      if (std::find(known.begin(), known.end(), name) == known.end())
        fail("checks", "unknown suite '" + name + "'");
      cfg.checks.push_back(name);
    }
  }
  if (j.contains("tolerances")) {
    if (!j["tolerances"].is_object()) fail("tolerances", "expected an object");
    for (const auto& [key, val] : j["tolerances"].items()) {
      if (!val.is_number()) fail("tolerances." + key, "expected a number");
      const double t = val.get<double>();
      if (!(t > 0.0)) fail("tolerances." + key, "tolerance must be positive");
      cfg.tolerances[key] = t;
    }
  }
  if (j.contains("families")) {
    if (!j["families"].is_array()) fail("families", "expected an array");
    for (const auto& f : j["families"]) cfg.families.push_back(parse_family(f, "families[]"));
  }
  if (j.contains("family")) cfg.families.push_back(parse_family(j["family"], "family"));
  if (j.contains("output")) {
    if (!j["output"].is_object()) fail("output", "expected an object");
    cfg.out_path = j["output"].value("path", "");
    const std::string fmt = j["output"].value("format", "json");
    if (fmt == "json")
      cfg.format = ReportFormat::Json;
    else if (fmt == "csv")
      cfg.format = ReportFormat::Csv;
    else
      fail("output.format", "expected 'json' or 'csv'");
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  namespace fs = std::filesystem;
  fs::path p(path);
  if (!fs::exists(p) && p.is_relative()) {
    if (const char* dir = std::getenv("IGEO_CONFIG_DIR")) {
      const fs::path alt = fs::path(dir) / p;
      if (fs::exists(alt)) p = alt;
    }
  }
  std::ifstream in(p);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

ReportBundle run(const RunConfig& config) {
  SuiteContext ctx;
  ctx.seed = config.seed;
  ctx.tolerances = config.tolerances;
  ctx.families = config.families;
  ReportBundle bundle;
  for (const auto& name : config.checks) bundle.append(run_suite(name, ctx));
  return bundle;
}

std::string serialize(const ReportBundle& bundle, ReportFormat format) {
  return format == ReportFormat::Json ? to_json(bundle) : to_csv(bundle);
}

}  // namespace igeo
