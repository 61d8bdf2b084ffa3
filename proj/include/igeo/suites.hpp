#pragma once

#include <map>
#include <string>
#include <vector>

#include "igeo/catalog.hpp"
#include "igeo/orbit_method.hpp"
#include "igeo/report.hpp"

namespace igeo {

/// Shared inputs of the verification suites. Families default to the
/// catalog trio (gaussian_location, gaussian_location_scale, categorical3)
/// when left empty; tolerances fall back to the pinned defaults unless
/// overridden by name.
struct SuiteContext {
  std::uint64_t seed = 42;
  std::vector<ExponentialFamily> families;
  std::map<std::string, double> tolerances;

  double tol(const std::string& name, double fallback) const {
    const auto it = tolerances.find(name);
    return it == tolerances.end() ? fallback : it->second;
  }
  std::vector<ExponentialFamily> resolved_families() const;
};

ReportBundle suite_fisher(const SuiteContext& ctx);
ReportBundle suite_kahler(const SuiteContext& ctx);
ReportBundle suite_pullback(const SuiteContext& ctx);
ReportBundle suite_equivariance(const SuiteContext& ctx);
ReportBundle suite_moment(const SuiteContext& ctx);
ReportBundle suite_orbits(const SuiteContext& ctx);
ReportBundle suite_induce(const SuiteContext& ctx);
ReportBundle suite_subrep(const SuiteContext& ctx);

const std::vector<std::string>& suite_names();
ReportBundle run_suite(const std::string& name, const SuiteContext& ctx);

/// Comoment reconstructed from omega by a composite-trapezoid line integral
/// of i_{X#} omega along the straight chart segment from (theta, 0) to each
/// evaluation point. Exact for the translation models (linear integrand);
/// used to derive candidates rather than assume them.
Comoment line_integral_comoment(const GroupAction& action, const ExponentialFamily& fam,
                                int segments = 64);

/// Sampled grid-aligned group elements for a translation model (never the
/// identity), with displacements of at most max_cells grid cells per axis.
std::vector<AlgebraElement> sample_grid_aligned(const GroupAction& action, int count, int max_cells,
                                                Rng& rng);

}  // namespace igeo
