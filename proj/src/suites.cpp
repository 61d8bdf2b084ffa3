#include "igeo/suites.hpp"

#include <cmath>
#include <functional>

namespace igeo {

namespace {

std::uint64_t mix_hash(std::uint64_t seed, const std::string& tag) {
  return fnv1a(tag + "#" + std::to_string(seed));
}

Eigen::VectorXd interior_theta(const ExponentialFamily& fam, Rng& rng) {
  Eigen::VectorXd th(fam.dim());
  for (int k = 0; k < fam.dim(); ++k) {
    const double lo = fam.domain_lo()[k];
    const double hi = fam.domain_hi()[k];
    th[k] = lo + (0.3 + 0.4 * rng.uniform()) * (hi - lo);
  }
  return th;
}

SplitTangent random_split(const TangentCoord& tc, int n, Rng& rng) {
  return SplitTangent{tc, rng.vector(n, -1.0, 1.0), rng.vector(n, -1.0, 1.0)};
}

// direct weighted sum of u(x) ut(x) p(x), kept separate from the metric path
double weighted_product_integral(const ExponentialFamily& fam, const Eigen::VectorXd& theta,
                                 const Eigen::VectorXd& u_vals, const Eigen::VectorXd& ut_vals) {
  const Eigen::VectorXd p = fam.density_values(theta);
  const auto& w = fam.space()->weights();
  KahanSum acc;
  for (Eigen::Index i = 0; i < p.size(); ++i) acc.add(w[i] * p[i] * u_vals[i] * ut_vals[i]);
  return acc.value();
}

Eigen::MatrixXd fd_log_partition_hessian(const ExponentialFamily& fam, const Eigen::VectorXd& theta,
                                         double h) {
  const int n = fam.dim();
  Eigen::MatrixXd hess(n, n);
  const auto psi = [&](const Eigen::VectorXd& t) { return fam.log_partition(t); };
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double v;
      if (i == j) {
        Eigen::VectorXd tp = theta, tm = theta;
        tp[i] += h;
        tm[i] -= h;
        v = (psi(tp) - 2.0 * psi(theta) + psi(tm)) / (h * h);
      } else {
        Eigen::VectorXd tpp = theta, tpm = theta, tmp = theta, tmm = theta;
        tpp[i] += h; tpp[j] += h;
        tpm[i] += h; tpm[j] -= h;
        tmp[i] -= h; tmp[j] += h;
        tmm[i] -= h; tmm[j] -= h;
        v = (psi(tpp) - psi(tpm) - psi(tmp) + psi(tmm)) / (4.0 * h * h);
      }
      hess(i, j) = v;
      hess(j, i) = v;
    }
  }
  return hess;
}

}  // namespace

std::vector<ExponentialFamily> SuiteContext::resolved_families() const {
  if (!families.empty()) return families;
  std::vector<ExponentialFamily> fams;
  fams.push_back(make_gaussian_location(nullptr));
  fams.push_back(make_gaussian_location_scale(nullptr));
  fams.push_back(make_categorical(3));
  return fams;
}

ReportBundle suite_fisher(const SuiteContext& ctx) {
  ReportBundle out;
  for (const auto& fam : ctx.resolved_families()) {
    Rng rng(ctx.seed ^ fnv1a(fam.name()));
    const Eigen::VectorXd theta = interior_theta(fam, rng);
    const int n = fam.dim();
    const std::uint64_t h = mix_hash(ctx.seed, "fisher." + fam.name());

    fisher_matrix(fam, theta);  // throws DegenerateMetric on failure
    out.add("fisher.positive_definite." + fam.name(), "fisher-metric-riemannian", h, 0.0, 1e-300);

    const Eigen::MatrixXd fd = fd_log_partition_hessian(fam, theta, 1e-3);
    const double hess_res = (fam.carrier_covariance(theta) - fd).cwiseAbs().maxCoeff();
    out.add("fisher.hessian_crosscheck." + fam.name(), "fisher-equals-log-partition-hessian", h,
            hess_res, ctx.tol("fisher_hessian", 1e-5));

    const DualFlatnessReport flat = dual_flatness_report(fam, theta);
    out.add("fisher.gamma1_max." + fam.name(), "exponential-connection-flat", h,
            flat.exp_flat_residual, ctx.tol("gamma1_max", 1e-8));
    out.add("fisher.mix_curvature." + fam.name(), "mixture-connection-flat", h,
            flat.mix_curvature_residual, ctx.tol("mix_curvature", 1e-4));

    double worst = 0.0;
    for (int s = 0; s < 20; ++s) {
      const Eigen::VectorXd X = rng.unit_vector(n);
      const Eigen::VectorXd Y = rng.unit_vector(n);
      const Eigen::VectorXd Z = rng.unit_vector(n);
      worst = std::max(worst, duality_residual(fam, theta, X, Y, Z));
    }
    out.add("fisher.duality." + fam.name(), "connection-pair-duality", h, worst,
            ctx.tol("duality", 1e-5));
  }
  return out;
}

ReportBundle suite_kahler(const SuiteContext& ctx) {
  ReportBundle out;
  for (const auto& fam : ctx.resolved_families()) {
    Rng rng(ctx.seed ^ fnv1a("kahler" + fam.name()));
    const int n = fam.dim();
    const Eigen::VectorXd theta = interior_theta(fam, rng);
    const TangentCoord tc{theta, rng.vector(n, -1.0, 1.0)};
    const std::uint64_t h = mix_hash(ctx.seed, "kahler." + fam.name());

    double jj = 0.0, compat = 0.0;
    const MetricTensor metric = fisher_matrix(fam, theta);
    for (int s = 0; s < 8; ++s) {
      const SplitTangent w = random_split(tc, n, rng);
      const SplitTangent wt = random_split(tc, n, rng);
      const SplitTangent w2 = dom_complex(dom_complex(w));
      jj = std::max(jj, (w2.horiz + w.horiz).cwiseAbs().maxCoeff());
      jj = std::max(jj, (w2.vert + w.vert).cwiseAbs().maxCoeff());
      compat = std::max(compat, std::abs(dom_symplectic(metric, w, wt) -
                                         dom_metric(metric, dom_complex(w), wt)));
    }
    out.add("kahler.complex_square." + fam.name(), "J-squared-is-minus-identity", h, jj,
            ctx.tol("kahler_algebra", 1e-12));
    out.add("kahler.compatibility." + fam.name(), "omega-equals-g-of-Jw", h, compat,
            ctx.tol("kahler_algebra", 1e-12));

    const Eigen::MatrixXd omega = dom_symplectic_gram(fam, tc);
    const double deth = metric.entries.determinant();
    const double det_rel = std::abs(omega.determinant() - deth * deth) / (deth * deth);
    out.add("kahler.omega_determinant." + fam.name(), "omega-nondegenerate", h, det_rel,
            ctx.tol("omega_det_rel", 1e-9));

    out.add("kahler.closedness." + fam.name(), "omega-closed", h,
            symplectic_closedness_residual(fam, theta), ctx.tol("domega", 1e-5));

    out.add("kahler.cotangent." + fam.name(), "cotangent-form-identification", h,
            cotangent_form_residual(fam, theta, tc.coeffs), ctx.tol("cotangent", 1e-12));
  }
  return out;
}

ReportBundle suite_pullback(const SuiteContext& ctx) {
  ReportBundle out;
  for (const auto& fam : ctx.resolved_families()) {
    Rng rng(ctx.seed ^ fnv1a("pullback" + fam.name()));
    const int n = fam.dim();
    const std::uint64_t h = mix_hash(ctx.seed, "pullback." + fam.name());

    double worst_g = 0.0, worst_o = 0.0;
    double case_vv = 0.0, case_hh = 0.0, case_mixed = 0.0;
    for (int pt = 0; pt < 5; ++pt) {
      const TangentCoord tc{interior_theta(fam, rng), rng.vector(n, -1.0, 1.0)};

      std::vector<L2Function> dphi;
      for (int a = 0; a < 2 * n; ++a) {
        SplitTangent w{tc, Eigen::VectorXd::Zero(n), Eigen::VectorXd::Zero(n)};
        if (a < n)
          w.horiz[a] = 1.0;
        else
          w.vert[a - n] = 1.0;
        dphi.push_back(embed_differential(fam, tc, w));
      }
      const ProjectivePoint z0 = ProjectivePoint::from(embed(fam, tc));
      Eigen::MatrixXcd fs(2 * n, 2 * n);
      for (int a = 0; a < 2 * n; ++a)
        for (int b = 0; b < 2 * n; ++b) fs(a, b) = fubini_study(z0, dphi[a], dphi[b]);

      const Eigen::MatrixXd gg = 0.25 * dom_metric_gram(fam, tc);
      const Eigen::MatrixXd go = 0.25 * dom_symplectic_gram(fam, tc);
      worst_g = std::max(worst_g,
                         (fs.real() - gg).cwiseAbs().maxCoeff() / gg.cwiseAbs().maxCoeff());
      worst_o = std::max(worst_o,
                         (fs.imag() - go).cwiseAbs().maxCoeff() / go.cwiseAbs().maxCoeff());

      // case table of the quarter-factor identity
      const Eigen::VectorXd a = rng.vector(n, -1.0, 1.0);
      const Eigen::VectorXd b = rng.vector(n, -1.0, 1.0);
      const SplitTangent vert_a{tc, Eigen::VectorXd::Zero(n), a};
      const SplitTangent vert_b{tc, Eigen::VectorXd::Zero(n), b};
      const SplitTangent hor_a{tc, a, Eigen::VectorXd::Zero(n)};
      const SplitTangent hor_b{tc, b, Eigen::VectorXd::Zero(n)};
      case_vv = std::max(case_vv,
                         std::abs(fubini_study_pullback(fam, tc, vert_a, vert_b).imag()));
      case_hh = std::max(case_hh,
                         std::abs(fubini_study_pullback(fam, tc, hor_a, hor_b).imag()));
      const double cross = weighted_product_integral(
          fam, tc.base, fam.tangent_values(TangentCoord{tc.base, a}),
          fam.tangent_values(TangentCoord{tc.base, b}));
      case_mixed = std::max(
          case_mixed,
          std::abs(fubini_study_pullback(fam, tc, hor_a, vert_b).imag() - 0.25 * cross));
      case_mixed = std::max(
          case_mixed,
          std::abs(fubini_study_pullback(fam, tc, vert_a, hor_b).imag() + 0.25 * cross));
    }
    out.add("pullback.gram_metric." + fam.name(), "quarter-factor-metric-pullback", h, worst_g,
            ctx.tol("pullback_gram_rel", 1e-5));
    out.add("pullback.gram_symplectic." + fam.name(), "quarter-factor-symplectic-pullback", h,
            worst_o, ctx.tol("pullback_gram_rel", 1e-5));
    out.add("pullback.case_vertical." + fam.name(), "vertical-pair-symplectic-pullback-vanishes",
            h, case_vv, ctx.tol("pullback_case_abs", 1e-6));
    out.add("pullback.case_horizontal." + fam.name(),
            "horizontal-pair-symplectic-pullback-vanishes", h, case_hh,
            ctx.tol("pullback_case_abs", 1e-6));
    out.add("pullback.case_mixed." + fam.name(), "mixed-pair-symplectic-pullback-quarter-integral",
            h, case_mixed, ctx.tol("pullback_case_abs", 1e-6));
  }
  return out;
}

std::vector<AlgebraElement> sample_grid_aligned(const GroupAction& action, int count, int max_cells,
                                                Rng& rng) {
  const auto& space = *action.space();
  const Eigen::MatrixXd& disp = action.displacement_map();
  const auto pinv = disp.completeOrthogonalDecomposition();
  std::vector<AlgebraElement> out;
  for (int s = 0; s < count; ++s) {
    Eigen::VectorXd d(space.point_dim());
    for (int a = 0; a < space.point_dim(); ++a) {
      std::int64_t k = 0;
      while (k == 0) k = rng.uniform_int(-max_cells, max_cells);
      d[a] = static_cast<double>(k) * space.spacing()[a];
    }
    AlgebraElement g = pinv.solve(d);
    for (const auto& sb : action.stabilizer_basis()) g += rng.uniform(-1.0, 1.0) * sb;
    out.push_back(std::move(g));
  }
  return out;
}

ReportBundle suite_equivariance(const SuiteContext& ctx) {
  ReportBundle out;
  Rng rng(ctx.seed ^ fnv1a("equivariance"));

  // 1-d Gaussian location model on a periodic grid under R-translation
  {
    SpacePtr space = default_gaussian_space();
    const ExponentialFamily fam = make_gaussian_location(space);
    const GroupAction action = make_gaussian_translation_model(space);
    const std::uint64_t h = mix_hash(ctx.seed, "equivariance.gaussian");
    const auto gs = sample_grid_aligned(action, 10, 64, rng);

    double equi = 0.0, isom = 0.0, pres_g = 0.0, pres_o = 0.0;
    for (const auto& g : gs) {
      const TangentCoord tc{rng.vector(1, -1.0, 1.0), rng.vector(1, -1.0, 1.0)};
      equi = std::max(equi, equivariance_residual(action, g, fam, tc));
      isom = std::max(isom, isometry_residual(action, g, fam, tc.base, rng.vector(1, -1.0, 1.0),
                                              rng.vector(1, -1.0, 1.0)));
      const SplitTangent w = random_split(tc, 1, rng);
      const SplitTangent wt = random_split(tc, 1, rng);
      const KahlerPreservation kp = kahler_preservation_residual(action, g, fam, tc, w, wt);
      pres_g = std::max(pres_g, kp.g_res);
      pres_o = std::max(pres_o, kp.omega_res);
    }
    out.add("equivariance.embed.gaussian_location", "embedding-equivariance", h, equi,
            ctx.tol("equivariance", 1e-10));
    out.add("equivariance.isometry.gaussian_location", "fisher-isometry", h, isom,
            ctx.tol("isometry", 1e-8));
    out.add("equivariance.kahler_g.gaussian_location", "kahler-metric-preserved", h, pres_g,
            ctx.tol("kahler_preserve", 1e-8));
    out.add("equivariance.kahler_omega.gaussian_location", "kahler-form-preserved", h, pres_o,
            ctx.tol("kahler_preserve", 1e-8));

    // action laws on the node set
    const auto& g1 = gs[0];
    const auto& g2 = gs[1];
    const auto p1 = action.node_permutation(g1);
    const auto p2 = action.node_permutation(g2);
    const auto p12 = action.node_permutation(action.algebra().bch(g1, g2));
    double law = 0.0;
    for (std::size_t j = 0; j < p1.size(); ++j)
      law = std::max(law, static_cast<double>(p12[j] != p1[p2[j]]));
    out.add("equivariance.action_law.gaussian_location", "action-composition-law", h, law, 1e-300);

    const Eigen::VectorXd f =
        space->tabulate([](const Eigen::VectorXd& x) { return std::exp(std::sin(x[0] * 0.39)); });
    Eigen::VectorXd fg(f.size());
    std::vector<std::size_t> inv(p1.size());
    for (std::size_t j = 0; j < p1.size(); ++j) inv[p1[j]] = j;
    for (std::size_t j = 0; j < p1.size(); ++j)
      fg[static_cast<Eigen::Index>(j)] = f[static_cast<Eigen::Index>(inv[j])];
    out.add("equivariance.measure_invariance.gaussian_location", "action-preserves-measure", h,
            std::abs(space->integrate(fg) - space->integrate(f)), ctx.tol("measure", 1e-12));
  }

  // categorical relabeling model: the pushforward is exact
  {
    const ExponentialFamily fam = make_categorical(5);
    const GroupAction action = make_categorical_cycle_model(fam.space());
    const std::uint64_t h = mix_hash(ctx.seed, "equivariance.categorical");
    double equi = 0.0, isom_uniform = 0.0, isom = 0.0;
    for (int s = 0; s < 5; ++s) {
      AlgebraElement g(1);
      g[0] = static_cast<double>(rng.uniform_int(1, 4));
      const TangentCoord tc{rng.vector(4, -1.0, 1.0), rng.vector(4, -1.0, 1.0)};
      equi = std::max(equi, equivariance_residual(action, g, fam, tc));
      isom = std::max(isom, isometry_residual(action, g, fam, tc.base, rng.vector(4, -1.0, 1.0),
                                              rng.vector(4, -1.0, 1.0)));
      isom_uniform = std::max(
          isom_uniform, isometry_residual(action, g, fam, Eigen::VectorXd::Zero(4),
                                          rng.vector(4, -1.0, 1.0), rng.vector(4, -1.0, 1.0)));
    }
    out.add("equivariance.embed.categorical", "embedding-equivariance-exact-relabeling", h, equi,
            0.0);
    out.add("equivariance.isometry_uniform.categorical", "fisher-isometry", h, isom_uniform,
            ctx.tol("isometry_exactpoint", 1e-12));
    out.add("equivariance.isometry.categorical", "fisher-isometry", h, isom,
            ctx.tol("isometry", 1e-8));
  }

  // 2-d Gaussian location model under R^2
  {
    SpacePtr space = default_gaussian_space_2d();
    const ExponentialFamily fam = make_gaussian_location_nd(space);
    const GroupAction action = make_gaussian_translation_model_2d(space);
    const std::uint64_t h = mix_hash(ctx.seed, "equivariance.gaussian2d");
    const auto gs = sample_grid_aligned(action, 4, 8, rng);
    double equi = 0.0, isom = 0.0;
    for (const auto& g : gs) {
      const TangentCoord tc{rng.vector(2, -0.5, 0.5), rng.vector(2, -1.0, 1.0)};
      equi = std::max(equi, equivariance_residual(action, g, fam, tc));
      isom = std::max(isom, isometry_residual(action, g, fam, tc.base, rng.vector(2, -1.0, 1.0),
                                              rng.vector(2, -1.0, 1.0)));
    }
    out.add("equivariance.embed.gaussian_location_2d", "embedding-equivariance", h, equi,
            ctx.tol("equivariance", 1e-10));
    out.add("equivariance.isometry.gaussian_location_2d", "fisher-isometry", h, isom,
            ctx.tol("isometry", 1e-8));
  }

  return out;
}

Comoment line_integral_comoment(const GroupAction& action, const ExponentialFamily& fam,
                                int segments) {
  const GroupAction* act = &action;
  const ExponentialFamily* family = &fam;
  return [act, family, segments](const AlgebraElement& x) -> ChartFunction {
    const AlgebraElement xv = x;
    return [act, family, segments, xv](const TangentCoord& tc) {
      // integrate omega(X#, d/ds (theta, s v)) over s in [0, 1]
      KahanSum acc;
      for (int s = 0; s <= segments; ++s) {
        const double t = static_cast<double>(s) / segments;
        const TangentCoord at{tc.base, t * tc.coeffs};
        const SplitTangent xs = fundamental_field(*act, xv, *family, at);
        const SplitTangent probe{at, Eigen::VectorXd::Zero(tc.base.size()), tc.coeffs};
        const double val = dom_symplectic(*family, xs, probe);
        acc.add((s == 0 || s == segments ? 0.5 : 1.0) * val / segments);
      }
      return acc.value();
    };
  };
}

ReportBundle suite_moment(const SuiteContext& ctx) {
  ReportBundle out;
  Rng rng(ctx.seed ^ fnv1a("moment"));
  SpacePtr space = default_gaussian_space();
  const ExponentialFamily fam = make_gaussian_location(space);
  const GroupAction action = make_redundant_translation_model(space);
  const LieAlgebra& alg = action.algebra();
  const std::uint64_t h = mix_hash(ctx.seed, "moment.redundant_translation");

  const Comoment derived = line_integral_comoment(action, fam);
  const Comoment closed = translation_comoment(action, fam);

  double agree = 0.0, resid = 0.0, shift_change = 0.0;
  for (int s = 0; s < 6; ++s) {
    const AlgebraElement x = rng.vector(2, -1.5, 1.5);
    const TangentCoord tc{rng.vector(1, -1.0, 1.0), rng.vector(1, -1.0, 1.0)};
    agree = std::max(agree, std::abs(derived(x)(tc) - closed(x)(tc)));
    const SplitTangent probe = random_split(tc, 1, rng);
    const double r0 = moment_residual(action, fam, derived, x, tc, probe);
    resid = std::max(resid, r0);

    Eigen::VectorXd c = rng.vector(2, -1.0, 1.0);  // [g,g] = 0: every c is admissible
    const Comoment shifted = shift_comoment(derived, c, alg);
    shift_change = std::max(shift_change,
                            std::abs(moment_residual(action, fam, shifted, x, tc, probe) - r0));
  }
  out.add("moment.line_integral_agrees.redundant_translation",
          "derived-comoment-matches-closed-form", h, agree, ctx.tol("moment_agree", 1e-9));
  out.add("moment.hamiltonian_residual.redundant_translation", "comoment-differential-matches-omega",
          h, resid, ctx.tol("moment", 1e-6));
  out.add("moment.shift_preserves_residual.redundant_translation",
          "comoment-shift-preserves-residual", h, shift_change, ctx.tol("moment_shift", 1e-12));

  // stabilizer direction: vanishing fundamental field and constant comoment
  const AlgebraElement xn = Eigen::VectorXd::Unit(2, 1);
  const TangentCoord tc0{rng.vector(1, -1.0, 1.0), rng.vector(1, -1.0, 1.0)};
  const SplitTangent xs = fundamental_field(action, xn, fam, tc0);
  out.add("moment.stabilizer_field.redundant_translation", "stabilizer-fundamental-field-vanishes",
          h, std::max(xs.horiz.cwiseAbs().maxCoeff(), xs.vert.cwiseAbs().maxCoeff()),
          ctx.tol("moment_const", 1e-8));

  double const_dev = 0.0;
  const double base_val = derived(xn)(tc0);
  for (int s = 0; s < 8; ++s) {
    const AlgebraElement flow = rng.vector(2, -1.0, 1.0);
    const TangentCoord moved = act_tangent(action, flow, fam, tc0);
    const_dev = std::max(const_dev, std::abs(derived(xn)(moved) - base_val));
  }
  out.add("moment.stabilizer_constancy.redundant_translation", "stabilizer-comoment-constant", h,
          const_dev, ctx.tol("moment_const", 1e-8));

  // a shift with <c, n-part> equal to the stabilizer comoment makes the
  // shifted comoment vanish on n (here mu*(e2) = 0, so c2 = 0 works)
  Eigen::VectorXd c2(2);
  c2 << 0.4, 0.0;
  const Comoment shifted = shift_comoment(derived, c2, alg);
  out.add("moment.shifted_annihilates_stabilizer.redundant_translation",
          "shifted-comoment-vanishes-on-stabilizer", h, std::abs(shifted(xn)(tc0)),
          ctx.tol("moment_shift", 1e-12));
  return out;
}

ReportBundle suite_orbits(const SuiteContext& ctx) {
  ReportBundle out;
  Rng rng(ctx.seed ^ fnv1a("orbits"));
  const std::uint64_t h = mix_hash(ctx.seed, "orbits");

  // BCH associativity and inverse, adjoint automorphism
  for (const std::string name : {"heisenberg3", "filiform4"}) {
    const LieAlgebra alg = algebra_by_name(name);
    const int n = alg.dim();
    double assoc = 0.0, inverse = 0.0, auto_res = 0.0;
    for (int s = 0; s < 20; ++s) {
      const AlgebraElement x = rng.vector(n, -1.5, 1.5);
      const AlgebraElement y = rng.vector(n, -1.5, 1.5);
      const AlgebraElement z = rng.vector(n, -1.5, 1.5);
      assoc = std::max(assoc,
                       (alg.bch(alg.bch(x, y), z) - alg.bch(x, alg.bch(y, z))).cwiseAbs().maxCoeff());
      inverse = std::max(inverse, alg.bch(x, -x).cwiseAbs().maxCoeff());
      const Eigen::MatrixXd ad = alg.adjoint_exp(z);
      auto_res = std::max(auto_res,
                          (ad * alg.bracket(x, y) - alg.bracket(ad * x, ad * y)).cwiseAbs().maxCoeff());
    }
    out.add("orbits.bch_associative." + name, "bch-group-law-associative", h, assoc,
            ctx.tol("bch_assoc", 1e-12));
    out.add("orbits.bch_inverse." + name, "bch-inverse-exact", h, inverse, 1e-300);
    out.add("orbits.adjoint_automorphism." + name, "adjoint-is-automorphism", h, auto_res,
            ctx.tol("ad_auto", 1e-12));
  }

  // Heisenberg coadjoint-orbit sweep: dimension 2 iff lambda(Z) != 0
  {
    const LieAlgebra alg = LieAlgebra::heisenberg(3);
    int mismatches = 0;
    for (int s = 0; s < 100; ++s) {
      DualElement lam = rng.vector(3, -2.0, 2.0);
      if (s % 2 == 0) lam[2] = 0.0;
      const int expected = lam[2] != 0.0 ? 2 : 0;
      if (alg.orbit_dimension(lam) != expected) ++mismatches;
      // orbit samples stay on the plane lambda_3 = const
      if (lam[2] != 0.0) {
        const CoadjointOrbit orb = orbit_of(alg, lam, 8, ctx.seed + s);
        for (const auto& pt : orb.samples)
          if (std::abs(pt[2] - lam[2]) > 1e-12) ++mismatches;
      }
    }
    out.add("orbits.heisenberg_sweep", "heisenberg-orbit-dimensions", h,
            static_cast<double>(mismatches), 1e-300);
  }

  // coadjoint action law
  {
    const LieAlgebra alg = LieAlgebra::heisenberg(3);
    double law = 0.0;
    for (int s = 0; s < 10; ++s) {
      const AlgebraElement g1 = rng.vector(3, -1.0, 1.0);
      const AlgebraElement g2 = rng.vector(3, -1.0, 1.0);
      const DualElement lam = rng.vector(3, -1.0, 1.0);
      law = std::max(law, (alg.coadjoint(g1, alg.coadjoint(g2, lam)) -
                           alg.coadjoint(alg.bch(g1, g2), lam)).cwiseAbs().maxCoeff());
    }
    out.add("orbits.coadjoint_action_law", "coadjoint-action-composition", h, law,
            ctx.tol("coadjoint_law", 1e-10));
  }

  // polarization dimension relation and character homomorphism on the catalog
  {
    int dim_mismatches = 0;
    double hom = 0.0;
    const auto check_pair = [&](const LieAlgebra& alg, const DualElement& lam) {
      const Polarization pol = polarize(alg, lam);
      const int expected = alg.dim() - alg.orbit_dimension(lam) / 2;
      if (static_cast<int>(pol.basis.size()) != expected) ++dim_mismatches;
      Eigen::MatrixXd basis(alg.dim(), static_cast<Eigen::Index>(pol.basis.size()));
      for (std::size_t j = 0; j < pol.basis.size(); ++j)
        basis.col(static_cast<Eigen::Index>(j)) = pol.basis[j];
      for (int s = 0; s < 6; ++s) {
        const AlgebraElement x = basis * rng.vector(static_cast<int>(pol.basis.size()), -1.0, 1.0);
        const AlgebraElement y = basis * rng.vector(static_cast<int>(pol.basis.size()), -1.0, 1.0);
        hom = std::max(hom, std::abs(character(alg, pol, alg.bch(x, y)) -
                                     character(alg, pol, x) * character(alg, pol, y)));
      }
    };
    for (int s = 0; s < 4; ++s) {
      check_pair(LieAlgebra::abelian(1), rng.vector(1, -2.0, 2.0));
      check_pair(LieAlgebra::abelian(2), rng.vector(2, -2.0, 2.0));
      DualElement lam3 = rng.vector(3, -2.0, 2.0);
      lam3[2] = (s % 2 == 0) ? 1.0 + rng.uniform() : 0.0;
      check_pair(LieAlgebra::heisenberg(3), lam3);
      DualElement lam5 = rng.vector(5, -2.0, 2.0);
      lam5[4] = (s % 2 == 0) ? 1.0 + rng.uniform() : 0.0;
      check_pair(LieAlgebra::heisenberg(5), lam5);
      check_pair(LieAlgebra::filiform4(), rng.vector(4, -2.0, 2.0));
    }
    out.add("orbits.polarization_dimension", "polarization-dimension-relation", h,
            static_cast<double>(dim_mismatches), 1e-300);
    out.add("orbits.character_homomorphism", "character-is-homomorphism", h, hom,
            ctx.tol("polarization_hom", 1e-12));
  }

  return out;
}

ReportBundle suite_induce(const SuiteContext& ctx) {
  ReportBundle out;
  Rng rng(ctx.seed ^ fnv1a("induce"));
  const std::uint64_t h = mix_hash(ctx.seed, "induce");
  const int grid_n = 256;
  const PeriodicLattice lat = PeriodicLattice::cubic(1, 0.0, 1.0, grid_n);

  const auto unitarity = [&](const Eigen::MatrixXcd& m) {
    return (m.adjoint() * m - Eigen::MatrixXcd::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
  };

  // abelian regular representation: trivial subgroup, pure shifts
  {
    const LieAlgebra alg = LieAlgebra::abelian(1);
    const Polarization trivial{std::vector<AlgebraElement>{}, Eigen::VectorXd::Zero(1)};
    double uni = 0.0, comp = 0.0;
    for (int s = 0; s < 20; ++s) {
      AlgebraElement g1(1), g2(1);
      g1[0] = static_cast<double>(rng.uniform_int(-grid_n / 2, grid_n / 2)) / grid_n;
      g2[0] = static_cast<double>(rng.uniform_int(-grid_n / 2, grid_n / 2)) / grid_n;
      const Eigen::MatrixXcd m1 = induced_rep_operator(alg, trivial, g1, lat);
      const Eigen::MatrixXcd m2 = induced_rep_operator(alg, trivial, g2, lat);
      const Eigen::MatrixXcd m12 = induced_rep_operator(alg, trivial, alg.bch(g1, g2), lat);
      uni = std::max(uni, unitarity(m1));
      comp = std::max(comp, (m1 * m2 - m12).cwiseAbs().maxCoeff());
    }
    out.add("induce.unitary.abelian", "induced-operator-unitary", h, uni, ctx.tol("unitary", 1e-12));
    out.add("induce.composition.abelian", "induced-operator-homomorphism", h, comp,
            ctx.tol("composition", 1e-10));
  }

  // Heisenberg with central character
  {
    const LieAlgebra alg = LieAlgebra::heisenberg(3);
    DualElement lam(3);
    lam << 0.0, 0.0, 1.0;
    const Polarization pol = polarize(alg, lam);
    const std::vector<int> comp_idx = complement_indices(3, pol.basis);
    const auto sample = [&]() {
      AlgebraElement g = Eigen::VectorXd::Zero(3);
      for (int i = 0; i < 3; ++i) {
        if (i == comp_idx[0])
          g[i] = static_cast<double>(rng.uniform_int(-grid_n / 4, grid_n / 4)) / grid_n;
        else if (i == 2)
          g[i] = rng.uniform(-1.0, 1.0);
        else
          g[i] = static_cast<double>(rng.uniform_int(-3, 3));  // modulation frequencies
      }
      return g;
    };
    double uni = 0.0, comp = 0.0;
    for (int s = 0; s < 20; ++s) {
      const AlgebraElement g1 = sample();
      const AlgebraElement g2 = sample();
      const Eigen::MatrixXcd m1 = induced_rep_operator(alg, pol, g1, lat);
      const Eigen::MatrixXcd m2 = induced_rep_operator(alg, pol, g2, lat);
      const Eigen::MatrixXcd m12 = induced_rep_operator(alg, pol, alg.bch(g1, g2), lat);
      uni = std::max(uni, unitarity(m1));
      comp = std::max(comp, (m1 * m2 - m12).cwiseAbs().maxCoeff());
    }
    out.add("induce.unitary.heisenberg", "induced-operator-unitary", h, uni,
            ctx.tol("unitary", 1e-12));
    out.add("induce.composition.heisenberg", "induced-operator-homomorphism", h, comp,
            ctx.tol("composition", 1e-10));

    // two functionals on one orbit give operators conjugate by the
    // permutation of the group element connecting them
    AlgebraElement g0 = Eigen::VectorXd::Zero(3);
    g0[comp_idx[0]] = 16.0 / grid_n;
    const DualElement lam2 = alg.coadjoint(g0, lam);
    const Polarization pol2 = polarize(alg, lam2);
    const Eigen::MatrixXcd u = induced_rep_operator(alg, pol, g0, lat);
    double twist = 0.0;
    for (int s = 0; s < 5; ++s) {
      const AlgebraElement g = sample();
      const Eigen::MatrixXcd a = induced_rep_operator(alg, pol2, g, lat);
      const Eigen::MatrixXcd b = u.adjoint() * induced_rep_operator(alg, pol, g, lat) * u;
      twist = std::max(twist, (a - b).cwiseAbs().maxCoeff());
    }
    out.add("induce.orbit_equivalence.heisenberg", "same-orbit-operators-intertwined", h, twist,
            ctx.tol("composition", 1e-10));
  }

  return out;
}

ReportBundle suite_subrep(const SuiteContext& ctx) {
  ReportBundle out;
  Rng rng(ctx.seed ^ fnv1a("subrep"));
  const std::uint64_t h = mix_hash(ctx.seed, "subrep");

  // abelian G = R on a 1024-node circle, 16 integer frequencies
  {
    const LieAlgebra alg = LieAlgebra::abelian(1);
    const int grid_n = 1024;
    const PeriodicLattice lat = PeriodicLattice::cubic(1, 0.0, 1.0, grid_n);
    std::vector<AlgebraElement> gs;
    for (int s = 0; s < 6; ++s) {
      AlgebraElement g(1);
      g[0] = static_cast<double>(rng.uniform_int(-grid_n / 2, grid_n / 2)) / grid_n;
      gs.push_back(g);
    }
    double worst = 0.0;
    std::vector<Eigen::VectorXcd> basis_funcs;
    for (int k = 1; k <= 8; ++k) {
      for (const double sign : {1.0, -1.0}) {
        DualElement lam(1);
        lam[0] = sign * k;
        worst = std::max(worst, subrep_residual(alg, {}, lam, lat, gs));
        basis_funcs.push_back(subrep_basis_function(alg, {}, lam, lat).normalized());
      }
    }
    out.add("subrep.abelian", "subrepresentation-of-left-translation", h, worst,
            ctx.tol("subrep_abelian", 1e-12));

    double ortho = 0.0;
    for (std::size_t a = 0; a < basis_funcs.size(); ++a)
      for (std::size_t b = a + 1; b < basis_funcs.size(); ++b)
        ortho = std::max(ortho, std::abs(basis_funcs[a].dot(basis_funcs[b])));
    out.add("subrep.orthogonality", "distinct-orbit-subspaces-orthogonal", h, ortho,
            ctx.tol("subrep_orth", 1e-12));
  }

  // Heisenberg group acting on G/Z: functionals annihilating the center
  {
    const LieAlgebra alg = LieAlgebra::heisenberg(3);
    const std::vector<AlgebraElement> stab{Eigen::VectorXd::Unit(3, 2)};
    const int grid_n = 64;
    const PeriodicLattice lat = PeriodicLattice::cubic(2, 0.0, 1.0, grid_n);
    std::vector<AlgebraElement> gs;
    for (int s = 0; s < 6; ++s) {
      AlgebraElement g(3);
      g[0] = static_cast<double>(rng.uniform_int(-grid_n / 2, grid_n / 2)) / grid_n;
      g[1] = static_cast<double>(rng.uniform_int(-grid_n / 2, grid_n / 2)) / grid_n;
      g[2] = rng.uniform(-1.0, 1.0);
      gs.push_back(g);
    }
    double worst = 0.0;
    for (int s = 0; s < 6; ++s) {
      DualElement lam(3);
      lam << static_cast<double>(rng.uniform_int(-8, 8)), static_cast<double>(rng.uniform_int(-8, 8)),
          0.0;
      worst = std::max(worst, subrep_residual(alg, stab, lam, lat, gs));
    }
    out.add("subrep.heisenberg_quotient", "subrepresentation-of-left-translation", h, worst,
            ctx.tol("subrep_quotient", 1e-10));

    // pushforward measure through G/N -> G/H on nested lattices
    const PeriodicLattice coarse = PeriodicLattice::cubic(1, 0.0, 1.0, grid_n);
    Eigen::VectorXd pushed = Eigen::VectorXd::Zero(grid_n);
    KahanSum direct;
    const auto f = [](double x) { return std::cos(2.0 * M_PI * x) + 0.25 * x; };
    for (std::size_t idx = 0; idx < lat.size(); ++idx) {
      const Eigen::VectorXd x = lat.node(idx);
      pushed[static_cast<Eigen::Index>(coarse.locate(x.head(1)))] += lat.cell_weight();
      direct.add(f(x[0]) * lat.cell_weight());
    }
    KahanSum lhs;
    for (int j = 0; j < grid_n; ++j) lhs.add(f(coarse.node(static_cast<std::size_t>(j))[0]) * pushed[j]);
    out.add("subrep.pushforward_measure", "pushforward-measure-identity", h,
            std::abs(lhs.value() - direct.value()), ctx.tol("pushforward", 1e-13));
  }

  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"fisher",  "kahler", "pullback", "equivariance",
                                              "moment",  "orbits", "induce",   "subrep"};
  return names;
}

ReportBundle run_suite(const std::string& name, const SuiteContext& ctx) {
  if (name == "fisher") return suite_fisher(ctx);
  if (name == "kahler") return suite_kahler(ctx);
  if (name == "pullback") return suite_pullback(ctx);
  if (name == "equivariance") return suite_equivariance(ctx);
  if (name == "moment") return suite_moment(ctx);
  if (name == "orbits") return suite_orbits(ctx);
  if (name == "induce") return suite_induce(ctx);
  if (name == "subrep") return suite_subrep(ctx);
  throw ConfigError("unknown check suite: " + name);
}

}  // namespace igeo
