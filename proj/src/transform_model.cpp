#include "igeo/transform_model.hpp"

#include <cmath>

#include "igeo/numerics.hpp"

namespace igeo {

GroupAction::GroupAction(Kind kind, LieAlgebra algebra, SpacePtr space,
                         Eigen::MatrixXd displacement_map, std::vector<AlgebraElement> stabilizer,
                         bool parameter_action, std::string name)
    : kind_(kind),
      algebra_(std::move(algebra)),
      space_(std::move(space)),
      displacement_map_(std::move(displacement_map)),
      stabilizer_(std::move(stabilizer)),
      parameter_action_(parameter_action),
      name_(std::move(name)) {}

GroupAction GroupAction::translation(LieAlgebra algebra, SpacePtr space,
                                     Eigen::MatrixXd displacement_map,
                                     std::vector<AlgebraElement> stabilizer, bool parameter_action,
                                     std::string name) {
  if (!space) throw InvalidDescriptor(name + ": null sample space");
  if (displacement_map.rows() != space->point_dim() || displacement_map.cols() != algebra.dim())
    throw InvalidDescriptor(name + ": displacement map shape mismatch");
  for (const auto& s : stabilizer) {
    algebra.require_dim(s, "stabilizer vector");
    if ((displacement_map * s).cwiseAbs().maxCoeff() > 1e-14)
      throw InvalidDescriptor(name + ": stabilizer vector acts nontrivially");
  }
  return GroupAction(Kind::Translation, std::move(algebra), std::move(space),
                     std::move(displacement_map), std::move(stabilizer), parameter_action,
                     std::move(name));
}

GroupAction GroupAction::categorical_cycle(SpacePtr finite_space) {
  if (!finite_space) throw InvalidDescriptor("categorical_cycle: null sample space");
  if (!std::holds_alternative<FiniteCounting>(finite_space->descriptor()))
    throw InvalidDescriptor("categorical_cycle: needs a finite counting space");
  return GroupAction(Kind::CategoricalCycle, LieAlgebra::abelian(1), std::move(finite_space),
                     Eigen::MatrixXd::Zero(1, 1), {}, true, "categorical_cycle");
}

namespace {

long integer_shift(const AlgebraElement& g, std::size_t atoms) {
  const double k = g[0];
  const double kr = std::round(k);
  if (std::abs(k - kr) > 1e-9)
    throw ActionLeavesGrid("categorical_cycle: non-integer shift does not permute atoms");
  const long n = static_cast<long>(atoms);
  return ((static_cast<long>(kr) % n) + n) % n;
}

}  // namespace

std::vector<std::size_t> GroupAction::node_permutation(const AlgebraElement& g) const {
  algebra_.require_dim(g, "group element");
  if (kind_ == Kind::CategoricalCycle) {
    const std::size_t n = space_->size();
    const long m = integer_shift(g, n);
    std::vector<std::size_t> perm(n);
    for (std::size_t j = 0; j < n; ++j) perm[j] = (j + static_cast<std::size_t>(m)) % n;
    return perm;
  }
  return space_->translation_permutation(displacement_map_ * g);
}

Eigen::VectorXd GroupAction::act_param(const AlgebraElement& g, const Eigen::VectorXd& theta) const {
  algebra_.require_dim(g, "group element");
  if (kind_ == Kind::Translation) {
    if (!parameter_action_)
      throw Error(name_ + ": model carries no exponential family / parameter action");
    return theta + displacement_map_ * g;
  }
  // categorical relabeling with the last atom fixing the gauge
  const std::size_t atoms = space_->size();
  const long m = integer_shift(g, atoms);
  Eigen::VectorXd eta = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(atoms));
  eta.head(theta.size()) = theta;
  const auto inv = [&](std::size_t j) { return (j + atoms - static_cast<std::size_t>(m)) % atoms; };
  Eigen::VectorXd out(theta.size());
  const double gauge = eta[static_cast<Eigen::Index>(inv(atoms - 1))];
  for (Eigen::Index j = 0; j < theta.size(); ++j)
    out[j] = eta[static_cast<Eigen::Index>(inv(static_cast<std::size_t>(j)))] - gauge;
  return out;
}

TangentCoord GroupAction::act_tangent_chart(const AlgebraElement& g, const TangentCoord& tc) const {
  if (kind_ == Kind::Translation) return TangentCoord{act_param(g, tc.base), tc.coeffs};
  return TangentCoord{act_param(g, tc.base), act_param(g, tc.coeffs)};
}

L2Function act_density(const GroupAction& action, const AlgebraElement& g,
                       const ExponentialFamily& fam, const Eigen::VectorXd& theta) {
  if (fam.space() != action.space())
    throw SpaceMismatch(action.name() + ": family lives on a different space");
  const auto perm = action.node_permutation(g);
  std::vector<std::size_t> inv(perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) inv[perm[j]] = j;
  const Eigen::VectorXd p = fam.density_values(theta);
  Eigen::VectorXd out(p.size());
  for (std::size_t j = 0; j < perm.size(); ++j)
    out[static_cast<Eigen::Index>(j)] = p[static_cast<Eigen::Index>(inv[j])];
  return L2Function::real_valued(fam.space(), out);
}

TangentCoord act_tangent(const GroupAction& action, const AlgebraElement& g,
                         const ExponentialFamily& fam, const TangentCoord& tc) {
  if (tc.base.size() != fam.dim() || tc.coeffs.size() != fam.dim())
    throw DimMismatch(action.name() + ": tangent coordinate dimension mismatch");
  return action.act_tangent_chart(g, tc);
}

double equivariance_residual(const GroupAction& action, const AlgebraElement& g,
                             const ExponentialFamily& fam, const TangentCoord& tc) {
  if (fam.space() != action.space())
    throw SpaceMismatch(action.name() + ": family lives on a different space");
  const auto perm = action.node_permutation(g);
  std::vector<std::size_t> inv(perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) inv[perm[j]] = j;

  const L2Function phi = embed(fam, tc);
  Eigen::VectorXcd lhs;
  if (action.relabel_exact()) {
    // The acted TM point of a finite relabeling is represented by its
    // permuted value tables; Phi applied to those tables is the exact
    // pushforward.
    const Eigen::VectorXd p = fam.density_values(tc.base);
    const Eigen::VectorXd v = fam.tangent_values(tc);
    lhs.resize(p.size());
    for (std::size_t j = 0; j < perm.size(); ++j) {
      const auto k = static_cast<Eigen::Index>(inv[j]);
      lhs[static_cast<Eigen::Index>(j)] = std::sqrt(p[k]) * std::polar(1.0, 0.5 * v[k]);
    }
  } else {
    lhs = embed(fam, act_tangent(action, g, fam, tc)).values();
  }

  double sup = 0.0;
  for (std::size_t j = 0; j < perm.size(); ++j)
    sup = std::max(sup, std::abs(lhs[static_cast<Eigen::Index>(j)] -
                                 phi.values()[static_cast<Eigen::Index>(inv[j])]));
  return sup;
}

double isometry_residual(const GroupAction& action, const AlgebraElement& g,
                         const ExponentialFamily& fam, const Eigen::VectorXd& theta,
                         const Eigen::VectorXd& u, const Eigen::VectorXd& ut) {
  const TangentCoord pu = act_tangent(action, g, fam, TangentCoord{theta, u});
  const TangentCoord put = act_tangent(action, g, fam, TangentCoord{theta, ut});
  const MetricTensor h0 = fisher_matrix(fam, theta);
  const MetricTensor h1 = fisher_matrix(fam, pu.base);
  return std::abs(h1.pair(pu.coeffs, put.coeffs) - h0.pair(u, ut));
}

KahlerPreservation kahler_preservation_residual(const GroupAction& action, const AlgebraElement& g,
                                                const ExponentialFamily& fam, const TangentCoord& tc,
                                                const SplitTangent& w, const SplitTangent& wt) {
  require_base(w, tc);
  require_same_base(w, wt);
  const TangentCoord tcg = act_tangent(action, g, fam, tc);
  const auto push = [&](const SplitTangent& s) {
    return SplitTangent{tcg, act_tangent(action, g, fam, TangentCoord{tc.base, s.horiz}).coeffs,
                        act_tangent(action, g, fam, TangentCoord{tc.base, s.vert}).coeffs};
  };
  const SplitTangent wg = push(w);
  const SplitTangent wtg = push(wt);
  const MetricTensor h0 = fisher_matrix(fam, tc.base);
  const MetricTensor h1 = fisher_matrix(fam, tcg.base);
  KahlerPreservation r;
  r.g_res = std::abs(dom_metric(h1, wg, wtg) - dom_metric(h0, w, wt));
  r.omega_res = std::abs(dom_symplectic(h1, wg, wtg) - dom_symplectic(h0, w, wt));
  return r;
}

SplitTangent fundamental_field(const GroupAction& action, const AlgebraElement& x,
                               const ExponentialFamily& fam, const TangentCoord& tc, double step) {
  if (!(step > 0.0)) throw BadStep("fundamental_field: bad step");
  if (action.relabel_exact())
    throw ActionLeavesGrid(action.name() + ": discrete action has no fundamental fields");
  const TangentCoord plus = act_tangent(action, step * x, fam, tc);
  const TangentCoord minus = act_tangent(action, -step * x, fam, tc);
  return SplitTangent{tc, (plus.base - minus.base) / (2.0 * step),
                      (plus.coeffs - minus.coeffs) / (2.0 * step)};
}

double moment_residual(const GroupAction& action, const ExponentialFamily& fam,
                       const Comoment& comoment, const AlgebraElement& x, const TangentCoord& tc,
                       const SplitTangent& probe, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw BadStep("moment_residual: bad step");
  require_base(probe, tc);
  const ChartFunction f = comoment(x);
  const auto offset = [&](double t) {
    return TangentCoord{tc.base + t * probe.horiz, tc.coeffs + t * probe.vert};
  };
  const double lhs = (f(offset(step)) - f(offset(-step))) / (2.0 * step);
  const SplitTangent xs = fundamental_field(action, x, fam, tc);
  const double rhs = dom_symplectic(fam, xs, probe);
  return std::abs(lhs - rhs);
}

Comoment shift_comoment(const Comoment& comoment, const DualElement& c, const LieAlgebra& algebra) {
  algebra.require_dim(c, "shift functional");
  const int n = algebra.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const AlgebraElement br =
          algebra.bracket(Eigen::VectorXd::Unit(n, i), Eigen::VectorXd::Unit(n, j));
      if (std::abs(c.dot(br)) > 1e-12)
        throw NotInAnnihilator(algebra.name() + ": functional does not annihilate [g, g]");
    }
  return [comoment, c](const AlgebraElement& x) -> ChartFunction {
    const double shift = c.dot(x);
    ChartFunction f = comoment(x);
    return [f, shift](const TangentCoord& tc) { return f(tc) - shift; };
  };
}

Comoment translation_comoment(const GroupAction& action, const ExponentialFamily& fam) {
  if (action.kind() != GroupAction::Kind::Translation || !action.has_parameter_action())
    throw Error(action.name() + ": translation comoment needs a translation model with a family");
  const Eigen::MatrixXd disp = action.displacement_map();
  const ExponentialFamily* family = &fam;
  return [disp, family](const AlgebraElement& x) -> ChartFunction {
    const Eigen::VectorXd dx = disp * x;
    return [dx, family](const TangentCoord& tc) {
      return dx.dot(family->carrier_covariance(tc.base) * tc.coeffs);
    };
  };
}

DualElement moment_map_value(const Comoment& comoment, const LieAlgebra& algebra,
                             const TangentCoord& tc) {
  DualElement out(algebra.dim());
  for (int i = 0; i < algebra.dim(); ++i)
    out[i] = comoment(Eigen::VectorXd::Unit(algebra.dim(), i))(tc);
  return out;
}

}  // namespace igeo
