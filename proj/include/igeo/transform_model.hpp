#pragma once

#include <functional>
#include <string>
#include <vector>

#include "igeo/kahler_tm.hpp"
#include "igeo/l2_embed.hpp"
#include "igeo/lie_core.hpp"

namespace igeo {

/// Action of a nilpotent group on a sample space, together with the data a
/// transformation model needs: the stabilizer subalgebra at the reference
/// point and, when the model carries an exponential family, the exact
/// parameter-level form of the action.
///
/// Two kinds are built in.
///   Translation: G acts on a periodic grid through the displacement map
///     x -> x + D g (D maps exponential coordinates to sample displacements).
///     Grid-aligned elements permute nodes exactly; others raise
///     ActionLeavesGrid. The parameter action of the location families is
///     theta -> theta + D g.
///   CategoricalCycle: cyclic relabeling of the atoms of a finite space.
///     Group elements are integer shifts embedded in a 1-d algebra; the
///     pushforward is realized exactly by value permutation.
class GroupAction {
 public:
  enum class Kind { Translation, CategoricalCycle };

  static GroupAction translation(LieAlgebra algebra, SpacePtr space,
                                 Eigen::MatrixXd displacement_map,
                                 std::vector<AlgebraElement> stabilizer, bool parameter_action,
                                 std::string name);
  static GroupAction categorical_cycle(SpacePtr finite_space);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const LieAlgebra& algebra() const { return algebra_; }
  const SpacePtr& space() const { return space_; }
  const std::vector<AlgebraElement>& stabilizer_basis() const { return stabilizer_; }
  bool has_parameter_action() const { return parameter_action_; }
  /// True when the pushforward is a finite relabeling (exact by construction).
  bool relabel_exact() const { return kind_ == Kind::CategoricalCycle; }
  const Eigen::MatrixXd& displacement_map() const { return displacement_map_; }

  /// Permutation sigma with node(sigma[j]) = g . node(j).
  std::vector<std::size_t> node_permutation(const AlgebraElement& g) const;

  /// Parameter-level action theta' (built-in models only).
  Eigen::VectorXd act_param(const AlgebraElement& g, const Eigen::VectorXd& theta) const;

  /// Chart form of the pushforward of (theta, v). Defined for every group
  /// element (the chart action of the built-in models is exact); only the
  /// sample-level realizations require grid alignment.
  TangentCoord act_tangent_chart(const AlgebraElement& g, const TangentCoord& tc) const;

 private:
  GroupAction(Kind kind, LieAlgebra algebra, SpacePtr space, Eigen::MatrixXd displacement_map,
              std::vector<AlgebraElement> stabilizer, bool parameter_action, std::string name);

  Kind kind_;
  LieAlgebra algebra_;
  SpacePtr space_;
  Eigen::MatrixXd displacement_map_;  // point_dim x algebra_dim (Translation)
  std::vector<AlgebraElement> stabilizer_;
  bool parameter_action_ = false;
  std::string name_;
};

/// Node values of the pushforward density x -> p(g^-1 x; theta).
L2Function act_density(const GroupAction& action, const AlgebraElement& g,
                       const ExponentialFamily& fam, const Eigen::VectorXd& theta);

/// Pushforward of a tangent-bundle point in chart coordinates.
TangentCoord act_tangent(const GroupAction& action, const AlgebraElement& g,
                         const ExponentialFamily& fam, const TangentCoord& tc);

/// sup_x | Phi(g.(p,v))(x) - Phi(p,v)(g^-1 x) |.
double equivariance_residual(const GroupAction& action, const AlgebraElement& g,
                             const ExponentialFamily& fam, const TangentCoord& tc);

/// | h_{g theta}(g_* u, g_* ut) - h_theta(u, ut) |.
double isometry_residual(const GroupAction& action, const AlgebraElement& g,
                         const ExponentialFamily& fam, const Eigen::VectorXd& theta,
                         const Eigen::VectorXd& u, const Eigen::VectorXd& ut);

struct KahlerPreservation {
  double g_res = 0.0;
  double omega_res = 0.0;
};

/// Pushes split tangents forward componentwise (horizontal to horizontal,
/// vertical to vertical) and compares the Dombrowski pairings before and
/// after.
KahlerPreservation kahler_preservation_residual(const GroupAction& action, const AlgebraElement& g,
                                                const ExponentialFamily& fam, const TangentCoord& tc,
                                                const SplitTangent& w, const SplitTangent& wt);

/// Fundamental vector field of X at tc: central finite difference of
/// t -> act_tangent(exp(tX), tc) in the chart. Zero for X in the stabilizer
/// algebra.
SplitTangent fundamental_field(const GroupAction& action, const AlgebraElement& x,
                               const ExponentialFamily& fam, const TangentCoord& tc,
                               double step = 1e-5);

using ChartFunction = std::function<double(const TangentCoord&)>;
using Comoment = std::function<ChartFunction(const AlgebraElement&)>;

/// | d(mu*(X))(probe) - omega(X#, probe) | with the differential taken by
/// central differences in the chart. The Hamiltonian-candidate check.
double moment_residual(const GroupAction& action, const ExponentialFamily& fam,
                       const Comoment& comoment, const AlgebraElement& x, const TangentCoord& tc,
                       const SplitTangent& probe, double step = 1e-3);

/// X -> mu*(X) - <c, X>. Requires c to annihilate [g, g].
Comoment shift_comoment(const Comoment& comoment, const DualElement& c, const LieAlgebra& algebra);

/// Closed-form comoment of the translation models: mu*(X)(theta, v) =
/// (D X)^T h(theta) v. Matches the line integral of i_{X#} omega for the
/// location families, whose Fisher matrix is constant along the action.
Comoment translation_comoment(const GroupAction& action, const ExponentialFamily& fam);

/// Moment map at tc: X -> mu*(X)(tc) packed as a dual vector on the basis.
DualElement moment_map_value(const Comoment& comoment, const LieAlgebra& algebra,
                             const TangentCoord& tc);

}  // namespace igeo
