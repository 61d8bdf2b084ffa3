#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "igeo/errors.hpp"

namespace igeo {

using AlgebraElement = Eigen::VectorXd;  // coordinates in the standard basis
using DualElement = Eigen::VectorXd;     // <lambda, e_i> = coords[i]

/// Nilpotent Lie algebra given by structure constants
///   [e_i, e_j] = sum_k c^k_{ij} e_k.
///
/// Group elements are represented throughout in exponential coordinates of
/// the first kind; multiplication is the Baker-Campbell-Hausdorff series,
/// which terminates (and is therefore exact) for nilpotency step <= 4.
class LieAlgebra {
 public:
  /// c[k](i,j) = c^k_{ij}. Validates antisymmetry, the Jacobi identity and
  /// nilpotency at construction.
  LieAlgebra(std::vector<Eigen::MatrixXd> structure, std::string name);

  static LieAlgebra abelian(int n);
  /// Heisenberg algebra h_{2k+1}: basis X_1..X_k, Y_1..Y_k, Z with
  /// [X_i, Y_i] = Z.
  static LieAlgebra heisenberg(int dim);
  /// Step-3 filiform algebra of dimension 4: [e1,e2]=e3, [e1,e3]=e4.
  static LieAlgebra filiform4();

  int dim() const { return dim_; }
  int nilpotency_step() const { return step_; }
  const std::string& name() const { return name_; }
  const std::vector<Eigen::MatrixXd>& structure() const { return c_; }

  AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) const;

  /// Matrix of ad_x in the standard basis (columns ad_x(e_j)).
  Eigen::MatrixXd ad(const AlgebraElement& x) const;

  /// Ad_{exp x} = exp(ad_x), a finite series for nilpotent algebras.
  Eigen::MatrixXd adjoint_exp(const AlgebraElement& x) const;

  /// z with exp(x) exp(y) = exp(z), BCH series through degree 4 (exact for
  /// step <= 4; higher steps are rejected with UnsupportedStep).
  AlgebraElement bch(const AlgebraElement& x, const AlgebraElement& y) const;

  /// Ad*_{exp x} lambda, defined by <Ad*_g l, Y> = <l, Ad_{g^-1} Y>.
  DualElement coadjoint(const AlgebraElement& group_exp_coords, const DualElement& lambda) const;

  /// Derivative of the coadjoint action: (d/dt) Ad*_{exp tX} lambda |_0
  /// = -(ad_X)^T lambda.
  DualElement coadjoint_generator(const AlgebraElement& x, const DualElement& lambda) const;

  /// Dimension of the coadjoint orbit through lambda: rank of
  /// {coadjoint_generator(e_i, lambda)}.
  int orbit_dimension(const DualElement& lambda) const;

  void require_dim(const Eigen::VectorXd& v, const char* what) const;

 private:
  std::vector<Eigen::MatrixXd> c_;
  int dim_ = 0;
  int step_ = 0;
  std::string name_;
};

}  // namespace igeo
