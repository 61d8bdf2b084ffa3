#pragma once

#include <Eigen/Dense>

#include <string>

#include "igeo/sample_space.hpp"

namespace igeo {

/// Point of the tangent bundle of a family in the natural-parameter chart:
/// base point theta and tangent coefficients v.
struct TangentCoord {
  Eigen::VectorXd base;
  Eigen::VectorXd coeffs;
};

/// Exponential family in natural parameters,
///   p(x; theta) = exp( C(x) + sum_k theta^k F_k(x) - psi(theta) ),
/// represented by the node values of C and F_1..F_n on a SampleSpace.
///
/// The natural parameters are the canonical chart: every connection and
/// curvature computation downstream works in these coordinates. Derivatives
/// of psi are evaluated through moment identities (E[F], Cov[F]); finite
/// differences of log_partition serve as cross-checks in the tests only.
class ExponentialFamily {
 public:
  ExponentialFamily(SpacePtr space, Eigen::VectorXd base_values, Eigen::MatrixXd carrier_values,
                    Eigen::VectorXd domain_lo, Eigen::VectorXd domain_hi, std::string name);

  int dim() const { return static_cast<int>(carriers_.rows()); }
  const SpacePtr& space() const { return space_; }
  const std::string& name() const { return name_; }
  const Eigen::VectorXd& base_values() const { return base_; }
  /// Carrier values, one row per F_k.
  const Eigen::MatrixXd& carriers() const { return carriers_; }
  const Eigen::VectorXd& domain_lo() const { return lo_; }
  const Eigen::VectorXd& domain_hi() const { return hi_; }

  bool in_domain(const Eigen::VectorXd& theta) const;
  void require_domain(const Eigen::VectorXd& theta) const;

  /// psi(theta) = ln int exp(C + theta.F) dmu, evaluated with max-shift
  /// stabilization.
  double log_partition(const Eigen::VectorXd& theta) const;

  Eigen::VectorXd density_values(const Eigen::VectorXd& theta) const;
  double density(const Eigen::VectorXd& theta, std::size_t node_index) const;

  /// score_i = F_i - d_i psi, with d_i psi = E_theta[F_i].
  double score(const Eigen::VectorXd& theta, int i, std::size_t node_index) const;
  Eigen::VectorXd score_values(const Eigen::VectorXd& theta, int i) const;

  /// Gradient of psi: E_theta[F].
  Eigen::VectorXd carrier_mean(const Eigen::VectorXd& theta) const;
  /// Hessian of psi: Cov_theta(F_i, F_j).
  Eigen::MatrixXd carrier_covariance(const Eigen::VectorXd& theta) const;

  /// Node values of the function identified with a tangent vector:
  /// v(x) = sum_k v^k F_k(x) - sum_k v^k d_k psi(theta). Mean zero under
  /// p(.; theta) by construction.
  Eigen::VectorXd tangent_values(const TangentCoord& tc) const;
  L2Function tangent_function(const TangentCoord& tc) const;

 private:
  SpacePtr space_;
  Eigen::VectorXd base_;
  Eigen::MatrixXd carriers_;  // dim x node_count
  Eigen::VectorXd lo_, hi_;
  std::string name_;
};

}  // namespace igeo
