#pragma once

#include <Eigen/Dense>

#include <vector>

#include "igeo/expfam.hpp"

namespace igeo {

/// Fisher information matrix at a base point. Symmetric positive definite
/// (validated on construction by fisher_matrix).
struct MetricTensor {
  Eigen::MatrixXd entries;

  double operator()(int i, int j) const { return entries(i, j); }
  /// Bilinear pairing h(a, b) of coefficient vectors.
  double pair(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const {
    return a.dot(entries * b);
  }
};

enum class ConnectionKind { Exponential, Mixture };

/// Christoffel symbols of the first kind, Gamma_{ij,k}, stored as one matrix
/// per k. Symmetric in (i, j) by construction.
struct ChristoffelTensor {
  std::vector<Eigen::MatrixXd> entries;  // entries[k](i, j) = Gamma_{ij,k}
  ConnectionKind kind = ConnectionKind::Exponential;

  double operator()(int i, int j, int k) const { return entries[static_cast<std::size_t>(k)](i, j); }
  double max_abs() const;
};

/// h_ij = E[score_i score_j] = Cov_theta(F_i, F_j). Throws DegenerateMetric
/// if the result is not positive definite beyond tolerance.
MetricTensor fisher_matrix(const ExponentialFamily& fam, const Eigen::VectorXd& theta);

/// Exponential kind: E[(d_i d_j l)(d_k l)] = -d_i d_j psi * E[score_k]
/// (vanishes in the natural chart up to quadrature error).
/// Mixture kind: adds the third central moment E[score_i score_j score_k].
ChristoffelTensor christoffel(const ExponentialFamily& fam, const Eigen::VectorXd& theta,
                              ConnectionKind kind);

/// Residual of Z(h(X,Y)) = h(grad^e_Z X, Y) + h(X, grad^m_Z Y) for
/// constant-coefficient fields X, Y and direction Z in the natural chart.
/// The left side is a five-point finite difference of theta -> X.h(theta).Y.
double duality_residual(const ExponentialFamily& fam, const Eigen::VectorXd& theta,
                        const Eigen::VectorXd& X, const Eigen::VectorXd& Y,
                        const Eigen::VectorXd& Z, double step = 1e-3);

struct DualFlatnessReport {
  double exp_flat_residual = 0.0;       // max |Gamma^(1)| in the natural chart
  double mix_curvature_residual = 0.0;  // max |R| assembled from Gamma^(-1) by finite differences
};

DualFlatnessReport dual_flatness_report(const ExponentialFamily& fam, const Eigen::VectorXd& theta,
                                        double step = 1e-3);

}  // namespace igeo
