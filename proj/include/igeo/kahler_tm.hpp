#pragma once

#include <Eigen/Dense>

#include "igeo/fisher_geom.hpp"

namespace igeo {

/// Tangent vector of T(TM) at the point (theta, v), split into horizontal
/// and vertical components in the natural chart.
struct SplitTangent {
  TangentCoord base;
  Eigen::VectorXd horiz;
  Eigen::VectorXd vert;
};

void require_same_base(const SplitTangent& w, const SplitTangent& wt);
void require_base(const SplitTangent& w, const TangentCoord& tc);

/// g(w, wt) = h(l, lt) + h(u, ut), with h the Fisher matrix at the base.
double dom_metric(const ExponentialFamily& fam, const SplitTangent& w, const SplitTangent& wt);
double dom_metric(const MetricTensor& h, const SplitTangent& w, const SplitTangent& wt);

/// omega(w, wt) = h(l, ut) - h(u, lt).
double dom_symplectic(const ExponentialFamily& fam, const SplitTangent& w, const SplitTangent& wt);
double dom_symplectic(const MetricTensor& h, const SplitTangent& w, const SplitTangent& wt);

/// J(l, u) = (-u, l); an exact block rotation, J o J = -Id.
SplitTangent dom_complex(const SplitTangent& w);

/// 2n x 2n Gram matrices over the split basis (horizontal e_1..e_n then
/// vertical e_1..e_n) at the point tc.
Eigen::MatrixXd dom_metric_gram(const ExponentialFamily& fam, const TangentCoord& tc);
Eigen::MatrixXd dom_symplectic_gram(const ExponentialFamily& fam, const TangentCoord& tc);

/// Max entry difference between the Gram matrix of omega over the split basis
/// and the matrix of sum_{ij} h_ij dq^i ^ dv^j assembled in the same basis
/// (the metric image of the canonical cotangent form, oriented to match
/// omega(w, wt) = h(l, ut) - h(u, lt)).
double cotangent_form_residual(const ExponentialFamily& fam, const Eigen::VectorXd& theta,
                               const Eigen::VectorXd& v);

/// Max finite-difference component of d omega for the coefficient functions
/// h_ij(theta): max over k<i, j of |d_k h_ij - d_i h_kj|.
double symplectic_closedness_residual(const ExponentialFamily& fam, const Eigen::VectorXd& theta,
                                      double step = 1e-3);

}  // namespace igeo
