#pragma once

#include <complex>

#include "igeo/kahler_tm.hpp"

namespace igeo {

/// Representative of a point of the projectivized L2 space: an L2Function
/// normalized to unit norm.
struct ProjectivePoint {
  L2Function rep;

  /// Normalizes f to unit norm. Throws SpaceMismatch on zero input.
  static ProjectivePoint from(const L2Function& f);
};

/// Phi(theta, v)(x) = sqrt(p(x; theta)) exp(i v(x) / 2), a unit vector of
/// L2 up to quadrature error.
L2Function embed(const ExponentialFamily& fam, const TangentCoord& tc);

/// Differential of Phi at tc applied to a split tangent w = (l, u):
///   dPhi(w) = Phi(tc) * (w1 + i w2),
///   w1 = (1/2) sum_k l^k score_k,
///   w2 = (1/2) u(x) - (1/2) l^T Hess(psi) v   (the second term constant).
/// The vertical part follows the fiber curve (theta, v + t u), the horizontal
/// part the chart-constant lift (theta + t l, v).
L2Function embed_differential(const ExponentialFamily& fam, const TangentCoord& tc,
                              const SplitTangent& w);

/// Fubini-Study pairing at z0 of two sphere-tangent representatives:
///   <zd1, zd2> - <zd1, z0><z0, zd2>.
/// Real part is the metric, imaginary part the symplectic form.
std::complex<double> fubini_study(const ProjectivePoint& z0, const L2Function& zdot1,
                                  const L2Function& zdot2);

/// FS(dPhi w, dPhi wt) at the embedded base point.
std::complex<double> fubini_study_pullback(const ExponentialFamily& fam, const TangentCoord& tc,
                                           const SplitTangent& w, const SplitTangent& wt);

struct PullbackResiduals {
  double g_res = 0.0;
  double omega_res = 0.0;
};

/// | Re FS(dPhi w, dPhi wt) - (1/4) g(w, wt) | and the omega analogue.
PullbackResiduals pullback_residuals(const ExponentialFamily& fam, const TangentCoord& tc,
                                     const SplitTangent& w, const SplitTangent& wt);

}  // namespace igeo
