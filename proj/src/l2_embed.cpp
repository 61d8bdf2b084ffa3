#include "igeo/l2_embed.hpp"

#include <cmath>

#include "igeo/numerics.hpp"

namespace igeo {

ProjectivePoint ProjectivePoint::from(const L2Function& f) {
  const double n = l2_norm(f);
  if (!(n > 0.0) || !std::isfinite(n))
    throw SpaceMismatch("ProjectivePoint: representative must be nonzero");
  return ProjectivePoint{L2Function(f.space(), f.values() / n)};
}

L2Function embed(const ExponentialFamily& fam, const TangentCoord& tc) {
  const Eigen::VectorXd p = fam.density_values(tc.base);
  const Eigen::VectorXd v = fam.tangent_values(tc);
  Eigen::VectorXcd out(p.size());
  for (Eigen::Index i = 0; i < p.size(); ++i)
    out[i] = std::sqrt(p[i]) * std::polar(1.0, 0.5 * v[i]);
  return L2Function(fam.space(), std::move(out));
}

L2Function embed_differential(const ExponentialFamily& fam, const TangentCoord& tc,
                              const SplitTangent& w) {
  require_base(w, tc);
  const int n = fam.dim();
  if (w.horiz.size() != n || w.vert.size() != n)
    throw DimMismatch("embed_differential: component dimension mismatch");

  const Eigen::VectorXd mean = fam.carrier_mean(tc.base);
  const auto& F = fam.carriers();

  // w1 = (1/2) l . score(x)
  Eigen::VectorXd w1 = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(fam.space()->size()));
  if (w.horiz.cwiseAbs().maxCoeff() > 0.0)
    w1 = 0.5 * ((F.transpose() * w.horiz).array() - w.horiz.dot(mean)).matrix();

  // w2 = (1/2) u(x) + constant part from the horizontal lift
  Eigen::VectorXd w2 = Eigen::VectorXd::Zero(w1.size());
  if (w.vert.cwiseAbs().maxCoeff() > 0.0)
    w2 = 0.5 * ((F.transpose() * w.vert).array() - w.vert.dot(mean)).matrix();
  const double hess_term = -0.5 * w.horiz.dot(fam.carrier_covariance(tc.base) * tc.coeffs);
  w2.array() += hess_term;

  const L2Function phi = embed(fam, tc);
  Eigen::VectorXcd out(w1.size());
  for (Eigen::Index i = 0; i < w1.size(); ++i)
    out[i] = phi.values()[i] * std::complex<double>(w1[i], w2[i]);
  return L2Function(fam.space(), std::move(out));
}

std::complex<double> fubini_study(const ProjectivePoint& z0, const L2Function& zdot1,
                                  const L2Function& zdot2) {
  const double norm0 = l2_norm(z0.rep);
  if (std::abs(norm0 - 1.0) > 1e-10)
    throw SpaceMismatch("fubini_study: base representative is not unit norm");
  const std::complex<double> a = l2_inner(zdot1, zdot2);
  const std::complex<double> b = l2_inner(zdot1, z0.rep);
  const std::complex<double> c = l2_inner(z0.rep, zdot2);
  return a - b * c;
}

std::complex<double> fubini_study_pullback(const ExponentialFamily& fam, const TangentCoord& tc,
                                           const SplitTangent& w, const SplitTangent& wt) {
  require_base(w, tc);
  require_base(wt, tc);
  const ProjectivePoint z0 = ProjectivePoint::from(embed(fam, tc));
  return fubini_study(z0, embed_differential(fam, tc, w), embed_differential(fam, tc, wt));
}

PullbackResiduals pullback_residuals(const ExponentialFamily& fam, const TangentCoord& tc,
                                     const SplitTangent& w, const SplitTangent& wt) {
  require_same_base(w, wt);
  require_base(w, tc);
  const std::complex<double> fs = fubini_study_pullback(fam, tc, w, wt);
  const MetricTensor h = fisher_matrix(fam, tc.base);
  PullbackResiduals r;
  r.g_res = std::abs(fs.real() - 0.25 * dom_metric(h, w, wt));
  r.omega_res = std::abs(fs.imag() - 0.25 * dom_symplectic(h, w, wt));
  return r;
}

}  // namespace igeo
