#include "igeo/kahler_tm.hpp"

#include <cmath>

#include "igeo/numerics.hpp"

namespace igeo {

namespace {

bool close(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return a.size() == b.size() && (a - b).cwiseAbs().maxCoeff() <= 1e-12;
}

}  // namespace

void require_same_base(const SplitTangent& w, const SplitTangent& wt) {
  if (!close(w.base.base, wt.base.base) || !close(w.base.coeffs, wt.base.coeffs))
    throw BaseMismatch("split tangents are based at different points of TM");
}

void require_base(const SplitTangent& w, const TangentCoord& tc) {
  if (!close(w.base.base, tc.base) || !close(w.base.coeffs, tc.coeffs))
    throw BaseMismatch("split tangent is not based at the given point of TM");
}

double dom_metric(const MetricTensor& h, const SplitTangent& w, const SplitTangent& wt) {
  require_same_base(w, wt);
  return h.pair(w.horiz, wt.horiz) + h.pair(w.vert, wt.vert);
}

double dom_metric(const ExponentialFamily& fam, const SplitTangent& w, const SplitTangent& wt) {
  require_same_base(w, wt);
  return dom_metric(fisher_matrix(fam, w.base.base), w, wt);
}

double dom_symplectic(const MetricTensor& h, const SplitTangent& w, const SplitTangent& wt) {
  require_same_base(w, wt);
  return h.pair(w.horiz, wt.vert) - h.pair(w.vert, wt.horiz);
}

double dom_symplectic(const ExponentialFamily& fam, const SplitTangent& w, const SplitTangent& wt) {
  require_same_base(w, wt);
  return dom_symplectic(fisher_matrix(fam, w.base.base), w, wt);
}

SplitTangent dom_complex(const SplitTangent& w) {
  return SplitTangent{w.base, -w.vert, w.horiz};
}

namespace {

SplitTangent basis_vector(const TangentCoord& tc, int idx, int n) {
  SplitTangent w{tc, Eigen::VectorXd::Zero(n), Eigen::VectorXd::Zero(n)};
  if (idx < n)
    w.horiz[idx] = 1.0;
  else
    w.vert[idx - n] = 1.0;
  return w;
}

}  // namespace

Eigen::MatrixXd dom_metric_gram(const ExponentialFamily& fam, const TangentCoord& tc) {
  const int n = fam.dim();
  const MetricTensor h = fisher_matrix(fam, tc.base);
  Eigen::MatrixXd gram(2 * n, 2 * n);
  for (int a = 0; a < 2 * n; ++a)
    for (int b = 0; b < 2 * n; ++b)
      gram(a, b) = dom_metric(h, basis_vector(tc, a, n), basis_vector(tc, b, n));
  return gram;
}

Eigen::MatrixXd dom_symplectic_gram(const ExponentialFamily& fam, const TangentCoord& tc) {
  const int n = fam.dim();
  const MetricTensor h = fisher_matrix(fam, tc.base);
  Eigen::MatrixXd gram(2 * n, 2 * n);
  for (int a = 0; a < 2 * n; ++a)
    for (int b = 0; b < 2 * n; ++b)
      gram(a, b) = dom_symplectic(h, basis_vector(tc, a, n), basis_vector(tc, b, n));
  return gram;
}

double cotangent_form_residual(const ExponentialFamily& fam, const Eigen::VectorXd& theta,
                               const Eigen::VectorXd& v) {
  const int n = fam.dim();
  const TangentCoord tc{theta, v};
  const Eigen::MatrixXd omega = dom_symplectic_gram(fam, tc);

  // Independent assembly of sum_{ij} h_ij dq^i ^ dv^j on the same basis:
  // dq(w) reads the horizontal components, dv(w) the vertical ones.
  const MetricTensor h = fisher_matrix(fam, theta);
  Eigen::MatrixXd canonical(2 * n, 2 * n);
  for (int a = 0; a < 2 * n; ++a) {
    for (int b = 0; b < 2 * n; ++b) {
      const SplitTangent wa = basis_vector(tc, a, n);
      const SplitTangent wb = basis_vector(tc, b, n);
      double s = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          s += h(i, j) * (wa.horiz[i] * wb.vert[j] - wb.horiz[i] * wa.vert[j]);
      canonical(a, b) = s;
    }
  }
  return (omega - canonical).cwiseAbs().maxCoeff();
}

double symplectic_closedness_residual(const ExponentialFamily& fam, const Eigen::VectorXd& theta,
                                      double step) {
  const int n = fam.dim();
  if (n < 2) {
    // with a single base coordinate there is no dq^k ^ dq^i pair
    return 0.0;
  }
  // T[k](i,j) = d_k h_ij; d omega vanishes iff T is symmetric under k <-> i.
  std::vector<Eigen::MatrixXd> T(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
    const double coeff[4] = {-1.0, 8.0, -8.0, 1.0};
    const double offs[4] = {2.0, 1.0, -1.0, -2.0};
    for (int s = 0; s < 4; ++s) {
      Eigen::VectorXd th = theta;
      th[k] += offs[s] * step;
      acc += (coeff[s] / (12.0 * step)) * fam.carrier_covariance(th);
    }
    T[static_cast<std::size_t>(k)] = acc;
  }
  double r = 0.0;
  for (int k = 0; k < n; ++k)
    for (int i = k + 1; i < n; ++i)
      for (int j = 0; j < n; ++j)
        r = std::max(r, std::abs(T[static_cast<std::size_t>(k)](i, j) - T[static_cast<std::size_t>(i)](k, j)));
  return r;
}

}  // namespace igeo
