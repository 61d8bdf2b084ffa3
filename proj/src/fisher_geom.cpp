#include "igeo/fisher_geom.hpp"

#include <cmath>

#include "igeo/numerics.hpp"

namespace igeo {

double ChristoffelTensor::max_abs() const {
  double m = 0.0;
  for (const auto& mk : entries) m = std::max(m, mk.cwiseAbs().maxCoeff());
  return m;
}

MetricTensor fisher_matrix(const ExponentialFamily& fam, const Eigen::VectorXd& theta) {
  MetricTensor h{fam.carrier_covariance(theta)};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.entries);
  const double emax = es.eigenvalues().cwiseAbs().maxCoeff();
  const double emin = es.eigenvalues().minCoeff();
  if (!(emin > 1e-12 * std::max(1.0, emax)))
    throw DegenerateMetric(fam.name() + ": Fisher matrix not positive definite");
  return h;
}

ChristoffelTensor christoffel(const ExponentialFamily& fam, const Eigen::VectorXd& theta,
                              ConnectionKind kind) {
  const int n = fam.dim();
  const Eigen::VectorXd p = fam.density_values(theta);
  const Eigen::VectorXd mean = fam.carrier_mean(theta);
  const Eigen::MatrixXd hess = fam.carrier_covariance(theta);
  const auto& w = fam.space()->weights();
  const auto& F = fam.carriers();

  // mean of each score over p (zero up to quadrature error)
  Eigen::VectorXd score_mean(n);
  for (int k = 0; k < n; ++k) {
    KahanSum acc;
    for (Eigen::Index i = 0; i < p.size(); ++i) acc.add(w[i] * p[i] * (F(k, i) - mean[k]));
    score_mean[k] = acc.value();
  }

  ChristoffelTensor g;
  g.kind = kind;
  g.entries.assign(static_cast<std::size_t>(n), Eigen::MatrixXd::Zero(n, n));
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        // d_i d_j l = -d_i d_j psi, constant over the sample space
        double value = -hess(i, j) * score_mean[k];
        if (kind == ConnectionKind::Mixture) {
          KahanSum acc;
          for (Eigen::Index a = 0; a < p.size(); ++a)
            acc.add(w[a] * p[a] * (F(i, a) - mean[i]) * (F(j, a) - mean[j]) * (F(k, a) - mean[k]));
          value += acc.value();
        }
        g.entries[static_cast<std::size_t>(k)](i, j) = value;
        g.entries[static_cast<std::size_t>(k)](j, i) = value;
      }
    }
  }
  return g;
}

double duality_residual(const ExponentialFamily& fam, const Eigen::VectorXd& theta,
                        const Eigen::VectorXd& X, const Eigen::VectorXd& Y,
                        const Eigen::VectorXd& Z, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw BadStep("duality_residual: bad step");
  const int n = fam.dim();
  if (X.size() != n || Y.size() != n || Z.size() != n)
    throw DimMismatch("duality_residual: direction dimension mismatch");
  if (Z.cwiseAbs().maxCoeff() == 0.0) return 0.0;

  const auto metric_along = [&](double t) {
    return fam.carrier_covariance(theta + t * Z).cwiseProduct(X * Y.transpose()).sum();
  };
  const double lhs = five_point_diff(metric_along, step);

  const ChristoffelTensor ge = christoffel(fam, theta, ConnectionKind::Exponential);
  const ChristoffelTensor gm = christoffel(fam, theta, ConnectionKind::Mixture);
  // h(grad_Z X, Y) = Z^i X^j Y^k Gamma_{ij,k} for constant-coefficient X
  double rhs = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        rhs += Z[i] * X[j] * Y[k] * ge(i, j, k) + Z[i] * Y[j] * X[k] * gm(i, j, k);
  return std::abs(lhs - rhs);
}

namespace {

// Christoffel symbols of the second kind for the mixture connection,
// Gamma^l_{jk} = h^{lm} Gamma_{jk,m}.
std::vector<Eigen::MatrixXd> raised_mixture(const ExponentialFamily& fam,
                                            const Eigen::VectorXd& theta) {
  const int n = fam.dim();
  const ChristoffelTensor g = christoffel(fam, theta, ConnectionKind::Mixture);
  const Eigen::MatrixXd hinv = fam.carrier_covariance(theta).inverse();
  std::vector<Eigen::MatrixXd> raised(static_cast<std::size_t>(n), Eigen::MatrixXd::Zero(n, n));
  for (int l = 0; l < n; ++l)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double s = 0.0;
        for (int m = 0; m < n; ++m) s += hinv(l, m) * g(j, k, m);
        raised[static_cast<std::size_t>(l)](j, k) = s;
      }
  return raised;
}

}  // namespace

DualFlatnessReport dual_flatness_report(const ExponentialFamily& fam, const Eigen::VectorXd& theta,
                                        double step) {
  DualFlatnessReport rep;
  rep.exp_flat_residual = christoffel(fam, theta, ConnectionKind::Exponential).max_abs();

  const int n = fam.dim();
  if (n < 2) {
    rep.mix_curvature_residual = 0.0;  // R is antisymmetric in (i,j): no curvature in dim 1
    return rep;
  }

  const auto gamma_at = [&](const Eigen::VectorXd& th) { return raised_mixture(fam, th); };
  const auto gamma0 = gamma_at(theta);

  // dGamma[i][l](j,k) = d/dtheta_i Gamma^l_{jk}, five-point stencil
  std::vector<std::vector<Eigen::MatrixXd>> dgamma(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<Eigen::MatrixXd> acc(static_cast<std::size_t>(n), Eigen::MatrixXd::Zero(n, n));
    const double coeff[4] = {-1.0, 8.0, -8.0, 1.0};
    const double offs[4] = {2.0, 1.0, -1.0, -2.0};
    for (int s = 0; s < 4; ++s) {
      Eigen::VectorXd th = theta;
      th[i] += offs[s] * step;
      const auto g = gamma_at(th);
      for (int l = 0; l < n; ++l) acc[static_cast<std::size_t>(l)] += (coeff[s] / (12.0 * step)) * g[static_cast<std::size_t>(l)];
    }
    dgamma[static_cast<std::size_t>(i)] = std::move(acc);
  }

  double rmax = 0.0;
  for (int l = 0; l < n; ++l)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          double r = dgamma[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)](j, k) -
                     dgamma[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)](i, k);
          for (int m = 0; m < n; ++m)
            r += gamma0[static_cast<std::size_t>(l)](i, m) * gamma0[static_cast<std::size_t>(m)](j, k) -
                 gamma0[static_cast<std::size_t>(l)](j, m) * gamma0[static_cast<std::size_t>(m)](i, k);
          rmax = std::max(rmax, std::abs(r));
        }
  rep.mix_curvature_residual = rmax;
  return rep;
}

}  // namespace igeo
