// Independent reference implementations used as test oracles. Everything in
// this header is deliberately written from scratch against the definitions,
// not by calling the library code it is used to check.
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <functional>

namespace oracle {

/// Composite Simpson quadrature on [a, b] with n subintervals (n even).
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double acc = f(a) + f(b);
  for (int i = 1; i < n; ++i) acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

/// Upper-triangular 3x3 realization of the Heisenberg group:
/// (x, y, z) -> exp of the strictly upper matrix with entries x, y and z.
inline Eigen::Matrix3d heis_exp(double x, double y, double z) {
  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
  m(0, 1) = x;
  m(1, 2) = y;
  m(0, 2) = z;
  Eigen::Matrix3d out = Eigen::Matrix3d::Identity() + m + 0.5 * (m * m);
  return out;
}

/// Logarithm of a unipotent upper-triangular 3x3 matrix.
inline Eigen::Vector3d heis_log(const Eigen::Matrix3d& u) {
  const Eigen::Matrix3d n = u - Eigen::Matrix3d::Identity();
  const Eigen::Matrix3d logm = n - 0.5 * (n * n);
  return Eigen::Vector3d(logm(0, 1), logm(1, 2), logm(0, 2));
}

/// exp-coordinate product in the 3-d Heisenberg group via the matrix model.
inline Eigen::Vector3d heis_product(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  return heis_log(heis_exp(a[0], a[1], a[2]) * heis_exp(b[0], b[1], b[2]));
}

/// Coadjoint action of exp(g) on lambda for a structure-constant algebra,
/// by an explicit finite ad series (independent of the library path).
inline Eigen::VectorXd coadjoint_series(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&, const Eigen::VectorXd&)>& bracket,
    const Eigen::VectorXd& g, const Eigen::VectorXd& lambda, int terms) {
  const int n = static_cast<int>(g.size());
  Eigen::VectorXd out(n);
  for (int j = 0; j < n; ++j) {
    // <Ad*_exp(g) lambda, e_j> = <lambda, Ad_exp(-g) e_j>
    Eigen::VectorXd v = Eigen::VectorXd::Unit(n, j);
    Eigen::VectorXd term = v;
    Eigen::VectorXd sum = term;
    double fact = 1.0;
    for (int k = 1; k < terms; ++k) {
      term = bracket(-g, term);
      fact *= k;
      sum += term / fact;
    }
    out[j] = lambda.dot(sum);
  }
  return out;
}

/// Weighted Hermitian inner product computed by a plain forward loop.
inline std::complex<double> plain_inner(const Eigen::VectorXd& w, const Eigen::VectorXcd& f,
                                        const Eigen::VectorXcd& g) {
  std::complex<double> acc(0.0, 0.0);
  for (Eigen::Index i = 0; i < w.size(); ++i) acc += w[i] * std::conj(f[i]) * g[i];
  return acc;
}

}  // namespace oracle
