#include "igeo/expfam.hpp"

#include <cmath>

#include "igeo/numerics.hpp"

namespace igeo {

ExponentialFamily::ExponentialFamily(SpacePtr space, Eigen::VectorXd base_values,
                                     Eigen::MatrixXd carrier_values, Eigen::VectorXd domain_lo,
                                     Eigen::VectorXd domain_hi, std::string name)
    : space_(std::move(space)),
      base_(std::move(base_values)),
      carriers_(std::move(carrier_values)),
      lo_(std::move(domain_lo)),
      hi_(std::move(domain_hi)),
      name_(std::move(name)) {
  if (!space_) throw InvalidDescriptor(name_ + ": null sample space");
  const auto nn = static_cast<Eigen::Index>(space_->size());
  if (base_.size() != nn) throw InvalidDescriptor(name_ + ": base values length mismatch");
  if (carriers_.cols() != nn) throw InvalidDescriptor(name_ + ": carrier values length mismatch");
  const int n = dim();
  if (n < 1) throw InvalidDescriptor(name_ + ": need at least one carrier");
  if (lo_.size() != n || hi_.size() != n)
    throw InvalidDescriptor(name_ + ": parameter box dimension mismatch");
  for (int k = 0; k < n; ++k)
    if (!(lo_[k] < hi_[k])) throw InvalidDescriptor(name_ + ": empty parameter box");

  // {1, F_1, ..., F_n} must be linearly independent as node-value vectors.
  Eigen::MatrixXd m(n + 1, nn);
  m.row(0).setOnes();
  m.bottomRows(n) = carriers_;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(m.transpose());
  qr.setThreshold(1e-10);
  if (qr.rank() != n + 1)
    throw InvalidDescriptor(name_ + ": carriers {1, F_1..F_n} are linearly dependent on the nodes");
}

bool ExponentialFamily::in_domain(const Eigen::VectorXd& theta) const {
  if (theta.size() != dim()) return false;
  for (int k = 0; k < dim(); ++k)
    if (theta[k] < lo_[k] || theta[k] > hi_[k]) return false;
  return true;
}

void ExponentialFamily::require_domain(const Eigen::VectorXd& theta) const {
  if (!in_domain(theta)) throw Error(name_ + ": parameter outside configured domain");
}

double ExponentialFamily::log_partition(const Eigen::VectorXd& theta) const {
  require_domain(theta);
  const Eigen::VectorXd s = base_ + carriers_.transpose() * theta;
  const double m = s.maxCoeff();
  const auto& w = space_->weights();
  KahanSum acc;
  for (Eigen::Index i = 0; i < s.size(); ++i) acc.add(w[i] * std::exp(s[i] - m));
  const double psi = m + std::log(acc.value());
  if (!std::isfinite(psi)) throw PartitionDiverged(name_ + ": log partition diverged");
  return psi;
}

Eigen::VectorXd ExponentialFamily::density_values(const Eigen::VectorXd& theta) const {
  require_domain(theta);
  const Eigen::VectorXd s = base_ + carriers_.transpose() * theta;
  const double m = s.maxCoeff();
  const auto& w = space_->weights();
  KahanSum acc;
  for (Eigen::Index i = 0; i < s.size(); ++i) acc.add(w[i] * std::exp(s[i] - m));
  const double lse = std::log(acc.value());
  if (!std::isfinite(m + lse)) throw PartitionDiverged(name_ + ": log partition diverged");
  Eigen::VectorXd p(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) p[i] = std::exp(s[i] - m - lse);
  return p;
}

double ExponentialFamily::density(const Eigen::VectorXd& theta, std::size_t node_index) const {
  if (node_index >= space_->size()) throw BadIndex(name_ + ": node index out of range");
  return density_values(theta)[static_cast<Eigen::Index>(node_index)];
}

Eigen::VectorXd ExponentialFamily::carrier_mean(const Eigen::VectorXd& theta) const {
  const Eigen::VectorXd p = density_values(theta);
  const auto& w = space_->weights();
  Eigen::VectorXd mean(dim());
  for (int k = 0; k < dim(); ++k) {
    KahanSum acc;
    for (Eigen::Index i = 0; i < p.size(); ++i) acc.add(w[i] * p[i] * carriers_(k, i));
    mean[k] = acc.value();
  }
  return mean;
}

Eigen::MatrixXd ExponentialFamily::carrier_covariance(const Eigen::VectorXd& theta) const {
  const Eigen::VectorXd p = density_values(theta);
  const Eigen::VectorXd mean = carrier_mean(theta);
  const auto& w = space_->weights();
  const int n = dim();
  Eigen::MatrixXd cov(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      KahanSum acc;
      for (Eigen::Index i = 0; i < p.size(); ++i)
        acc.add(w[i] * p[i] * (carriers_(a, i) - mean[a]) * (carriers_(b, i) - mean[b]));
      cov(a, b) = acc.value();
      cov(b, a) = acc.value();
    }
  }
  return cov;
}

double ExponentialFamily::score(const Eigen::VectorXd& theta, int i, std::size_t node_index) const {
  if (i < 0 || i >= dim()) throw BadIndex(name_ + ": carrier index out of range");
  if (node_index >= space_->size()) throw BadIndex(name_ + ": node index out of range");
  const Eigen::VectorXd mean = carrier_mean(theta);
  return carriers_(i, static_cast<Eigen::Index>(node_index)) - mean[i];
}

Eigen::VectorXd ExponentialFamily::score_values(const Eigen::VectorXd& theta, int i) const {
  if (i < 0 || i >= dim()) throw BadIndex(name_ + ": carrier index out of range");
  const Eigen::VectorXd mean = carrier_mean(theta);
  return carriers_.row(i).transpose().array() - mean[i];
}

Eigen::VectorXd ExponentialFamily::tangent_values(const TangentCoord& tc) const {
  if (tc.coeffs.size() != dim()) throw DimMismatch(name_ + ": tangent coefficient length mismatch");
  const Eigen::VectorXd mean = carrier_mean(tc.base);
  const double c = tc.coeffs.dot(mean);
  return (carriers_.transpose() * tc.coeffs).array() - c;
}

L2Function ExponentialFamily::tangent_function(const TangentCoord& tc) const {
  return L2Function::real_valued(space_, tangent_values(tc));
}

}  // namespace igeo
