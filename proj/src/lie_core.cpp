#include "igeo/lie_core.hpp"

#include <cmath>

namespace igeo {

namespace {

int span_rank(const Eigen::MatrixXd& columns) {
  if (columns.cols() == 0) return 0;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(columns);
  qr.setThreshold(1e-10);
  return static_cast<int>(qr.rank());
}

}  // namespace

LieAlgebra::LieAlgebra(std::vector<Eigen::MatrixXd> structure, std::string name)
    : c_(std::move(structure)), name_(std::move(name)) {
  dim_ = static_cast<int>(c_.size());
  if (dim_ < 1) throw InvalidDescriptor(name_ + ": empty structure table");
  for (const auto& ck : c_)
    if (ck.rows() != dim_ || ck.cols() != dim_)
      throw InvalidDescriptor(name_ + ": structure tensor shape mismatch");

  for (int k = 0; k < dim_; ++k)
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        if (c_[static_cast<std::size_t>(k)](i, j) != -c_[static_cast<std::size_t>(k)](j, i))
          throw InvalidDescriptor(name_ + ": structure constants not antisymmetric");

  // Jacobi identity; exact for integer tables, tolerance for rationals.
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = j + 1; k < dim_; ++k) {
        Eigen::VectorXd ei = Eigen::VectorXd::Zero(dim_);
        Eigen::VectorXd ej = Eigen::VectorXd::Zero(dim_);
        Eigen::VectorXd ek = Eigen::VectorXd::Zero(dim_);
        ei[i] = ej[j] = ek[k] = 1.0;
        const Eigen::VectorXd r =
            bracket(ei, bracket(ej, ek)) + bracket(ej, bracket(ek, ei)) + bracket(ek, bracket(ei, ej));
        if (r.cwiseAbs().maxCoeff() > 1e-12)
          throw InvalidDescriptor(name_ + ": Jacobi identity fails");
      }

  // Lower central series; must reach zero.
  Eigen::MatrixXd layer = Eigen::MatrixXd::Identity(dim_, dim_);
  step_ = 0;
  for (int iter = 0; iter <= dim_; ++iter) {
    if (span_rank(layer) == 0) break;
    ++step_;
    Eigen::MatrixXd next(dim_, dim_ * layer.cols());
    int col = 0;
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < layer.cols(); ++j) {
        Eigen::VectorXd ei = Eigen::VectorXd::Zero(dim_);
        ei[i] = 1.0;
        next.col(col++) = bracket(ei, layer.col(j));
      }
    // reduce to an orthonormal basis of the span to keep widths bounded
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(next);
    qr.setThreshold(1e-10);
    const int r = static_cast<int>(qr.rank());
    if (r == 0) {
      layer.resize(dim_, 0);
    } else {
      const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(dim_, r);
      layer = q;
    }
    if (iter == dim_) throw InvalidDescriptor(name_ + ": algebra is not nilpotent");
  }
}

LieAlgebra LieAlgebra::abelian(int n) {
  if (n < 1) throw InvalidDescriptor("abelian: need n >= 1");
  return LieAlgebra(std::vector<Eigen::MatrixXd>(static_cast<std::size_t>(n),
                                                 Eigen::MatrixXd::Zero(n, n)),
                    "abelian" + std::to_string(n));
}

LieAlgebra LieAlgebra::heisenberg(int dim) {
  if (dim < 3 || dim % 2 == 0) throw InvalidDescriptor("heisenberg: dimension must be odd >= 3");
  const int k = (dim - 1) / 2;
  std::vector<Eigen::MatrixXd> c(static_cast<std::size_t>(dim), Eigen::MatrixXd::Zero(dim, dim));
  for (int a = 0; a < k; ++a) {
    c[static_cast<std::size_t>(dim - 1)](a, k + a) = 1.0;   // [X_a, Y_a] = Z
    c[static_cast<std::size_t>(dim - 1)](k + a, a) = -1.0;
  }
  return LieAlgebra(std::move(c), "heisenberg" + std::to_string(dim));
}

LieAlgebra LieAlgebra::filiform4() {
  std::vector<Eigen::MatrixXd> c(4, Eigen::MatrixXd::Zero(4, 4));
  c[2](0, 1) = 1.0;   // [e1, e2] = e3
  c[2](1, 0) = -1.0;
  c[3](0, 2) = 1.0;   // [e1, e3] = e4
  c[3](2, 0) = -1.0;
  return LieAlgebra(std::move(c), "filiform4");
}

void LieAlgebra::require_dim(const Eigen::VectorXd& v, const char* what) const {
  if (v.size() != dim_) throw DimMismatch(name_ + ": " + what + " has wrong dimension");
}

AlgebraElement LieAlgebra::bracket(const AlgebraElement& x, const AlgebraElement& y) const {
  require_dim(x, "bracket argument");
  require_dim(y, "bracket argument");
  AlgebraElement out = Eigen::VectorXd::Zero(dim_);
  for (int k = 0; k < dim_; ++k) out[k] = x.dot(c_[static_cast<std::size_t>(k)] * y);
  return out;
}

Eigen::MatrixXd LieAlgebra::ad(const AlgebraElement& x) const {
  require_dim(x, "ad argument");
  Eigen::MatrixXd m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    Eigen::VectorXd ej = Eigen::VectorXd::Zero(dim_);
    ej[j] = 1.0;
    m.col(j) = bracket(x, ej);
  }
  return m;
}

Eigen::MatrixXd LieAlgebra::adjoint_exp(const AlgebraElement& x) const {
  const Eigen::MatrixXd a = ad(x);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(dim_, dim_);
  Eigen::MatrixXd sum = term;
  for (int k = 1; k < step_; ++k) {
    term = (a * term) / static_cast<double>(k);
    sum += term;
  }
  return sum;
}

AlgebraElement LieAlgebra::bch(const AlgebraElement& x, const AlgebraElement& y) const {
  require_dim(x, "bch argument");
  require_dim(y, "bch argument");
  if (step_ > 4)
    throw UnsupportedStep(name_ + ": BCH implemented through degree 4 (step <= 4)");
  AlgebraElement z = x + y;
  if (step_ >= 2) {
    const AlgebraElement xy = bracket(x, y);
    z += 0.5 * xy;
    if (step_ >= 3) {
      z += (bracket(x, xy) - bracket(y, xy)) / 12.0;
      if (step_ >= 4) z += -bracket(y, bracket(x, xy)) / 24.0;
    }
  }
  return z;
}

DualElement LieAlgebra::coadjoint(const AlgebraElement& g, const DualElement& lambda) const {
  require_dim(g, "group element");
  require_dim(lambda, "functional");
  return adjoint_exp(-g).transpose() * lambda;
}

DualElement LieAlgebra::coadjoint_generator(const AlgebraElement& x, const DualElement& lambda) const {
  require_dim(x, "generator");
  require_dim(lambda, "functional");
  return -ad(x).transpose() * lambda;
}

int LieAlgebra::orbit_dimension(const DualElement& lambda) const {
  require_dim(lambda, "functional");
  Eigen::MatrixXd gen(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    Eigen::VectorXd ei = Eigen::VectorXd::Zero(dim_);
    ei[i] = 1.0;
    gen.col(i) = coadjoint_generator(ei, lambda);
  }
  return span_rank(gen);
}

}  // namespace igeo
