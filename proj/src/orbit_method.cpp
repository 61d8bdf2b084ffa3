#include "igeo/orbit_method.hpp"

#include <algorithm>
#include <cmath>

namespace igeo {

namespace {

Eigen::MatrixXd as_matrix(const std::vector<AlgebraElement>& vs, int dim) {
  Eigen::MatrixXd m(dim, static_cast<Eigen::Index>(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = vs[j];
  return m;
}

double span_residual(const Eigen::MatrixXd& basis, const Eigen::VectorXd& v) {
  if (basis.cols() == 0) return v.norm();
  const Eigen::VectorXd c = basis.colPivHouseholderQr().solve(v);
  return (basis * c - v).norm();
}

bool in_span(const Eigen::MatrixXd& basis, const Eigen::VectorXd& v, double tol) {
  return span_residual(basis, v) <= tol * (1.0 + v.norm());
}

bool subalgebra_ok(const LieAlgebra& alg, const Eigen::MatrixXd& basis) {
  for (Eigen::Index i = 0; i < basis.cols(); ++i)
    for (Eigen::Index j = i + 1; j < basis.cols(); ++j)
      if (!in_span(basis, alg.bracket(basis.col(i), basis.col(j)), 1e-10)) return false;
  return true;
}

bool isotropic_ok(const LieAlgebra& alg, const Eigen::MatrixXd& basis, const DualElement& lambda) {
  for (Eigen::Index i = 0; i < basis.cols(); ++i)
    for (Eigen::Index j = i + 1; j < basis.cols(); ++j)
      if (std::abs(lambda.dot(alg.bracket(basis.col(i), basis.col(j)))) > 1e-12) return false;
  return true;
}

bool contains_all(const Eigen::MatrixXd& basis, const std::vector<AlgebraElement>& vs) {
  for (const auto& v : vs)
    if (!in_span(basis, v, 1e-10)) return false;
  return true;
}

// Candidate extension vectors: integer coordinates in {-2..2}, first nonzero
// entry positive (sign representatives).
std::vector<Eigen::VectorXd> rational_candidates(int dim) {
  std::vector<Eigen::VectorXd> out;
  if (dim > 6) {
    // bounded fallback for larger algebras: basis vectors and signed pairs
    for (int i = 0; i < dim; ++i) {
      Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
      v[i] = 1.0;
      out.push_back(v);
      for (int j = i + 1; j < dim; ++j)
        for (double s : {1.0, -1.0}) {
          Eigen::VectorXd u = v;
          u[j] = s;
          out.push_back(u);
        }
    }
    return out;
  }
  std::vector<int> digits(static_cast<std::size_t>(dim), 0);
  const long total = static_cast<long>(std::pow(5.0, dim));
  for (long code = 1; code < total; ++code) {
    long rem = code;
    Eigen::VectorXd v(dim);
    for (int a = 0; a < dim; ++a) {
      v[a] = static_cast<double>(rem % 5 - 2);
      rem /= 5;
    }
    int first = 0;
    while (first < dim && v[first] == 0.0) ++first;
    if (first == dim || v[first] < 0.0) continue;
    out.push_back(v);
  }
  return out;
}

bool is_maximal(const LieAlgebra& alg, const Eigen::MatrixXd& basis, const DualElement& lambda,
                const std::vector<Eigen::VectorXd>& candidates) {
  for (const auto& w : candidates) {
    if (in_span(basis, w, 1e-10)) continue;
    Eigen::MatrixXd ext(basis.rows(), basis.cols() + 1);
    ext.leftCols(basis.cols()) = basis;
    ext.col(basis.cols()) = w;
    if (subalgebra_ok(alg, ext) && isotropic_ok(alg, ext, lambda)) return false;
  }
  return true;
}

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    visit(idx);
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i)
      idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
}

}  // namespace

CoadjointOrbit orbit_of(const LieAlgebra& alg, const DualElement& lambda, int sample_count,
                        std::uint64_t seed) {
  alg.require_dim(lambda, "functional");
  CoadjointOrbit orbit;
  orbit.seed = lambda;
  orbit.dimension = alg.orbit_dimension(lambda);
  orbit.samples.push_back(lambda);
  Rng rng(seed);
  for (int s = 1; s < sample_count; ++s) {
    const Eigen::VectorXd g = rng.vector(alg.dim(), -2.0, 2.0);
    orbit.samples.push_back(alg.coadjoint(g, lambda));
  }
  return orbit;
}

Polarization polarize(const LieAlgebra& alg, const DualElement& lambda,
                      const std::optional<std::vector<AlgebraElement>>& require_contains) {
  const int n = alg.dim();
  alg.require_dim(lambda, "functional");
  std::vector<AlgebraElement> required;
  if (require_contains) {
    required = *require_contains;
    for (const auto& b : required) {
      alg.require_dim(b, "stabilizer vector");
      if (std::abs(lambda.dot(b)) > 1e-12)
        throw StabilizerObstruction(alg.name() + ": functional does not annihilate the required subalgebra");
    }
  }

  const int orbit_dim = alg.orbit_dimension(lambda);
  if (orbit_dim % 2 != 0)
    throw PolarizationNotFound(alg.name() + ": odd coadjoint orbit dimension");
  const int target = n - orbit_dim / 2;

  const auto candidates = rational_candidates(n);
  std::optional<Polarization> found;

  const auto accept = [&](const Eigen::MatrixXd& basis) -> bool {
    if (!contains_all(basis, required)) return false;
    if (!subalgebra_ok(alg, basis)) return false;
    if (!isotropic_ok(alg, basis, lambda)) return false;
    if (!is_maximal(alg, basis, lambda, candidates)) return false;
    Polarization pol;
    pol.lambda = lambda;
    for (Eigen::Index j = 0; j < basis.cols(); ++j) pol.basis.push_back(basis.col(j));
    found = std::move(pol);
    return true;
  };

  // pass 1: coordinate subalgebras
  for_each_subset(n, target, [&](const std::vector<int>& idx) {
    if (found) return;
    Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(n, target);
    for (int j = 0; j < target; ++j) basis(idx[static_cast<std::size_t>(j)], j) = 1.0;
    accept(basis);
  });
  if (found) return *found;

  // pass 2: one rational extension vector
  for_each_subset(n, target - 1, [&](const std::vector<int>& idx) {
    if (found) return;
    Eigen::MatrixXd part = Eigen::MatrixXd::Zero(n, target - 1);
    for (int j = 0; j < target - 1; ++j) part(idx[static_cast<std::size_t>(j)], j) = 1.0;
    for (const auto& w : candidates) {
      if (in_span(part, w, 1e-10)) continue;
      Eigen::MatrixXd basis(n, target);
      basis.leftCols(target - 1) = part;
      basis.col(target - 1) = w;
      if (accept(basis)) return;
    }
  });
  if (found) return *found;

  // pass 3: two rational extension vectors
  if (target >= 2) {
    for_each_subset(n, target - 2, [&](const std::vector<int>& idx) {
      if (found) return;
      Eigen::MatrixXd part = Eigen::MatrixXd::Zero(n, target - 2);
      for (int j = 0; j < target - 2; ++j) part(idx[static_cast<std::size_t>(j)], j) = 1.0;
      for (std::size_t a = 0; a < candidates.size() && !found; ++a) {
        if (in_span(part, candidates[a], 1e-10)) continue;
        Eigen::MatrixXd mid(n, target - 1);
        mid.leftCols(target - 2) = part;
        mid.col(target - 2) = candidates[a];
        for (std::size_t b = a + 1; b < candidates.size(); ++b) {
          if (in_span(mid, candidates[b], 1e-10)) continue;
          Eigen::MatrixXd basis(n, target);
          basis.leftCols(target - 1) = mid;
          basis.col(target - 1) = candidates[b];
          if (accept(basis)) return;
        }
      }
    });
  }
  if (found) return *found;

  throw PolarizationNotFound(alg.name() + ": no maximal isotropic subalgebra of expected dimension " +
                             std::to_string(target) + " in the candidate set");
}

std::complex<double> character(const LieAlgebra& alg, const Polarization& pol,
                               const AlgebraElement& x) {
  alg.require_dim(x, "character argument");
  const Eigen::MatrixXd basis = as_matrix(pol.basis, alg.dim());
  if (!in_span(basis, x, 1e-10))
    throw NotInSubalgebra(alg.name() + ": element outside the polarizing subalgebra");
  return std::polar(1.0, 2.0 * M_PI * pol.lambda.dot(x));
}

PeriodicLattice::PeriodicLattice(Eigen::VectorXd lo, Eigen::VectorXd period, std::vector<int> counts)
    : lo_(std::move(lo)), period_(std::move(period)), counts_(std::move(counts)) {
  if (lo_.size() != period_.size() || static_cast<std::size_t>(lo_.size()) != counts_.size())
    throw InvalidDescriptor("PeriodicLattice: inconsistent axis specs");
  total_ = 1;
  for (std::size_t a = 0; a < counts_.size(); ++a) {
    if (counts_[a] < 2 || !(period_[static_cast<Eigen::Index>(a)] > 0.0))
      throw InvalidDescriptor("PeriodicLattice: need count >= 2 and positive period");
    total_ *= static_cast<std::size_t>(counts_[a]);
  }
}

PeriodicLattice PeriodicLattice::cubic(int dim, double lo, double period, int count) {
  return PeriodicLattice(Eigen::VectorXd::Constant(dim, lo), Eigen::VectorXd::Constant(dim, period),
                         std::vector<int>(static_cast<std::size_t>(dim), count));
}

Eigen::VectorXd PeriodicLattice::node(std::size_t idx) const {
  Eigen::VectorXd x(dim());
  std::size_t rem = idx;
  for (int a = dim() - 1; a >= 0; --a) {
    const std::size_t na = static_cast<std::size_t>(counts_[static_cast<std::size_t>(a)]);
    x[a] = lo_[a] + spacing(a) * static_cast<double>(rem % na);
    rem /= na;
  }
  return x;
}

double PeriodicLattice::cell_weight() const {
  double w = 1.0;
  for (int a = 0; a < dim(); ++a) w *= spacing(a);
  return w;
}

std::size_t PeriodicLattice::locate(const Eigen::VectorXd& x) const {
  if (x.size() != dim()) throw DimMismatch("PeriodicLattice: point dimension mismatch");
  std::size_t idx = 0;
  std::size_t stride = 1;
  for (int a = dim() - 1; a >= 0; --a) {
    const double rel = (x[a] - lo_[a]) / spacing(a);
    const double kr = std::round(rel);
    if (std::abs(rel - kr) > 1e-9 * (1.0 + std::abs(rel)))
      throw ActionLeavesGrid("point is not lattice aligned on axis " + std::to_string(a));
    const long na = counts_[static_cast<std::size_t>(a)];
    const long wrapped = ((static_cast<long>(std::llround(kr)) % na) + na) % na;
    idx += static_cast<std::size_t>(wrapped) * stride;
    stride *= static_cast<std::size_t>(na);
  }
  return idx;
}

std::vector<std::size_t> PeriodicLattice::shift_permutation(const Eigen::VectorXd& t) const {
  if (t.size() != dim()) throw DimMismatch("PeriodicLattice: shift dimension mismatch");
  std::vector<long> shift(static_cast<std::size_t>(dim()));
  for (int a = 0; a < dim(); ++a) {
    const double k = t[a] / spacing(a);
    const double kr = std::round(k);
    if (std::abs(k - kr) > 1e-9 * (1.0 + std::abs(k)))
      throw ActionLeavesGrid("lattice shift is not grid aligned on axis " + std::to_string(a));
    const long na = counts_[static_cast<std::size_t>(a)];
    shift[static_cast<std::size_t>(a)] = ((static_cast<long>(kr) % na) + na) % na;
  }
  std::vector<std::size_t> perm(total_);
  for (std::size_t idx = 0; idx < total_; ++idx) {
    std::size_t rem = idx;
    std::size_t out = 0;
    std::size_t stride = 1;
    for (int a = dim() - 1; a >= 0; --a) {
      const std::size_t na = static_cast<std::size_t>(counts_[static_cast<std::size_t>(a)]);
      const std::size_t da =
          (rem % na + static_cast<std::size_t>(shift[static_cast<std::size_t>(a)])) % na;
      rem /= na;
      out += da * stride;
      stride *= na;
    }
    perm[idx] = out;
  }
  return perm;
}

std::vector<int> complement_indices(int dim, const std::vector<AlgebraElement>& vs) {
  Eigen::MatrixXd current = as_matrix(vs, dim);
  std::vector<int> out;
  auto rank_of = [](const Eigen::MatrixXd& m) {
    if (m.cols() == 0) return 0;
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(m);
    qr.setThreshold(1e-10);
    return static_cast<int>(qr.rank());
  };
  int r = rank_of(current);
  for (int i = 0; i < dim; ++i) {
    Eigen::MatrixXd ext(dim, current.cols() + 1);
    ext.leftCols(current.cols()) = current;
    ext.col(current.cols()) = Eigen::VectorXd::Unit(dim, i);
    const int r2 = rank_of(ext);
    if (r2 > r) {
      out.push_back(i);
      current = ext;
      r = r2;
    }
  }
  return out;
}

Eigen::MatrixXcd induced_rep_operator(const LieAlgebra& alg, const Polarization& pol,
                                      const AlgebraElement& g, const PeriodicLattice& quotient_grid) {
  const int n = alg.dim();
  alg.require_dim(g, "group element");
  const std::vector<int> comp = complement_indices(n, pol.basis);
  const int mdim = static_cast<int>(comp.size());
  if (mdim != quotient_grid.dim())
    throw DimMismatch(alg.name() + ": quotient grid dimension does not match G/H");

  Eigen::MatrixXd basis(n, n);
  for (int a = 0; a < mdim; ++a) basis.col(a) = Eigen::VectorXd::Unit(n, comp[static_cast<std::size_t>(a)]);
  for (std::size_t b = 0; b < pol.basis.size(); ++b)
    basis.col(mdim + static_cast<int>(b)) = pol.basis[b];
  const Eigen::FullPivLU<Eigen::MatrixXd> lu(basis);
  if (!lu.isInvertible())
    throw PolarizationNotFound(alg.name() + ": polarization basis plus complement is singular");

  const auto section = [&](const Eigen::VectorXd& q) {
    Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
    for (int a = 0; a < mdim; ++a) w[comp[static_cast<std::size_t>(a)]] = q[a];
    return w;
  };

  const std::size_t count = quotient_grid.size();
  Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(count),
                                               static_cast<Eigen::Index>(count));
  const AlgebraElement neg_g = -g;
  for (std::size_t idx = 0; idx < count; ++idx) {
    const Eigen::VectorXd q = quotient_grid.node(idx);
    const AlgebraElement w = alg.bch(neg_g, section(q));

    // split exp(w) = exp(section(m)) exp(h) with h in the polarizing algebra
    Eigen::VectorXd m = Eigen::VectorXd::Zero(mdim);
    AlgebraElement rest = w;
    bool converged = false;
    for (int iter = 0; iter < alg.nilpotency_step() + 4; ++iter) {
      rest = alg.bch(-section(m), w);
      const Eigen::VectorXd coords = lu.solve(rest);
      const Eigen::VectorXd cm = coords.head(mdim);
      if (cm.cwiseAbs().maxCoeff() <= 1e-12 * (1.0 + w.norm())) {
        converged = true;
        break;
      }
      m += cm;
    }
    if (!converged)
      throw Error(alg.name() + ": section decomposition did not converge");

    const std::size_t target = quotient_grid.locate(m);
    op(static_cast<Eigen::Index>(idx), static_cast<Eigen::Index>(target)) =
        std::polar(1.0, -2.0 * M_PI * pol.lambda.dot(rest));
  }
  return op;
}

Eigen::VectorXcd subrep_basis_function(const LieAlgebra& alg,
                                       const std::vector<AlgebraElement>& stabilizer,
                                       const DualElement& lambda, const PeriodicLattice& grid) {
  const int n = alg.dim();
  alg.require_dim(lambda, "functional");
  const Eigen::MatrixXd stab = as_matrix(stabilizer, n);
  for (const auto& s : stabilizer)
    if (std::abs(lambda.dot(s)) > 1e-12)
      throw StabilizerObstruction(alg.name() + ": functional does not annihilate the stabilizer");
  // the reduction to characters of G/N needs an abelian quotient
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const AlgebraElement br =
          alg.bracket(Eigen::VectorXd::Unit(n, i), Eigen::VectorXd::Unit(n, j));
      if (!in_span(stab, br, 1e-10))
        throw Error(alg.name() + ": quotient by the stabilizer is not abelian; unsupported");
    }
  const std::vector<int> comp = complement_indices(n, stabilizer);
  if (static_cast<int>(comp.size()) != grid.dim())
    throw DimMismatch(alg.name() + ": G/N grid dimension mismatch");
  Eigen::VectorXd lam_bar(grid.dim());
  for (std::size_t a = 0; a < comp.size(); ++a)
    lam_bar[static_cast<Eigen::Index>(a)] = lambda[comp[a]];

  Eigen::VectorXcd f(static_cast<Eigen::Index>(grid.size()));
  for (std::size_t j = 0; j < grid.size(); ++j)
    f[static_cast<Eigen::Index>(j)] = std::polar(1.0, -2.0 * M_PI * lam_bar.dot(grid.node(j)));
  return f;
}

double subrep_residual(const LieAlgebra& alg, const std::vector<AlgebraElement>& stabilizer,
                       const DualElement& lambda, const PeriodicLattice& grid,
                       const std::vector<AlgebraElement>& group_samples) {
  Eigen::VectorXcd f = subrep_basis_function(alg, stabilizer, lambda, grid);
  f /= f.norm();
  const std::vector<int> comp = complement_indices(alg.dim(), stabilizer);
  double worst = 0.0;
  for (const auto& g : group_samples) {
    alg.require_dim(g, "group element");
    Eigen::VectorXd t(grid.dim());
    for (std::size_t a = 0; a < comp.size(); ++a) t[static_cast<Eigen::Index>(a)] = g[comp[a]];
    const auto perm = grid.shift_permutation(t);
    std::vector<std::size_t> inv(perm.size());
    for (std::size_t j = 0; j < perm.size(); ++j) inv[perm[j]] = j;
    Eigen::VectorXcd tf(f.size());
    for (std::size_t j = 0; j < perm.size(); ++j)
      tf[static_cast<Eigen::Index>(j)] = f[static_cast<Eigen::Index>(inv[j])];

    const std::complex<double> ip = f.dot(tf);  // Eigen: conjugates the left factor
    const std::complex<double> sigma = std::polar(1.0, 2.0 * M_PI * lambda.dot(g));
    // component of the translate orthogonal to the subspace;
    // |P_g - P|_F = sqrt(2) |tf - <f,tf> f| for unit vectors
    const double proj_dist = std::sqrt(2.0) * (tf - ip * f).norm();
    const double op_dev = std::abs(ip - sigma);
    worst = std::max(worst, proj_dist + op_dev);
  }
  return worst;
}

}  // namespace igeo
