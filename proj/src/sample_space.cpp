#include "igeo/sample_space.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "igeo/numerics.hpp"

namespace igeo {

namespace {

// Gauss-Hermite nodes/weights for int exp(-t^2) g(t) dt via Golub-Welsch.
void gauss_hermite_rule(int order, Eigen::VectorXd& t, Eigen::VectorXd& w) {
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
  for (int k = 1; k < order; ++k) {
    const double b = std::sqrt(static_cast<double>(k) / 2.0);
    jacobi(k - 1, k) = b;
    jacobi(k, k - 1) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  t = es.eigenvalues();
  w.resize(order);
  const double sqrt_pi = std::sqrt(M_PI);
  for (int i = 0; i < order; ++i) {
    const double v0 = es.eigenvectors()(0, i);
    w[i] = sqrt_pi * v0 * v0;
  }
}

Eigen::VectorXd single_axis(double v) {
  Eigen::VectorXd x(1);
  x[0] = v;
  return x;
}

}  // namespace

SampleSpace SampleSpace::assemble(const SpaceDescriptor& d) {
  SampleSpace s;
  s.desc_ = d;
  if (std::holds_alternative<FiniteCounting>(d)) {
    const auto& fc = std::get<FiniteCounting>(d);
    if (fc.n < 1) throw InvalidDescriptor("FiniteCounting: need n >= 1");
    s.nodes_.resize(fc.n, 1);
    for (int i = 0; i < fc.n; ++i) s.nodes_(i, 0) = static_cast<double>(i);
    s.weights_ = Eigen::VectorXd::Ones(fc.n);
    s.spacing_ = single_axis(0.0);
    s.origin_ = single_axis(0.0);
    s.axis_counts_ = {fc.n};
  } else if (std::holds_alternative<UniformGrid>(d)) {
    const auto& g = std::get<UniformGrid>(d);
    if (g.count < 2) throw InvalidDescriptor("UniformGrid: need count >= 2");
    if (!(g.hi > g.lo)) throw InvalidDescriptor("UniformGrid: need hi > lo");
    const double h = (g.hi - g.lo) / g.count;
    s.nodes_.resize(g.count, 1);
    if (g.periodic) {
      for (int i = 0; i < g.count; ++i) s.nodes_(i, 0) = g.lo + h * i;
    } else {
      for (int i = 0; i < g.count; ++i) s.nodes_(i, 0) = g.lo + h * (i + 0.5);
    }
    s.weights_ = Eigen::VectorXd::Constant(g.count, h);
    s.periodic_ = g.periodic;
    s.spacing_ = single_axis(h);
    s.origin_ = single_axis(s.nodes_(0, 0));
    s.axis_counts_ = {g.count};
  } else if (std::holds_alternative<GaussHermite>(d)) {
    const auto& gh = std::get<GaussHermite>(d);
    if (gh.order < 2 || gh.order > 150)
      throw InvalidDescriptor("GaussHermite: need 2 <= order <= 150");
    if (!(gh.scale > 0.0)) throw InvalidDescriptor("GaussHermite: need scale > 0");
    Eigen::VectorXd t, w;
    gauss_hermite_rule(gh.order, t, w);
    const double a = std::sqrt(2.0) * gh.scale;
    s.nodes_.resize(gh.order, 1);
    s.weights_.resize(gh.order);
    for (int i = 0; i < gh.order; ++i) {
      s.nodes_(i, 0) = gh.center + a * t[i];
      s.weights_[i] = w[i] * std::exp(t[i] * t[i]) * a;
    }
    s.spacing_ = single_axis(0.0);
    s.origin_ = single_axis(0.0);
    s.axis_counts_ = {gh.order};
  } else {
    const auto& pg = std::get<ProductGrid>(d);
    if (pg.axes.empty()) throw InvalidDescriptor("ProductGrid: need at least one axis");
    std::vector<SampleSpace> axes;
    axes.reserve(pg.axes.size());
    std::size_t total = 1;
    for (const auto& ax : pg.axes) {
      axes.push_back(assemble(ax));
      total *= axes.back().size();
    }
    const int dim = static_cast<int>(pg.axes.size());
    s.nodes_.resize(static_cast<Eigen::Index>(total), dim);
    s.weights_.resize(static_cast<Eigen::Index>(total));
    s.spacing_.resize(dim);
    s.origin_.resize(dim);
    s.periodic_ = true;
    for (int a = 0; a < dim; ++a) {
      s.spacing_[a] = axes[a].spacing_[0];
      s.origin_[a] = axes[a].origin_[0];
      s.axis_counts_.push_back(axes[a].axis_counts_[0]);
      s.periodic_ = s.periodic_ && axes[a].periodic_;
    }
    // row-major over axes: last axis fastest
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t rem = idx;
      double w = 1.0;
      for (int a = dim - 1; a >= 0; --a) {
        const std::size_t na = axes[a].size();
        const std::size_t ia = rem % na;
        rem /= na;
        s.nodes_(static_cast<Eigen::Index>(idx), a) = axes[a].nodes_(static_cast<Eigen::Index>(ia), 0);
        w *= axes[a].weights_[static_cast<Eigen::Index>(ia)];
      }
      s.weights_[static_cast<Eigen::Index>(idx)] = w;
    }
  }
  for (Eigen::Index i = 0; i < s.weights_.size(); ++i)
    if (!(s.weights_[i] > 0.0))
      throw InvalidDescriptor("sample space produced a non-positive weight");
  return s;
}

void SampleSpace::estimate_tolerance() {
  if (std::holds_alternative<FiniteCounting>(desc_)) {
    tolerance_ = 1e-13 * std::max<double>(1.0, static_cast<double>(size()));
    return;
  }
  // Refinement estimate on a smooth probe with boundary decay matching the
  // integrand class the toolkit actually uses (Gaussian-type factors).
  auto probe = [](const Eigen::VectorXd& lo, const Eigen::VectorXd& hi) {
    return [lo, hi](const Eigen::VectorXd& x) {
      double e = 0.0;
      for (Eigen::Index d = 0; d < x.size(); ++d) {
        const double mid = 0.5 * (lo[d] + hi[d]);
        const double width = 0.125 * (hi[d] - lo[d]);
        const double z = (x[d] - mid) / width;
        e += -0.5 * z * z + 0.1 * std::sin(3.0 * z);
      }
      return std::exp(e);
    };
  };
  SpaceDescriptor half = desc_;
  Eigen::VectorXd lo, hi;
  if (std::holds_alternative<UniformGrid>(desc_)) {
    auto g = std::get<UniformGrid>(desc_);
    lo = single_axis(g.lo);
    hi = single_axis(g.hi);
    g.count = std::max(2, g.count / 2);
    half = g;
  } else if (std::holds_alternative<GaussHermite>(desc_)) {
    auto g = std::get<GaussHermite>(desc_);
    lo = single_axis(g.center - 6.0 * g.scale);
    hi = single_axis(g.center + 6.0 * g.scale);
    g.order = std::max(2, g.order / 2);
    half = g;
  } else {
    auto g = std::get<ProductGrid>(desc_);
    lo.resize(static_cast<Eigen::Index>(g.axes.size()));
    hi.resize(static_cast<Eigen::Index>(g.axes.size()));
    for (std::size_t a = 0; a < g.axes.size(); ++a) {
      lo[static_cast<Eigen::Index>(a)] = g.axes[a].lo;
      hi[static_cast<Eigen::Index>(a)] = g.axes[a].hi;
      g.axes[a].count = std::max(2, g.axes[a].count / 2);
    }
    half = g;
  }
  const SampleSpace coarse = assemble(half);
  const auto f = probe(lo, hi);
  const double fine_val = integrate(tabulate(f));
  const double coarse_val = coarse.integrate(coarse.tabulate(f));
  tolerance_ = std::max(1.25 * std::abs(fine_val - coarse_val), 1e-12);
}

SpacePtr SampleSpace::build(const SpaceDescriptor& d) {
  auto s = std::shared_ptr<SampleSpace>(new SampleSpace(assemble(d)));
  s->estimate_tolerance();
  return s;
}

SpacePtr build_space(const SpaceDescriptor& d) { return SampleSpace::build(d); }

double SampleSpace::integrate(const Eigen::VectorXd& node_values) const {
  if (static_cast<std::size_t>(node_values.size()) != size())
    throw SpaceMismatch("integrate: value vector length does not match node count");
  KahanSum acc;
  for (Eigen::Index i = 0; i < node_values.size(); ++i) {
    const double term = weights_[i] * node_values[i];
    if (!std::isfinite(term))
      throw NonFiniteIntegrand("integrate: non-finite value at node " + std::to_string(i));
    acc.add(term);
  }
  return acc.value();
}

double SampleSpace::integrate(const std::function<double(const Eigen::VectorXd&)>& f) const {
  return integrate(tabulate(f));
}

Eigen::VectorXd SampleSpace::tabulate(const std::function<double(const Eigen::VectorXd&)>& f) const {
  Eigen::VectorXd v(static_cast<Eigen::Index>(size()));
  for (std::size_t i = 0; i < size(); ++i) v[static_cast<Eigen::Index>(i)] = f(node(i));
  return v;
}

std::vector<std::size_t> SampleSpace::translation_permutation(const Eigen::VectorXd& t) const {
  if (!periodic_) throw ActionLeavesGrid("translation requires a periodic grid");
  if (t.size() != point_dim()) throw DimMismatch("translation vector has wrong dimension");
  const int dim = point_dim();
  std::vector<long> shift(static_cast<std::size_t>(dim));
  for (int a = 0; a < dim; ++a) {
    const double h = spacing_[a];
    const double k = t[a] / h;
    const double kr = std::round(k);
    if (std::abs(k - kr) > 1e-9 * (1.0 + std::abs(k)))
      throw ActionLeavesGrid("translation is not grid aligned on axis " + std::to_string(a));
    const long n = axis_counts_[static_cast<std::size_t>(a)];
    shift[static_cast<std::size_t>(a)] = ((static_cast<long>(kr) % n) + n) % n;
  }
  std::vector<std::size_t> perm(size());
  for (std::size_t idx = 0; idx < size(); ++idx) {
    std::size_t rem = idx;
    std::size_t out = 0;
    std::size_t stride = 1;
    // decompose row-major (last axis fastest), apply per-axis cyclic shift
    std::vector<std::size_t> digits(static_cast<std::size_t>(dim));
    for (int a = dim - 1; a >= 0; --a) {
      const std::size_t na = static_cast<std::size_t>(axis_counts_[static_cast<std::size_t>(a)]);
      digits[static_cast<std::size_t>(a)] = rem % na;
      rem /= na;
    }
    for (int a = dim - 1; a >= 0; --a) {
      const std::size_t na = static_cast<std::size_t>(axis_counts_[static_cast<std::size_t>(a)]);
      const std::size_t da = (digits[static_cast<std::size_t>(a)] +
                              static_cast<std::size_t>(shift[static_cast<std::size_t>(a)])) % na;
      out += da * stride;
      stride *= na;
    }
    perm[idx] = out;
  }
  return perm;
}

L2Function::L2Function(SpacePtr space, Eigen::VectorXcd values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (!space_) throw SpaceMismatch("L2Function: null space");
  if (static_cast<std::size_t>(values_.size()) != space_->size())
    throw SpaceMismatch("L2Function: value count does not match node count");
}

L2Function L2Function::real_valued(SpacePtr space, const Eigen::VectorXd& values) {
  Eigen::VectorXcd z(values.size());
  for (Eigen::Index i = 0; i < values.size(); ++i) z[i] = std::complex<double>(values[i], 0.0);
  return L2Function(std::move(space), std::move(z));
}

std::complex<double> l2_inner(const L2Function& f, const L2Function& g) {
  if (f.space() != g.space()) throw SpaceMismatch("l2_inner: functions live on different spaces");
  const auto& w = f.space()->weights();
  KahanSumComplex acc;
  for (Eigen::Index i = 0; i < w.size(); ++i)
    acc.add(w[i] * std::conj(f.values()[i]) * g.values()[i]);
  return acc.value();
}

double l2_norm(const L2Function& f) {
  const auto& w = f.space()->weights();
  KahanSum acc;
  for (Eigen::Index i = 0; i < w.size(); ++i) acc.add(w[i] * std::norm(f.values()[i]));
  return std::sqrt(acc.value());
}

}  // namespace igeo
