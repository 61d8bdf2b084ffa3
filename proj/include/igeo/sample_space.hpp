#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <memory>
#include <variant>
#include <vector>

#include "igeo/errors.hpp"

namespace igeo {

// Descriptors for the supported discretizations. Every integral in the
// toolkit is a weighted sum over the fixed node set of one of these spaces.

/// n atoms with unit weights (counting measure).
struct FiniteCounting {
  int n = 0;
};

/// 1-d uniform grid on [lo, hi]. Periodic grids place `count` nodes at
/// lo + k*(hi-lo)/count with equal weights (rectangle rule on the circle);
/// non-periodic grids use the midpoint rule with `count` cells.
struct UniformGrid {
  double lo = 0.0;
  double hi = 1.0;
  int count = 2;
  bool periodic = false;
};

/// Gauss-Hermite rule re-weighted to integrate dx against integrands with
/// Gaussian decay exp(-(x-center)^2/(2 scale^2)) * smooth.
struct GaussHermite {
  int order = 20;
  double center = 0.0;
  double scale = 1.0;
};

/// Cartesian product of uniform grids, for R^d sample spaces.
struct ProductGrid {
  std::vector<UniformGrid> axes;
};

using SpaceDescriptor = std::variant<FiniteCounting, UniformGrid, GaussHermite, ProductGrid>;

class SampleSpace;
using SpacePtr = std::shared_ptr<const SampleSpace>;

/// A measure space discretized at quadrature nodes.
///
/// Immutable after construction and safe to share across threads. Each space
/// self-reports an integration tolerance estimated by node-count refinement;
/// downstream residual thresholds that depend on discretization quality are
/// expressed in multiples of it.
class SampleSpace {
 public:
  static SpacePtr build(const SpaceDescriptor& d);

  std::size_t size() const { return static_cast<std::size_t>(weights_.size()); }
  int point_dim() const { return static_cast<int>(nodes_.cols()); }

  /// Node coordinates, one row per node.
  const Eigen::MatrixXd& nodes() const { return nodes_; }
  Eigen::VectorXd node(std::size_t i) const { return nodes_.row(static_cast<Eigen::Index>(i)); }
  /// First coordinate of node i (convenience for 1-d spaces).
  double coord(std::size_t i) const { return nodes_(static_cast<Eigen::Index>(i), 0); }

  const Eigen::VectorXd& weights() const { return weights_; }
  const SpaceDescriptor& descriptor() const { return desc_; }

  /// Self-reported integration tolerance (refinement estimate).
  double tolerance() const { return tolerance_; }

  /// Quadrature sum  sum_i w_i f(x_i)  for node values f.
  double integrate(const Eigen::VectorXd& node_values) const;
  double integrate(const std::function<double(const Eigen::VectorXd&)>& f) const;

  /// Evaluate a function at every node.
  Eigen::VectorXd tabulate(const std::function<double(const Eigen::VectorXd&)>& f) const;

  bool periodic() const { return periodic_; }
  /// Grid spacing per axis (uniform/product grids only).
  const Eigen::VectorXd& spacing() const { return spacing_; }
  const Eigen::VectorXd& origin() const { return origin_; }
  const std::vector<int>& axis_counts() const { return axis_counts_; }

  /// Permutation sigma with x_(sigma(j)) = x_j + t on a periodic grid.
  /// Throws ActionLeavesGrid if t is not grid aligned or the grid is not
  /// periodic.
  std::vector<std::size_t> translation_permutation(const Eigen::VectorXd& t) const;

 private:
  SampleSpace() = default;
  static SampleSpace assemble(const SpaceDescriptor& d);
  void estimate_tolerance();

  SpaceDescriptor desc_;
  Eigen::MatrixXd nodes_;    // size x dim
  Eigen::VectorXd weights_;  // size
  double tolerance_ = 1e-12;
  bool periodic_ = false;
  Eigen::VectorXd spacing_;  // per axis, 0 when not a grid
  Eigen::VectorXd origin_;
  std::vector<int> axis_counts_;
};

SpacePtr build_space(const SpaceDescriptor& d);

/// Complex-valued function known at the nodes of one SampleSpace.
class L2Function {
 public:
  L2Function(SpacePtr space, Eigen::VectorXcd values);
  static L2Function real_valued(SpacePtr space, const Eigen::VectorXd& values);

  const Eigen::VectorXcd& values() const { return values_; }
  const SpacePtr& space() const { return space_; }
  std::size_t size() const { return static_cast<std::size_t>(values_.size()); }

 private:
  SpacePtr space_;
  Eigen::VectorXcd values_;
};

/// Hermitian inner product  <f,g> = sum_i w_i conj(f_i) g_i,
/// conjugate-linear in the first argument.
std::complex<double> l2_inner(const L2Function& f, const L2Function& g);
double l2_norm(const L2Function& f);

}  // namespace igeo
