#pragma once

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <vector>

#include "igeo/lie_core.hpp"
#include "igeo/numerics.hpp"

namespace igeo {

/// Coadjoint orbit through a seed functional, sampled at quasi-random group
/// elements. `dimension` is the rank of the orbit tangent span at the seed.
struct CoadjointOrbit {
  DualElement seed;
  std::vector<DualElement> samples;
  int dimension = 0;
};

CoadjointOrbit orbit_of(const LieAlgebra& alg, const DualElement& lambda, int sample_count,
                        std::uint64_t seed = 2024);

/// Subalgebra h maximal among those with lambda([h, h]) = 0, together with
/// the functional it polarizes. dim h = dim g - (orbit dim)/2 is asserted.
struct Polarization {
  std::vector<AlgebraElement> basis;
  DualElement lambda;
};

/// Searches subsets of the standard basis extended by a bounded
/// rational-combination set (coefficients in {-2..2}, at most two extension
/// vectors). Throws PolarizationNotFound when no candidate of the expected
/// dimension passes, and certifies maximality by exhaustive single-vector
/// extension over the same candidate set.
Polarization polarize(const LieAlgebra& alg, const DualElement& lambda,
                      const std::optional<std::vector<AlgebraElement>>& require_contains = std::nullopt);

/// sigma_lambda(exp X) = exp(2 pi i lambda(X)) for X in the polarizing
/// subalgebra. Throws NotInSubalgebra otherwise.
std::complex<double> character(const LieAlgebra& alg, const Polarization& pol,
                               const AlgebraElement& x);

/// Uniform periodic lattice on R^d used to discretize quotients G/H and G/N.
class PeriodicLattice {
 public:
  PeriodicLattice(Eigen::VectorXd lo, Eigen::VectorXd period, std::vector<int> counts);
  static PeriodicLattice cubic(int dim, double lo, double period, int count);

  int dim() const { return static_cast<int>(counts_.size()); }
  std::size_t size() const { return total_; }
  Eigen::VectorXd node(std::size_t idx) const;
  double spacing(int axis) const { return period_[axis] / counts_[static_cast<std::size_t>(axis)]; }
  double lo(int axis) const { return lo_[axis]; }
  int count(int axis) const { return counts_[static_cast<std::size_t>(axis)]; }
  double cell_weight() const;

  /// Row-major index of the lattice node nearest to x (after wrapping).
  /// Throws ActionLeavesGrid when x is not lattice aligned.
  std::size_t locate(const Eigen::VectorXd& x) const;

  /// Permutation sigma with node(sigma(j)) = node(j) + t (mod periods).
  /// Throws ActionLeavesGrid when t is not lattice aligned.
  std::vector<std::size_t> shift_permutation(const Eigen::VectorXd& t) const;

 private:
  Eigen::VectorXd lo_, period_;
  std::vector<int> counts_;
  std::size_t total_ = 0;
};

/// Matrix of the induced representation ind_H^G(sigma_lambda) evaluated at
/// the group element g on a periodic discretization of G/H: a node
/// permutation composed with the diagonal sigma-cocycle phases. The section
/// is exp of the coordinate span complementary to h.
Eigen::MatrixXcd induced_rep_operator(const LieAlgebra& alg, const Polarization& pol,
                                      const AlgebraElement& g, const PeriodicLattice& quotient_grid);

/// Character function on the lattice discretizing G/N that spans the
/// candidate subrepresentation subspace for lambda (lambda must annihilate
/// the stabilizer algebra n, and [g, g] must lie in n so that the quotient
/// is abelian).
Eigen::VectorXcd subrep_basis_function(const LieAlgebra& alg,
                                       const std::vector<AlgebraElement>& stabilizer,
                                       const DualElement& lambda, const PeriodicLattice& grid);

/// Max over the sampled group elements of (projector movement of the
/// candidate subspace under left translation) + (deviation of the restricted
/// operator from the induced-representation matrix).
double subrep_residual(const LieAlgebra& alg, const std::vector<AlgebraElement>& stabilizer,
                       const DualElement& lambda, const PeriodicLattice& grid,
                       const std::vector<AlgebraElement>& group_samples);

/// Standard-basis indices spanning a complement of span(vs) in R^dim.
std::vector<int> complement_indices(int dim, const std::vector<AlgebraElement>& vs);

}  // namespace igeo
