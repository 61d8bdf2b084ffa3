#pragma once

#include "igeo/expfam.hpp"
#include "igeo/transform_model.hpp"

namespace igeo {

// Built-in families. The default spaces are wide enough that every density
// the configured parameter boxes can produce decays far below roundoff at
// the boundary, so periodic wraparound and truncation never show up in the
// residuals the verification suites bound.

/// Standard normal with location parameter: C = -x^2/2 - ln sqrt(2 pi),
/// F_1 = x, psi(theta) = theta^2/2.
ExponentialFamily make_gaussian_location(SpacePtr space);
/// F_1 = x, F_2 = x^2 (location-scale in natural parameters, theta_2 < 0).
ExponentialFamily make_gaussian_location_scale(SpacePtr space);
/// n atoms, F_i(x_j) = delta_ij for i < n, last probability gauge-fixed.
ExponentialFamily make_categorical(int n);
/// Poisson truncated to {0..max_count}: C = -ln x!, F_1 = x.
ExponentialFamily make_poisson_truncated(int max_count);
/// Product standard normal on R^d with location parameters, F_i = x_i.
ExponentialFamily make_gaussian_location_nd(SpacePtr product_space);

/// Default spaces used by the built-in models.
SpacePtr default_gaussian_space();       // periodic grid [-16, 16), 2048 nodes
SpacePtr default_location_scale_space(); // midpoint grid [-16, 16], 2048 cells
SpacePtr default_gaussian_space_2d();    // periodic [-12, 12)^2, 256 per axis

/// Family by catalog name: gaussian_location, gaussian_location_scale,
/// categorical(n via argument), poisson_truncated, gaussian_location_2d.
ExponentialFamily family_by_name(const std::string& name, int n = 3, SpacePtr space = nullptr);

/// Built-in transformation models.
GroupAction make_gaussian_translation_model(SpacePtr space);       // R on the line
GroupAction make_gaussian_translation_model_2d(SpacePtr space2d);  // R^2 on the plane
GroupAction make_categorical_cycle_model(SpacePtr finite_space);
/// R^2 acting through its first coordinate; the second factor is a
/// nontrivial normal stabilizer (n = span{e_2}).
GroupAction make_redundant_translation_model(SpacePtr space);
/// Heisenberg group acting on the plane G/Z; exposes act_sample and
/// stabilizer data only (no invariant exponential family is configured).
GroupAction make_heisenberg_quotient_model(SpacePtr space2d);

/// Lie algebra catalog: abelian<n>, heisenberg<2k+1>, filiform4.
LieAlgebra algebra_by_name(const std::string& name);

}  // namespace igeo
