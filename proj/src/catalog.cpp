#include "igeo/catalog.hpp"

#include <cmath>

namespace igeo {

namespace {

constexpr double kLogSqrt2Pi = 0.9189385332046727;  // ln sqrt(2 pi)

Eigen::VectorXd box(double lo, int n) { return Eigen::VectorXd::Constant(n, lo); }

}  // namespace

ExponentialFamily make_gaussian_location(SpacePtr space) {
  if (!space) space = default_gaussian_space();
  const auto n = static_cast<Eigen::Index>(space->size());
  Eigen::VectorXd c(n);
  Eigen::MatrixXd f(1, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double x = space->coord(static_cast<std::size_t>(i));
    c[i] = -0.5 * x * x - kLogSqrt2Pi;
    f(0, i) = x;
  }
  return ExponentialFamily(std::move(space), std::move(c), std::move(f), box(-2.5, 1), box(2.5, 1),
                           "gaussian_location");
}

ExponentialFamily make_gaussian_location_scale(SpacePtr space) {
  if (!space) space = default_location_scale_space();
  const auto n = static_cast<Eigen::Index>(space->size());
  Eigen::VectorXd c = Eigen::VectorXd::Zero(n);
  Eigen::MatrixXd f(2, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double x = space->coord(static_cast<std::size_t>(i));
    f(0, i) = x;
    f(1, i) = x * x;
  }
  Eigen::VectorXd lo(2), hi(2);
  lo << -1.0, -1.2;
  hi << 1.0, -0.3;
  return ExponentialFamily(std::move(space), std::move(c), std::move(f), lo, hi,
                           "gaussian_location_scale");
}

ExponentialFamily make_categorical(int n) {
  if (n < 2) throw InvalidDescriptor("categorical: need n >= 2 atoms");
  SpacePtr space = build_space(FiniteCounting{n});
  Eigen::VectorXd c = Eigen::VectorXd::Zero(n);
  Eigen::MatrixXd f = Eigen::MatrixXd::Zero(n - 1, n);
  for (int i = 0; i + 1 < n; ++i) f(i, i) = 1.0;
  return ExponentialFamily(std::move(space), std::move(c), std::move(f), box(-4.0, n - 1),
                           box(4.0, n - 1), "categorical" + std::to_string(n));
}

ExponentialFamily make_poisson_truncated(int max_count) {
  if (max_count < 3) throw InvalidDescriptor("poisson_truncated: need max_count >= 3");
  SpacePtr space = build_space(FiniteCounting{max_count + 1});
  const auto n = static_cast<Eigen::Index>(space->size());
  Eigen::VectorXd c(n);
  Eigen::MatrixXd f(1, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double x = space->coord(static_cast<std::size_t>(i));
    c[i] = -std::lgamma(x + 1.0);
    f(0, i) = x;
  }
  return ExponentialFamily(std::move(space), std::move(c), std::move(f), box(-1.0, 1), box(2.0, 1),
                           "poisson_truncated");
}

ExponentialFamily make_gaussian_location_nd(SpacePtr product_space) {
  if (!product_space) product_space = default_gaussian_space_2d();
  const int d = product_space->point_dim();
  const auto n = static_cast<Eigen::Index>(product_space->size());
  Eigen::VectorXd c(n);
  Eigen::MatrixXd f(d, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::VectorXd x = product_space->node(static_cast<std::size_t>(i));
    c[i] = -0.5 * x.squaredNorm() - d * kLogSqrt2Pi;
    f.col(i) = x;
  }
  return ExponentialFamily(std::move(product_space), std::move(c), std::move(f), box(-1.5, d),
                           box(1.5, d), "gaussian_location_" + std::to_string(d) + "d");
}

SpacePtr default_gaussian_space() {
  return build_space(UniformGrid{-16.0, 16.0, 2048, true});
}

SpacePtr default_location_scale_space() {
  return build_space(UniformGrid{-16.0, 16.0, 2048, false});
}

SpacePtr default_gaussian_space_2d() {
  return build_space(ProductGrid{{UniformGrid{-12.0, 12.0, 256, true},
                                  UniformGrid{-12.0, 12.0, 256, true}}});
}

ExponentialFamily family_by_name(const std::string& name, int n, SpacePtr space) {
  if (name == "gaussian_location") return make_gaussian_location(std::move(space));
  if (name == "gaussian_location_scale") return make_gaussian_location_scale(std::move(space));
  if (name == "categorical") return make_categorical(n);
  if (name == "poisson_truncated") return make_poisson_truncated(n > 3 ? n : 40);
  if (name == "gaussian_location_2d") return make_gaussian_location_nd(std::move(space));
  throw ConfigError("unknown family name: " + name);
}

GroupAction make_gaussian_translation_model(SpacePtr space) {
  if (!space) space = default_gaussian_space();
  return GroupAction::translation(LieAlgebra::abelian(1), std::move(space),
                                  Eigen::MatrixXd::Identity(1, 1), {}, true,
                                  "gaussian_translation");
}

GroupAction make_gaussian_translation_model_2d(SpacePtr space2d) {
  if (!space2d) space2d = default_gaussian_space_2d();
  return GroupAction::translation(LieAlgebra::abelian(2), std::move(space2d),
                                  Eigen::MatrixXd::Identity(2, 2), {}, true,
                                  "gaussian_translation_2d");
}

GroupAction make_categorical_cycle_model(SpacePtr finite_space) {
  return GroupAction::categorical_cycle(std::move(finite_space));
}

GroupAction make_redundant_translation_model(SpacePtr space) {
  if (!space) space = default_gaussian_space();
  Eigen::MatrixXd disp(1, 2);
  disp << 1.0, 0.0;
  return GroupAction::translation(LieAlgebra::abelian(2), std::move(space), disp,
                                  {Eigen::VectorXd::Unit(2, 1)}, true, "redundant_translation");
}

GroupAction make_heisenberg_quotient_model(SpacePtr space2d) {
  if (!space2d) space2d = default_gaussian_space_2d();
  Eigen::MatrixXd disp(2, 3);
  disp << 1.0, 0.0, 0.0,
          0.0, 1.0, 0.0;
  return GroupAction::translation(LieAlgebra::heisenberg(3), std::move(space2d), disp,
                                  {Eigen::VectorXd::Unit(3, 2)}, false, "heisenberg_quotient");
}

LieAlgebra algebra_by_name(const std::string& name) {
  if (name.rfind("abelian", 0) == 0) {
    const int n = std::stoi(name.substr(7));
    return LieAlgebra::abelian(n);
  }
  if (name.rfind("heisenberg", 0) == 0) {
    const int n = std::stoi(name.substr(10));
    return LieAlgebra::heisenberg(n);
  }
  if (name == "filiform4") return LieAlgebra::filiform4();
  throw ConfigError("unknown algebra name: " + name);
}

}  // namespace igeo
