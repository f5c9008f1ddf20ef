#include <gtest/gtest.h>

#include <cmath>

#include "nchopf/chern_geometry.hpp"

using namespace nchopf;

TEST(Chern, IntegralsAreIntegers) {
  for (Index n : {1, 2, 3}) EXPECT_NEAR(chern_number(n), static_cast<double>(n), 1e-7);
}

TEST(Chern, TangentRadialMapAgrees) {
  QuadratureConfig cfg;
  cfg.radial_transform = RadialTransform::tangent;
  EXPECT_NEAR(chern_number(2, cfg), 2.0, 1e-7);
}

TEST(Chern, CurvatureDensityScalesWithDegree) {
  // n / (1+|z|^2)^2; the plane integral carries the 1/pi.
  const Complex z(0.7, -0.4);
  const double w = 1.0 + std::norm(z);
  for (Index n = 1; n <= 4; ++n)
    EXPECT_NEAR(curvature_density(z, n), n / (w * w), 1e-12);
}

TEST(Chern, ConnectionRatio) {
  const Complex z(1.3, 0.2);
  for (Index n = 1; n <= 5; ++n)
    EXPECT_NEAR(std::abs(pullback_connection_coefficient(z, n) / connection_coefficient(z) - double(n)), 0.0, 1e-12);
}

TEST(Chern, ProjectiveProjectorsAreRankOne) {
  Eigen::VectorXcd v(3);
  v << Complex(1.0, 0.5), Complex(-0.3), Complex(0.0, 2.0);
  const Matrix p = cp_projector(v, 2);
  EXPECT_LT((p * p - p).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_NEAR(std::abs(p.trace() - 1.0), 0.0, 1e-14);
}

TEST(Chern, BadConfigRejected) {
  QuadratureConfig cfg;
  cfg.target_tol = -1.0;
  EXPECT_THROW(cfg.validate(), Error);
}
