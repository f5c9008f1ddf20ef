#include <gtest/gtest.h>

#include <array>
#include <random>

#include "nchopf/classical.hpp"

using namespace nchopf;

namespace {
double max_abs(const Matrix2& m) { return m.cwiseAbs().maxCoeff(); }
}  // namespace

TEST(Classical, ChartsDiagonalizeAndAgreeUpToTransition) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 200; ++i) {
    const BerryPoint p{u(rng), u(rng), u(rng)};
    Matrix2 d = Matrix2::Zero();
    d(0, 0) = p.r();
    d(1, 1) = -p.r();
    for (Chart c : {Chart::I, Chart::II}) {
      const Matrix2 a = berry_diagonalizer(p, c);
      EXPECT_LT(su2_defect(a), 1e-13);
      EXPECT_LT(max_abs(a * d * a.adjoint() - berry_hamiltonian(p)), 1e-13);
    }
    EXPECT_LT(max_abs(berry_diagonalizer(p, Chart::I) * berry_transition(p) - berry_diagonalizer(p, Chart::II)),
              1e-13);
  }
}

TEST(Classical, ProjectorIsScaleInvariant) {
  const BerryPoint p{0.3, -0.2, 0.9}, q{3.0, -2.0, 9.0};
  EXPECT_LT(max_abs(berry_projector(p) - berry_projector(q)), 1e-15);
}

TEST(Classical, DiracStringsRaiseTypedErrors) {
  try {
    berry_diagonalizer(BerryPoint{0, 0, -1}, Chart::I);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DiracString);
  }
  EXPECT_THROW(berry_diagonalizer(BerryPoint{0, 0, 1}, Chart::II), Error);
  EXPECT_NO_THROW(berry_diagonalizer(BerryPoint{0, 0, 1}, Chart::I));
  EXPECT_THROW(berry_transition(BerryPoint{0, 0, 1}), Error);
  EXPECT_THROW(berry_projector(BerryPoint{0, 0, 0}), Error);
}

TEST(Classical, PseudoDiagonalizerIsPseudoUnitary) {
  const BerryPoint p{0.4, 0.3, 2.0};
  const Matrix2 b = pseudo_diagonalizer(p, Chart::I);
  EXPECT_LT(su11_defect(b), 1e-13);
  const Matrix2 q = pseudo_projector(p);
  EXPECT_LT(max_abs(q * q - q), 1e-13);
  EXPECT_THROW(pseudo_diagonalizer(BerryPoint{2.0, 0.0, 1.0}, Chart::I), Error);
}

TEST(Classical, GroupExponentialLandsInGroup) {
  const std::array<double, 3> c{0.3, -1.1, 0.7};
  EXPECT_LT(su2_defect(group_exponential(c, Algebra::su2)), 1e-13);
  EXPECT_LT(su11_defect(group_exponential(c, Algebra::su11)), 1e-13);
}
