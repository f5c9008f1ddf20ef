#include <gtest/gtest.h>

#include "nchopf/fock.hpp"

using namespace nchopf;

TEST(Fock, LadderMatricesSatisfyCommutatorAwayFromTop) {
  const FockSpace space(16);
  const Matrix a = annihilation<Complex>(space).matrix(), ad = creation<Complex>(space).matrix();
  const Matrix comm = a * ad - ad * a;
  for (Index m = 0; m < 15; ++m) EXPECT_NEAR(std::abs(comm(m, m) - 1.0), 0.0, 1e-14);
  // The top state is where truncation shows.
  EXPECT_GT(std::abs(comm(15, 15) - 1.0), 1.0);
}

TEST(Fock, CreationFlagsTopColumnAsTruncated) {
  const auto ad = creation<Complex>(FockSpace(8));
  EXPECT_TRUE(ad.is_truncated(7));
  EXPECT_FALSE(ad.is_truncated(6));
}

TEST(Fock, CutoffBelowTwoRejected) { EXPECT_THROW(FockSpace(1), Error); }

TEST(Fock, InteriorMaxIgnoresBandAndFirst) {
  Matrix m = Matrix::Zero(10, 10);
  m(9, 9) = 1.0;  // inside the top band
  m(0, 0) = 1.0;  // before first
  m(4, 4) = 1e-3;
  const BlockOperator op({10}, {10}, m);
  EXPECT_DOUBLE_EQ(interior_max(op, {1, 2}), 1e-3);
  EXPECT_DOUBLE_EQ(interior_max(op, {0, 2}), 1.0);
}

TEST(Fock, EmptyWindowThrowsBandTooLarge) {
  const BlockOperator op({4}, {4}, Matrix::Zero(4, 4));
  try {
    interior_max(op, {2, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BandTooLarge);
  }
}

TEST(Fock, BlockProductMatchesDense) {
  const Matrix a = Matrix::Random(6, 6), b = Matrix::Random(6, 6);
  const BlockOperator x({3, 3}, {3, 3}, a), y({3, 3}, {3, 3}, b);
  EXPECT_LT(((x * y).dense() - a * b).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT(((x * y).block(1, 0) - (a * b).block(3, 0, 3, 3)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Fock, ReferenceExponentialsAgreeOnHermitianInput) {
  const Matrix r = Matrix::Random(8, 8);
  const BlockOperator h({4, 4}, {4, 4}, r + r.adjoint());
  const auto e1 = reference_exponential(h, 0.7, true), e2 = reference_exponential(h, 0.7, false);
  EXPECT_LT(max_abs_diff(e1, e2), 1e-12);
  EXPECT_TRUE((e1.adjoint() * e1).dense().isIdentity(1e-12));
}

TEST(Fock, GeneralExponentialOfNilpotent) {
  Matrix n = Matrix::Zero(3, 3);
  n(0, 1) = 1.0;
  n(1, 2) = 1.0;
  const Matrix e = general_exponential(n);
  EXPECT_NEAR(std::abs(e(0, 2) - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(e(0, 1) - 1.0), 0.0, 1e-15);
}
