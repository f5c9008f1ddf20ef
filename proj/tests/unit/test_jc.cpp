#include <gtest/gtest.h>

#include <cmath>

#include "nchopf/jc_qdm.hpp"

using namespace nchopf;

namespace {
BlockOperator identity_like(const BlockOperator& op) { return BlockOperator::identity(op.row_dims()); }
}  // namespace

class JcTheta : public ::testing::TestWithParam<double> {};

TEST_P(JcTheta, RegularChartDiagonalizesOnBand) {
  const DetunedModel m(GetParam(), FockSpace(40));
  const Chart c = GetParam() > 0 ? Chart::I : Chart::II;
  const BlockOperator u = u_chart(m, c);
  EXPECT_LT(interior_residual(u * chart_eigenvalues(m, c) * u.adjoint(), h_jc(m), {0, 2}), 1e-10);
  EXPECT_LT(interior_residual(u.adjoint() * u, identity_like(u), {0, 2}), 1e-10);
}

TEST_P(JcTheta, OrderingsAgree) {
  const DetunedModel m(GetParam(), FockSpace(40));
  const Chart c = GetParam() > 0 ? Chart::I : Chart::II;
  EXPECT_LT(interior_residual(u_chart(m, c, Ordering::Left), u_chart(m, c, Ordering::Right), {0, 2}), 1e-10);
}

TEST_P(JcTheta, EvolutionIsUnitaryAndMatchesOracle) {
  const DetunedModel m(GetParam(), FockSpace(40));
  const BlockOperator e = evolution_closed(m, 3.0);
  EXPECT_LT(interior_residual(e, reference_exponential(h_jc(m), 3.0, true), {0, 2}), 1e-8);
  EXPECT_LT(interior_residual(e.adjoint() * e, identity_like(e), {0, 2}), 1e-9);
}

TEST_P(JcTheta, SpectralDecomposition) {
  EXPECT_LT(spectral_decomposition(DetunedModel(GetParam(), FockSpace(40))), 1e-10);
}

INSTANTIATE_TEST_SUITE_P(Detunings, JcTheta, ::testing::Values(-2.5, -0.3, 0.3, 1.0, 2.5));

TEST(Jc, FullHamiltonianSplitsIntoCommutingParts) {
  const FullJC f = full_jc_hamiltonian(JCParams{}, FockSpace(20));
  const BlockOperator c = f.h1 * f.h2 - f.h2 * f.h1;
  EXPECT_LT(interior_max(c, {0, 2}), 1e-12);
  EXPECT_LT(interior_residual(f.h1 + f.h2, f.h, {0, 2}), 1e-12);
}

TEST(Jc, DiracScanFindsOnlyTheLowerGroundState) {
  const DiracScanReport rep = dirac_string_scan({-1.0, 1.0}, FockSpace(16));
  ASSERT_EQ(rep.entries.size(), 4u);
  EXPECT_TRUE(rep.all_match());
  for (const auto& e : rep.entries) {
    EXPECT_TRUE(e.excited_clear);
    for (const auto& s : e.singular) EXPECT_EQ(s.index, 0);
  }
}

TEST(Jc, DegenerateDetuningRejected) {
  EXPECT_THROW(DetunedModel(0.0, FockSpace(8)), Error);
  EXPECT_THROW(DetunedModel(std::nan(""), FockSpace(8)), Error);
}

TEST(Jc, InvalidParamsRejected) {
  JCParams p;
  p.g = 0.0;
  EXPECT_THROW(p.validate(), Error);
}
