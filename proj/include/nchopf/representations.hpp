#pragma once

// Spin representations: phi_j of SU(2) by polynomial expansion, the
// truncated SU(1,1) representation psi_j, the non-commutative Phi_1(U) and
// Phi_{3/2}(U), Clebsch-Gordan decompositions with their non-commutative
// obstruction, and the compact / non-compact inner products.
//
// Spins are passed as two_j = 2j throughout.

#include <vector>

#include "nchopf/classical.hpp"
#include "nchopf/fock.hpp"
#include "nchopf/jc_qdm.hpp"
#include "nchopf/quadrature.hpp"

namespace nchopf {

/// Matrix of f(z) -> (alpha + beta z)^{2j} f((-conj(beta) + conj(alpha) z)/(alpha + beta z))
/// in the orthonormal basis sqrt(C(2j,k)) z^k.
Matrix spin_rep_su2(Index two_j, const Matrix2& a);

/// The explicit matrices for 2j = 1, 2, 3 written out in alpha, beta.
Matrix spin_rep_closed(Index two_j, const Matrix2& a);

/// Builders shared by the operator and the commuting-scalar versions.
BlockOperator phi_one_from(const Matrix& x0, const Matrix& x1, const Matrix& x2, const Matrix& y0,
                           const Matrix& y1);
BlockOperator phi_three_half_from(const Matrix& x0, const Matrix& x1, const Matrix& x2, const Matrix& x3,
                                  const Matrix& y0, const Matrix& y1, const Matrix& y2);

BlockOperator nc_phi_one(const DetunedModel& model);
BlockOperator nc_phi_three_half(const DetunedModel& model);

/// Column k of psi_j(B), rows 0..cutoff-1.
Vector su11_column(Index two_j, const Matrix2& b, Index k, Index cutoff);
Matrix su11_rep(Index two_j, const Matrix2& b, Index cutoff);

struct CutoffChoice {
  Index cutoff = 0;
  double defect = 0.0;  // | ||column 0||^2 - 1 |
};
/// Smallest cutoff in 64, 128, ..., 4096 with column-0 norm defect below tol.
CutoffChoice su11_auto_cutoff(Index two_j, const Matrix2& b, double tol = 1e-8);

/// The Clebsch-Gordan change of basis for two- and three-fold products.
Eigen::MatrixXd clebsch_T(int fold);

/// max |T^dagger (A (x) ... (x) A) T - diag(...)|
double tensor_decomposition_su2(const Matrix2& a, int fold);

/// Band-restricted residual of T^dagger (V (x) V) T - diag(1, Phi_1(V)), V = U_I.
double nc_tensor_obstruction(const DetunedModel& model, Window window = {2, kDefaultBand});
/// Same with V replaced by commuting scalars (the chart-I matrix at p).
double nc_tensor_obstruction_scalar(const BerryPoint& p);

/// Closed-form and quadrature values of a moment integral.
struct MomentValue {
  Complex value;
  double exact = 0.0;
};

/// (2(2j+1)/2 pi) int_C z^k zbar^l / (1+|z|^2)^{2j+2} d^2z; k, l <= 2j.
MomentValue compact_moment(Index two_j, Index k, Index l, const QuadratureConfig& cfg = {});
/// (2(2j-1)/2 pi) int_D (1-|z|^2)^{2j-2} z^k zbar^l d^2z; 2j >= 2.
MomentValue noncompact_moment(Index two_j, Index k, Index l, const QuadratureConfig& cfg = {});

enum class InnerProductKind { compact, noncompact };

struct InnerProduct {
  Complex closed;      // weighted coefficient sum
  Complex quadrature;  // sum of coefficient products times moments
};

/// f, g are monomial coefficients (f(z) = sum f_k z^k).
InnerProduct inner_product(const std::vector<Complex>& f, const std::vector<Complex>& g, Index two_j,
                           InnerProductKind kind, const QuadratureConfig& cfg = {});

}  // namespace nchopf
