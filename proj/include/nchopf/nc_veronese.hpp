#pragma once

// Non-commutative sphere / hyperboloid columns and their Veronese maps.
//
// Compact side (theta > 0, truncated space of dim M):
//   X_{-j} = (R(N+1-j)+theta) / sqrt(2R(N+1-j)(R(N+1-j)+theta))
//   Y_{-j} = sqrt((N-j)/N) / sqrt(2R(N-j)(R(N-j)+theta)) a^dagger
//   Z_{-j} = Y_{-j} X_{-j}^{-1}
// Pseudo side (admissible level n): Gamma_{-j} lives on F_{n+j} and
// Omega_{-j} maps F_{n+j} -> F_{n+j+1}, so every product in a column is exact.

#include <vector>

#include "nchopf/classical.hpp"
#include "nchopf/fock.hpp"
#include "nchopf/jc_qdm.hpp"
#include "nchopf/pseudo_qdm.hpp"

namespace nchopf {

/// Column of operators sharing one domain. Entry k maps the domain into a
/// space of dimension entries[k].rows(). Entries are trusted on basis indices
/// >= valid_first (and below dim - band for truncated spaces).
struct OperatorColumn {
  std::vector<Matrix> entries;
  Index valid_first = 0;
  Index band = 0;

  Index size() const { return static_cast<Index>(entries.size()); }
  BlockOperator to_block() const { return BlockOperator::column(entries, band); }
  /// C^dagger C
  Matrix gram() const;
  /// C^dagger J C with alternating signs (+, -, +, ...)
  Matrix pseudo_gram() const;
};

double binomial(Index n, Index k);
/// (a)_k / k!
double pochhammer_ratio(double a, Index k);

FockOperator x_op(const DetunedModel& model, Index j);
FockOperator y_op(const DetunedModel& model, Index j);
FockOperator z_op(const DetunedModel& model, Index j);
/// Z_0 written as a^dagger (R(N+1)+theta)^{-1}
FockOperator z0_right_form(const DetunedModel& model);
/// Entrywise inverse of a diagonal operator; zero entries stay zero.
FockOperator diagonal_inverse(const FockOperator& d);
/// Entrywise real power of a nonnegative diagonal operator.
FockOperator diagonal_power(const FockOperator& d, double p);

OperatorColumn sphere_column(const DetunedModel& model);
OperatorColumn veronese_column(const DetunedModel& model, Index n);
BlockOperator veronese_projector(const DetunedModel& model, Index n);
OperatorColumn local_column(const DetunedModel& model, Index n);
/// (1, Z_n)^T (1 + Z_0^dagger Z_0)^{-n/2}
OperatorColumn veronese_from_local(const DetunedModel& model, Index n);

/// [[G^{-1}, G^{-1}Z^dagger], [Z G^{-1}, Z G^{-1} Z^dagger]] with G = 1 + Z^dagger Z.
BlockOperator oike_projector(const Matrix& z, Index band = kDefaultBand);

/// Symbol of Z_0 under a^dagger -> x+iy, N -> x^2+y^2, theta -> z.
Complex z_symbol(const BerryPoint& p);

Eigen::VectorXcd classical_veronese(const Eigen::Vector2cd& v, Index n);
/// v = (alpha, beta) with |alpha|^2 - |beta|^2 = 1; entries sqrt(C(n,j)) alpha^{n-j} (-beta)^j.
Eigen::VectorXcd classical_pseudo_veronese(const Eigen::Vector2cd& v, Index n);
/// Local coordinate w with v_n = (1, sqrt(C(n,1)) w, ...) alpha^n, i.e. w = -beta/alpha.
Complex pseudo_local_coordinate(const Eigen::Vector2cd& v);

FockOperator gamma_op(const PseudoModel& model, Index j);
FockOperator omega_op(const PseudoModel& model, Index j);
/// W = Omega_0 Gamma_0^{-1} = -a^dagger / (S(N)+theta) : F_n -> F_{n+1}
FockOperator w_op(const PseudoModel& model);

OperatorColumn pseudo_veronese_column(const PseudoModel& model, Index n);
BlockOperator pseudo_veronese_projector(const PseudoModel& model, Index n);
/// Signature J_n over the column's components.
BlockOperator column_signature(const OperatorColumn& column);

/// two_j = 2j. Entries k = 0..depth of the first column of Psi_j(V).
OperatorColumn bhat_column(const PseudoModel& model, Index two_j, Index depth);

}  // namespace nchopf
