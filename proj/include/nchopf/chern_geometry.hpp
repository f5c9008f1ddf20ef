#pragma once

// Classical projective geometry: CP^n / CQ^n projectors, the canonical
// connection on CP^1, its pullback under the Veronese map and the first
// Chern number of the pulled-back bundle.

#include <utility>

#include <Eigen/Dense>

#include "nchopf/fock.hpp"
#include "nchopf/quadrature.hpp"

namespace nchopf {

/// |zeta><zeta| / <zeta|zeta>, zeta of length n+1.
Matrix cp_projector(const Eigen::VectorXcd& homogeneous, Index n);

/// v v^dagger J_n with J_n = diag(1, -1, 1, ...); needs v^dagger J_n v = 1.
Matrix cq_projector(const Eigen::VectorXcd& v, Index n);

struct VeroneseLocal {
  Eigen::VectorXcd psi;   // sqrt(C(n,j)) z^j, j = 1..n
  Eigen::VectorXcd dpsi;  // d psi / dz
};
VeroneseLocal veronese_local(Complex z, Index n);

/// dz-coefficient of the canonical connection: conj(z) / (1 + |z|^2).
Complex connection_coefficient(Complex z);
/// (1 + psi^dagger psi)^{-1} psi^dagger dpsi/dz
Complex pullback_connection_coefficient(Complex z, Index n);
/// n / (1 + |z|^2)^2 against dx dy / pi.
double curvature_density(Complex z, Index n);

/// (1/2 pi i) int_C F_n.
QuadratureResult chern_integral(Index n, const QuadratureConfig& cfg = {});
double chern_number(Index n, const QuadratureConfig& cfg = {});

}  // namespace nchopf
