#include "nchopf/chern_geometry.hpp"

#include <cmath>

#include "nchopf/nc_veronese.hpp"

namespace nchopf {

Matrix cp_projector(const Eigen::VectorXcd& zeta, Index n) {
  if (n < 1 || zeta.size() != n + 1) throw Error(ErrorKind::ShapeMismatch, "homogeneous vector must have n+1 entries");
  const double norm2 = zeta.squaredNorm();
  if (!(norm2 > 0)) throw Error(ErrorKind::ZeroVector, "homogeneous coordinates must not all vanish");
  return zeta * zeta.adjoint() / norm2;
}

Matrix cq_projector(const Eigen::VectorXcd& v, Index n) {
  if (n < 1 || v.size() != n + 1) throw Error(ErrorKind::ShapeMismatch, "vector must have n+1 entries");
  Eigen::VectorXd signs(n + 1);
  for (Index k = 0; k <= n; ++k) signs(k) = k % 2 == 0 ? 1.0 : -1.0;
  const Matrix j = signs.cast<Complex>().asDiagonal();
  const Complex pn = (v.adjoint() * j * v)(0, 0);
  if (std::abs(pn - 1.0) > 1e-10) throw Error(ErrorKind::NotPseudoNormalized, "v^dagger J v must equal 1");
  return v * v.adjoint() * j;
}

VeroneseLocal veronese_local(Complex z, Index n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "degree must be at least 1");
  VeroneseLocal out{Eigen::VectorXcd(n), Eigen::VectorXcd(n)};
  for (Index j = 1; j <= n; ++j) {
    const double c = std::sqrt(binomial(n, j));
    out.psi(j - 1) = c * std::pow(z, static_cast<int>(j));
    out.dpsi(j - 1) = c * static_cast<double>(j) * std::pow(z, static_cast<int>(j - 1));
  }
  return out;
}

Complex connection_coefficient(Complex z) { return std::conj(z) / (1.0 + std::norm(z)); }

Complex pullback_connection_coefficient(Complex z, Index n) {
  const VeroneseLocal v = veronese_local(z, n);
  return v.psi.dot(v.dpsi) / (1.0 + v.psi.squaredNorm());
}

double curvature_density(Complex z, Index n) {
  const double d = 1.0 + std::norm(z);
  return static_cast<double>(n) / (d * d);
}

QuadratureResult chern_integral(Index n, const QuadratureConfig& cfg) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "degree must be at least 1");
  return planar_radial_integral([n](double u) { return curvature_density(Complex(std::sqrt(u), 0.0), n); },
                                cfg);
}

double chern_number(Index n, const QuadratureConfig& cfg) { return chern_integral(n, cfg).value; }

}  // namespace nchopf
