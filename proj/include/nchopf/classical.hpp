#pragma once

// Commutative 2x2 layer: su(2)/su(1,1) generators, the Berry and pseudo Berry
// models, their chart diagonalizers, transition functions and projectors.
//
// Everything is templated on the real type so the same formulas can be
// evaluated in long double as a cross-check.

#include <array>
#include <cmath>
#include <complex>

#include <Eigen/Dense>

#include "nchopf/error.hpp"

namespace nchopf {

template <typename T>
using Matrix2T = Eigen::Matrix<std::complex<T>, 2, 2>;
using Matrix2 = Matrix2T<double>;

enum class Chart { I, II };
enum class Algebra { su2, su11 };
enum class PseudoDomain { Dplus, Dminus, Outside };

inline const char* to_string(Chart c) { return c == Chart::I ? "I" : "II"; }
inline const char* to_string(PseudoDomain d) {
  switch (d) {
    case PseudoDomain::Dplus: return "Dplus";
    case PseudoDomain::Dminus: return "Dminus";
    default: return "Outside";
  }
}

/// Relative fence around Dirac strings: a chart is refused when its
/// normalizer r +- z falls below kDiracFence * r.
inline constexpr double kDiracFence = 1e-13;

template <typename T>
struct BasicBerryPoint {
  T x{}, y{}, z{};

  T r() const { return std::sqrt(x * x + y * y + z * z); }
  T rho2() const { return x * x + y * y; }
  /// s = sqrt(z^2 - x^2 - y^2), meaningful inside the pseudo domain.
  T s() const { return std::sqrt(z * z - x * x - y * y); }
};
using BerryPoint = BasicBerryPoint<double>;

template <typename T>
struct Generators {
  Matrix2T<T> g1, g2, g3, plus, minus;
};

template <typename T = double>
Generators<T> su2_generators() {
  using C = std::complex<T>;
  const C i(0, 1);
  Generators<T> g;
  g.g1 << 0, 1, 1, 0;
  g.g2 << 0, -i, i, 0;
  g.g3 << 1, 0, 0, -1;
  g.plus << 0, 1, 0, 0;
  g.minus << 0, 0, 1, 0;
  return g;
}

template <typename T = double>
Generators<T> su11_generators() {
  using C = std::complex<T>;
  const C i(0, 1);
  Generators<T> g;
  g.g1 << 0, 1, -1, 0;
  g.g2 << 0, -i, -i, 0;
  g.g3 << 1, 0, 0, -1;
  g.plus << 0, 1, 0, 0;
  g.minus << 0, 0, -1, 0;
  return g;
}

template <typename T = double>
Matrix2T<T> signature2() {
  Matrix2T<T> j;
  j << 1, 0, 0, -1;
  return j;
}

/// exp(i sum_j x_j G_j). (sum x_j G_j)^2 is a multiple q of the identity for
/// both algebras, so the exponential has a closed form in cos/cosh.
template <typename T>
Matrix2T<T> group_exponential(const std::array<T, 3>& x, Algebra algebra) {
  using C = std::complex<T>;
  const auto g = algebra == Algebra::su2 ? su2_generators<T>() : su11_generators<T>();
  const Matrix2T<T> gen = C(x[0]) * g.g1 + C(x[1]) * g.g2 + C(x[2]) * g.g3;
  const T q = algebra == Algebra::su2 ? x[0] * x[0] + x[1] * x[1] + x[2] * x[2]
                                      : x[2] * x[2] - x[0] * x[0] - x[1] * x[1];
  T c, sinc;
  if (q > 0) {
    const T w = std::sqrt(q);
    c = std::cos(w);
    sinc = std::sin(w) / w;
  } else if (q < 0) {
    const T w = std::sqrt(-q);
    c = std::cosh(w);
    sinc = std::sinh(w) / w;
  } else {
    c = 1;
    sinc = 1;
  }
  return C(c) * Matrix2T<T>::Identity() + C(0, sinc) * gen;
}

/// [[alpha, -conj(beta)], [beta, conj(alpha)]]
template <typename T>
Matrix2T<T> su2_element(std::complex<T> alpha, std::complex<T> beta) {
  Matrix2T<T> a;
  a << alpha, -std::conj(beta), beta, std::conj(alpha);
  return a;
}

/// [[alpha, -conj(beta)], [-beta, conj(alpha)]]
template <typename T>
Matrix2T<T> su11_element(std::complex<T> alpha, std::complex<T> beta) {
  Matrix2T<T> b;
  b << alpha, -std::conj(beta), -beta, std::conj(alpha);
  return b;
}

/// max(|A^dagger A - 1|, |det A - 1|)
template <typename T>
T su2_defect(const Matrix2T<T>& a) {
  const T u = (a.adjoint() * a - Matrix2T<T>::Identity()).cwiseAbs().maxCoeff();
  return std::max(u, std::abs(a.determinant() - std::complex<T>(1)));
}

/// max(|B^dagger J B - J|, |det B - 1|)
template <typename T>
T su11_defect(const Matrix2T<T>& b) {
  const Matrix2T<T> j = signature2<T>();
  const T u = (b.adjoint() * j * b - j).cwiseAbs().maxCoeff();
  return std::max(u, std::abs(b.determinant() - std::complex<T>(1)));
}

// ---------------------------------------------------------------------------
// Berry model

template <typename T>
Matrix2T<T> berry_hamiltonian(const BasicBerryPoint<T>& p) {
  using C = std::complex<T>;
  Matrix2T<T> h;
  h << C(p.z), C(p.x, -p.y), C(p.x, p.y), C(-p.z);
  return h;
}

template <typename T>
Matrix2T<T> berry_diagonalizer(const BasicBerryPoint<T>& p, Chart chart) {
  using C = std::complex<T>;
  const T r = p.r();
  if (!(r > 0)) throw Error(ErrorKind::DegeneratePoint, "Berry point at the origin");
  // r +/- z with the cancelling sign rewritten as rho^2 / (r -/+ z).
  const T rpz = p.z >= 0 ? r + p.z : p.rho2() / (r - p.z);
  const T rmz = p.z <= 0 ? r - p.z : p.rho2() / (r + p.z);
  Matrix2T<T> a;
  if (chart == Chart::I) {
    if (rpz < T(kDiracFence) * r)
      throw Error(ErrorKind::DiracString, "chart I is undefined on the negative z-axis");
    const T n = std::sqrt(2 * r * rpz);
    a << C(rpz), C(-p.x, p.y), C(p.x, p.y), C(rpz);
    a /= C(n);
  } else {
    if (rmz < T(kDiracFence) * r)
      throw Error(ErrorKind::DiracString, "chart II is undefined on the non-negative z-axis");
    const T n = std::sqrt(2 * r * rmz);
    a << C(p.x, -p.y), C(-rmz), C(rmz), C(p.x, p.y);
    a /= C(n);
  }
  return a;
}

/// Phi with A_II = A_I Phi.
template <typename T>
Matrix2T<T> berry_transition(const BasicBerryPoint<T>& p) {
  using C = std::complex<T>;
  if (p.x == 0 && p.y == 0) throw Error(ErrorKind::OnAxis, "transition undefined on the z-axis");
  const T rho = std::sqrt(p.rho2());
  Matrix2T<T> phi = Matrix2T<T>::Zero();
  phi(0, 0) = C(p.x, -p.y) / rho;
  phi(1, 1) = C(p.x, p.y) / rho;
  return phi;
}

template <typename T>
Matrix2T<T> berry_projector(const BasicBerryPoint<T>& p) {
  using C = std::complex<T>;
  const T r = p.r();
  if (!(r > 0)) throw Error(ErrorKind::DegeneratePoint, "Berry point at the origin");
  Matrix2T<T> m;
  m << C(r + p.z), C(p.x, -p.y), C(p.x, p.y), C(r - p.z);
  return m / C(2 * r);
}

// ---------------------------------------------------------------------------
// Pseudo Berry model

template <typename T>
Matrix2T<T> pseudo_berry_hamiltonian(const BasicBerryPoint<T>& p) {
  using C = std::complex<T>;
  Matrix2T<T> h;
  h << C(p.z), C(p.x, -p.y), C(-p.x, -p.y), C(-p.z);
  return h;
}

template <typename T>
PseudoDomain pseudo_domain(const BasicBerryPoint<T>& p) {
  if (p.z * p.z - p.x * p.x - p.y * p.y > 0) {
    if (p.z > 0) return PseudoDomain::Dplus;
    if (p.z < 0) return PseudoDomain::Dminus;
  }
  return PseudoDomain::Outside;
}

template <typename T>
Matrix2T<T> pseudo_diagonalizer(const BasicBerryPoint<T>& p, Chart chart) {
  using C = std::complex<T>;
  if (pseudo_domain(p) != PseudoDomain::Dplus)
    throw Error(ErrorKind::OutsideDomain, "pseudo diagonalizer needs z^2 > x^2 + y^2, z > 0");
  const T s = p.s();
  Matrix2T<T> b;
  if (chart == Chart::I) {
    const T n = std::sqrt(2 * s * (s + p.z));
    b << C(s + p.z), C(-p.x, p.y), C(-p.x, -p.y), C(s + p.z);
    b /= C(n);
  } else {
    // z - s = rho^2 / (z + s) avoids cancellation near the axis.
    const T zs = p.rho2() / (p.z + s);
    if (p.rho2() == 0 || zs < T(kDiracFence) * s)
      throw Error(ErrorKind::DiracString, "pseudo chart II is undefined on the z-axis");
    const T n = std::sqrt(2 * s * zs);
    b << C(-p.x, p.y), C(zs), C(zs), C(-p.x, -p.y);
    b /= C(n);
  }
  return b;
}

/// Phi with B_I = B_II Phi.
template <typename T>
Matrix2T<T> pseudo_transition(const BasicBerryPoint<T>& p) {
  using C = std::complex<T>;
  if (p.x == 0 && p.y == 0) throw Error(ErrorKind::OnAxis, "transition undefined on the z-axis");
  const T rho = std::sqrt(p.rho2());
  Matrix2T<T> phi = Matrix2T<T>::Zero();
  phi(0, 0) = C(-p.x, -p.y) / rho;
  phi(1, 1) = C(-p.x, p.y) / rho;
  return phi;
}

template <typename T>
Matrix2T<T> pseudo_projector(const BasicBerryPoint<T>& p) {
  using C = std::complex<T>;
  if (pseudo_domain(p) != PseudoDomain::Dplus)
    throw Error(ErrorKind::OutsideDomain, "pseudo projector needs z^2 > x^2 + y^2, z > 0");
  const T s = p.s();
  Matrix2T<T> q;
  q << C(p.z + s), C(p.x, -p.y), C(-p.x, -p.y), C(-p.z + s);
  return q / C(2 * s);
}

/// B^{-1} = J B^dagger J for B in SU(1,1).
template <typename T>
Matrix2T<T> pseudo_inverse(const Matrix2T<T>& b) {
  const Matrix2T<T> j = signature2<T>();
  return j * b.adjoint() * j;
}

}  // namespace nchopf
