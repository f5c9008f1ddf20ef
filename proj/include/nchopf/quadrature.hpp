#pragma once

// One-dimensional adaptive quadrature and the single place where planar
// integrals over C (or the unit disk) are reduced to radial ones.

#include <functional>

#include "nchopf/error.hpp"

namespace nchopf {

enum class RadialTransform { rational, tangent };

struct QuadratureConfig {
  int max_subdivisions = 500;
  double target_tol = 1e-10;
  RadialTransform radial_transform = RadialTransform::rational;

  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int subdivisions = 0;
};

/// Adaptive Gauss-Kronrod (7/15) on [a, b]. Throws QuadratureBudgetExceeded
/// when the error estimate cannot be pushed below target_tol.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureConfig& cfg = {});

/// int_0^inf f(u) du after mapping [0, inf) onto [0, 1)
/// (u = t/(1-t), or u = tan(pi t / 2) for the tangent transform).
QuadratureResult integrate_half_line(const std::function<double(double)>& f,
                                     const QuadratureConfig& cfg = {});

/// (1/pi) int_C g(|z|^2) dx dy = int_0^inf g(u) du. The angular integral is
/// done analytically; this fixes the normalization (1/2 pi i) dzbar ^ dz = dx dy / pi.
QuadratureResult planar_radial_integral(const std::function<double(double)>& g,
                                        const QuadratureConfig& cfg = {});

/// (1/pi) int_{|z|<1} g(|z|^2) dx dy = int_0^1 g(u) du.
QuadratureResult disk_radial_integral(const std::function<double(double)>& g,
                                      const QuadratureConfig& cfg = {});

}  // namespace nchopf
