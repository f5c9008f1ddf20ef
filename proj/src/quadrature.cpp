#include "nchopf/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <vector>

namespace nchopf {

namespace {

// Kronrod 15-point nodes (positive half) with Kronrod and embedded Gauss weights.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrod = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for nodes kNodes[1], kNodes[3], kNodes[5], kNodes[7].
constexpr std::array<double, 4> kGauss = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const double fc = f(c);
  double kron = kKronrod[7] * fc;
  double gauss = kGauss[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double x = h * kNodes[static_cast<std::size_t>(i)];
    const double s = f(c - x) + f(c + x);
    kron += kKronrod[static_cast<std::size_t>(i)] * s;
    if (i % 2 == 1) gauss += kGauss[static_cast<std::size_t>(i / 2)] * s;
  }
  return {a, b, kron * h, std::abs((kron - gauss) * h)};
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(target_tol >= 1e-12)) throw Error(ErrorKind::ConfigInvalid, "quadrature target_tol must be >= 1e-12");
  if (max_subdivisions < 1) throw Error(ErrorKind::ConfigInvalid, "quadrature needs at least one subdivision");
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureConfig& cfg) {
  cfg.validate();
  std::priority_queue<Segment> heap;
  Segment first = gk15(f, a, b);
  double total = first.value, err = first.error;
  heap.push(first);
  int used = 1;
  while (err > cfg.target_tol) {
    if (used >= cfg.max_subdivisions)
      throw Error(ErrorKind::QuadratureBudgetExceeded,
                  "error estimate " + std::to_string(err) + " above target after " + std::to_string(used) +
                      " subdivisions");
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Segment l = gk15(f, worst.a, mid), r = gk15(f, mid, worst.b);
    total += l.value + r.value - worst.value;
    err += l.error + r.error - worst.error;
    heap.push(l);
    heap.push(r);
    ++used;
  }
  // Re-sum to avoid drift from the running updates.
  double sum = 0.0, esum = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    esum += heap.top().error;
    heap.pop();
  }
  return {sum, esum, used};
}

QuadratureResult integrate_half_line(const std::function<double(double)>& f, const QuadratureConfig& cfg) {
  if (cfg.radial_transform == RadialTransform::rational) {
    auto g = [&f](double t) {
      if (t >= 1.0) return 0.0;
      const double w = 1.0 - t;
      return f(t / w) / (w * w);
    };
    return integrate(g, 0.0, 1.0, cfg);
  }
  constexpr double half_pi = std::numbers::pi / 2;
  auto g = [&f](double t) {
    if (t >= 1.0) return 0.0;
    const double c = std::cos(half_pi * t);
    return f(std::tan(half_pi * t)) * half_pi / (c * c);
  };
  return integrate(g, 0.0, 1.0, cfg);
}

QuadratureResult planar_radial_integral(const std::function<double(double)>& g, const QuadratureConfig& cfg) {
  return integrate_half_line(g, cfg);
}

QuadratureResult disk_radial_integral(const std::function<double(double)>& g, const QuadratureConfig& cfg) {
  return integrate(g, 0.0, 1.0, cfg);
}

}  // namespace nchopf
