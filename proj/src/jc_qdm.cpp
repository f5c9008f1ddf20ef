#include "nchopf/jc_qdm.hpp"

#include <cmath>

namespace nchopf {

namespace {

Matrix diag(const Eigen::VectorXd& v) { return v.cast<Complex>().asDiagonal(); }

Eigen::VectorXd inv_sqrt_positive(const Eigen::VectorXd& v) {
  Eigen::VectorXd out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(i) = 1.0 / std::sqrt(v(i));
  return out;
}

Eigen::VectorXd clamp_nonfinite(Eigen::VectorXd v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!std::isfinite(v(i))) v(i) = 0.0;
  return v;
}

bool all_finite(const Eigen::VectorXd& v) { return v.allFinite(); }

Eigen::VectorXd r_values(const DetunedModel& m, Index shift) {
  return r_op(m, shift).matrix().diagonal().real();
}

// 1/sqrt(2 R(K) (R(K) +- theta)); +inf where the second factor vanishes.
Eigen::VectorXd normalizer(const DetunedModel& m, Index shift, Chart chart) {
  const Eigen::VectorXd r = r_values(m, shift);
  const Eigen::VectorXd k = chart == Chart::I ? r_plus_theta(m, shift) : r_minus_theta(m, shift);
  return inv_sqrt_positive(2.0 * r.cwiseProduct(k));
}

struct ChartNormalizers {
  Eigen::VectorXd upper, lower;
};

ChartNormalizers chart_normalizers(const DetunedModel& m, Chart chart, Ordering ordering) {
  if (chart == Chart::II && ordering == Ordering::Right)
    return {normalizer(m, 0, chart), normalizer(m, 1, chart)};
  return {normalizer(m, 1, chart), normalizer(m, 0, chart)};
}

BlockOperator assemble_u(const DetunedModel& m, Chart chart, Ordering ordering,
                         const ChartNormalizers& nz) {
  const Index dim = m.dim();
  const Matrix a = annihilation_matrix(dim, dim);
  const Matrix ad = creation_matrix(dim, dim);
  const Matrix nu = diag(nz.upper), nl = diag(nz.lower);
  if (chart == Chart::I) {
    const Matrix k1 = diag(r_plus_theta(m, 1)), k0 = diag(r_plus_theta(m, 0));
    if (ordering == Ordering::Left) return block2(nu * k1, -(nu * a), nl * ad, nl * k0, kDefaultBand);
    return block2(k1 * nu, -(a * nl), ad * nu, k0 * nl, kDefaultBand);
  }
  const Matrix k1 = diag(r_minus_theta(m, 1)), k0 = diag(r_minus_theta(m, 0));
  if (ordering == Ordering::Left) return block2(nu * a, -(nu * k1), nl * k0, nl * ad, kDefaultBand);
  // Right ordering: [[a, -(R(N+1)-theta)], [R(N)-theta, a^dagger]] diag(g(N), g(N+1)).
  return block2(a * nu, -(k1 * nl), k0 * nu, ad * nl, kDefaultBand);
}

}  // namespace

DetunedModel::DetunedModel(double theta, FockSpace space) : theta_(theta), space_(space) {
  if (!std::isfinite(theta) || theta == 0.0)
    throw Error(ErrorKind::InvalidModel, "detuning theta must be finite and nonzero");
}

void JCParams::validate() const {
  if (!(omega > 0) || !(g > 0) || !std::isfinite(delta) || !std::isfinite(omega) || !std::isfinite(g))
    throw Error(ErrorKind::InvalidModel, "JC parameters need omega > 0, g > 0 and finite delta");
}

bool DiracScanReport::all_match() const {
  for (const auto& e : entries)
    if (!e.matches || !e.excited_clear) return false;
  return true;
}

FullJC full_jc_hamiltonian(const JCParams& p, FockSpace space) {
  p.validate();
  const Index dim = space.dim();
  const auto gen = su2_generators();
  const Matrix a = annihilation_matrix(dim, dim);
  const Matrix ad = creation_matrix(dim, dim);
  const Matrix n = number(space).matrix();
  const Matrix zero = Matrix::Zero(dim, dim);

  const BlockOperator number_term = block2(n, zero, zero, n);
  const BlockOperator s3 = embed(gen.g3, dim);
  const BlockOperator coupling = block2(zero, a, ad, zero);  // sigma_+ (x) a + sigma_- (x) a^dagger

  FullJC out;
  out.h = Complex(p.omega) * number_term + Complex(p.delta / 2) * s3 + Complex(p.g) * coupling;
  out.h1 = Complex(p.omega) * number_term + Complex(p.omega / 2) * s3;
  out.h2 = Complex((p.delta - p.omega) / 2) * s3 + Complex(p.g) * coupling;
  return out;
}

BlockOperator h_jc(const DetunedModel& m) {
  const Index dim = m.dim();
  const Matrix id = Matrix::Identity(dim, dim);
  return block2(m.theta() * id, annihilation_matrix(dim, dim), creation_matrix(dim, dim),
                -m.theta() * id, kDefaultBand);
}

FockOperator r_op(const DetunedModel& m, Index shift) {
  const double t2 = m.theta() * m.theta();
  return diag_fn(m.space(), [t2](double k) { return std::sqrt(k + t2); }, shift);
}

Eigen::VectorXd r_plus_theta(const DetunedModel& m, Index shift) {
  const Eigen::VectorXd r = r_values(m, shift);
  const double th = m.theta();
  Eigen::VectorXd out(r.size());
  for (Index i = 0; i < r.size(); ++i) {
    const double k = static_cast<double>(i + shift);
    out(i) = th >= 0 ? r(i) + th : k / (r(i) - th);
  }
  return out;
}

Eigen::VectorXd r_minus_theta(const DetunedModel& m, Index shift) {
  const Eigen::VectorXd r = r_values(m, shift);
  const double th = m.theta();
  Eigen::VectorXd out(r.size());
  for (Index i = 0; i < r.size(); ++i) {
    const double k = static_cast<double>(i + shift);
    out(i) = th <= 0 ? r(i) - th : k / (r(i) + th);
  }
  return out;
}

QdmFactors qdm_factorization(const DetunedModel& m) {
  const Index dim = m.dim();
  const Matrix a = annihilation_matrix(dim, dim);
  const Matrix ad = creation_matrix(dim, dim);
  const Matrix id = Matrix::Identity(dim, dim);
  const Matrix zero = Matrix::Zero(dim, dim);
  const FockSpace sp = m.space();
  const Matrix sqrt_n1 = diag_fn(sp, [](double k) { return std::sqrt(k); }, 1).matrix();
  const Matrix inv_sqrt_n1 = diag_fn(sp, [](double k) { return 1.0 / std::sqrt(k); }, 1).matrix();
  const double th = m.theta();
  return {block2(id, zero, zero, ad * inv_sqrt_n1, kDefaultBand),
          block2(th * id, sqrt_n1, sqrt_n1, -th * id),
          block2(id, zero, zero, inv_sqrt_n1 * a, kDefaultBand)};
}

BlockOperator u_chart(const DetunedModel& m, Chart chart) { return u_chart(m, chart, Ordering::Left); }

BlockOperator u_chart(const DetunedModel& m, Chart chart, Ordering ordering) {
  const ChartNormalizers nz = chart_normalizers(m, chart, ordering);
  if (!all_finite(nz.upper) || !all_finite(nz.lower))
    throw Error(ErrorKind::GroundSingularity,
                std::string("chart ") + to_string(chart) + " normalizer vanishes on the ground state at theta=" +
                    std::to_string(m.theta()));
  return assemble_u(m, chart, ordering, nz);
}

BlockOperator u_chart_clamped(const DetunedModel& m, Chart chart) {
  ChartNormalizers nz = chart_normalizers(m, chart, Ordering::Left);
  nz.upper = clamp_nonfinite(nz.upper);
  nz.lower = clamp_nonfinite(nz.lower);
  return assemble_u(m, chart, Ordering::Left, nz);
}

BlockOperator chart_eigenvalues(const DetunedModel& m, Chart chart) {
  const Matrix r1 = r_op(m, 1).matrix(), r0 = r_op(m, 0).matrix();
  if (chart == Chart::I) return BlockOperator::diagonal({r1, -r0});
  return BlockOperator::diagonal({r0, -r1});
}

std::vector<BasisState> chart_singular_set(const DetunedModel& m, Chart chart, Ordering ordering) {
  const ChartNormalizers nz = chart_normalizers(m, chart, ordering);
  std::vector<BasisState> out;
  for (Index i = 0; i < nz.upper.size(); ++i)
    if (!std::isfinite(nz.upper(i))) out.push_back({0, i});
  for (Index i = 0; i < nz.lower.size(); ++i)
    if (!std::isfinite(nz.lower(i))) out.push_back({1, i});
  return out;
}

BlockOperator transition_phi_jc(FockSpace space) {
  const Index dim = space.dim();
  const Matrix inv_sqrt_n1 = diag_fn(space, [](double k) { return 1.0 / std::sqrt(k); }, 1).matrix();
  const Matrix zero = Matrix::Zero(dim, dim);
  return block2(inv_sqrt_n1 * annihilation_matrix(dim, dim), zero, zero,
                creation_matrix(dim, dim) * inv_sqrt_n1, kDefaultBand);
}

BlockOperator transition_phi_jc_inverse_sqrt_n(FockSpace space) {
  const Index dim = space.dim();
  const Matrix inv_sqrt_n = diag_fn(space, [](double k) { return 1.0 / std::sqrt(k); }, 0).matrix();
  const Matrix zero = Matrix::Zero(dim, dim);
  return block2(annihilation_matrix(dim, dim) * inv_sqrt_n, zero, zero,
                inv_sqrt_n * creation_matrix(dim, dim), kDefaultBand);
}

BlockOperator projector_p_jc(const DetunedModel& m, Ordering ordering) {
  const Index dim = m.dim();
  const Eigen::VectorXd r1 = r_values(m, 1), r0 = r_values(m, 0);
  const Matrix d1 = diag(r1.cwiseInverse() / 2), d0 = diag(r0.cwiseInverse() / 2);
  const Matrix a = annihilation_matrix(dim, dim), ad = creation_matrix(dim, dim);
  const Matrix k1 = diag(r_plus_theta(m, 1)), k0 = diag(r_minus_theta(m, 0));
  if (ordering == Ordering::Left) return block2(d1 * k1, d1 * a, d0 * ad, d0 * k0, kDefaultBand);
  return block2(k1 * d1, a * d0, ad * d1, k0 * d0, kDefaultBand);
}

double spectral_decomposition(const DetunedModel& m, ValidityBand band) {
  const BlockOperator d = BlockOperator::diagonal({r_op(m, 1).matrix(), r_op(m, 0).matrix()});
  const BlockOperator p = projector_p_jc(m);
  const BlockOperator one = BlockOperator::identity(p.row_dims());
  const BlockOperator rebuilt = d * p - d * (one - p);
  return interior_residual(rebuilt, h_jc(m), Window{0, band.band});
}

BlockOperator evolution_closed(const DetunedModel& m, double gt) {
  const Index dim = m.dim();
  const double th = m.theta();
  const Eigen::VectorXd r1 = r_values(m, 1), r0 = r_values(m, 0);
  Vector c1(dim), c0(dim), s1(dim), s0(dim), d1(dim), d0(dim);
  const Complex i(0, 1);
  for (Index k = 0; k < dim; ++k) {
    const double sn1 = std::sin(gt * r1(k)) / r1(k), sn0 = std::sin(gt * r0(k)) / r0(k);
    d1(k) = std::cos(gt * r1(k)) - i * th * sn1;
    d0(k) = std::cos(gt * r0(k)) + i * th * sn0;
    s1(k) = -i * sn1;
    s0(k) = -i * sn0;
  }
  const Matrix a = annihilation_matrix(dim, dim), ad = creation_matrix(dim, dim);
  return block2(d1.asDiagonal(), s1.asDiagonal() * a, s0.asDiagonal() * ad, d0.asDiagonal(),
                kDefaultBand);
}

DiracScanReport dirac_string_scan(const std::vector<double>& thetas, FockSpace space) {
  DiracScanReport rep;
  rep.dim = space.dim();
  for (double th : thetas) {
    const DetunedModel m(th, space);
    for (Chart chart : {Chart::I, Chart::II}) {
      DiracScanEntry e;
      e.theta = th;
      e.chart = chart;
      e.singular = chart_singular_set(m, chart, Ordering::Left);
      e.singular_right_ordered = chart_singular_set(m, chart, Ordering::Right);
      const bool sign_hit = chart == Chart::I ? th < 0 : th > 0;
      if (sign_hit) e.expected.push_back({1, 0});
      for (const auto& s : e.singular)
        if (s.index != 0) e.excited_clear = false;
      for (const auto& s : e.singular_right_ordered)
        if (s.index != 0) e.excited_clear = false;
      e.matches = e.singular == e.expected;
      rep.entries.push_back(std::move(e));
    }
  }
  return rep;
}

}  // namespace nchopf
