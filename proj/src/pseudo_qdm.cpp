#include "nchopf/pseudo_qdm.hpp"

#include <cmath>

namespace nchopf {

namespace {

Eigen::VectorXd s_values(const PseudoModel& m, Index shift, Index dim) {
  return s_op(m, shift, dim).matrix().diagonal().real();
}

// 1/sqrt(2 S (S + theta))
Eigen::VectorXd f_values(const PseudoModel& m, Index shift, Index dim) {
  const Eigen::VectorXd s = s_values(m, shift, dim);
  Eigen::VectorXd out(dim);
  for (Index i = 0; i < dim; ++i) out(i) = 1.0 / std::sqrt(2.0 * s(i) * (s(i) + m.theta()));
  return out;
}

Matrix diag(const Eigen::VectorXd& v) { return v.cast<Complex>().asDiagonal(); }

}  // namespace

Index admissible_level(double theta) {
  if (!std::isfinite(theta) || !(theta > 0))
    throw Error(ErrorKind::InvalidModel, "pseudo model needs theta > 0");
  const double t2 = theta * theta;
  if (t2 <= 1.0) throw Error(ErrorKind::NoSubspace, "theta^2 <= 1 leaves no admissible subspace");
  const Index n = static_cast<Index>(std::ceil(t2)) - 1;
  return n;
}

PseudoModel::PseudoModel(double theta) : theta_(theta), level_(admissible_level(theta)) {}

FockOperator s_op(const PseudoModel& m, Index shift, Index component_dim) {
  if (component_dim < 1 || component_dim > m.lower_dim())
    throw Error(ErrorKind::ShapeMismatch, "component dimension outside the admissible space");
  const double t2 = m.theta() * m.theta();
  return diag_fn(component_dim, [t2](double k) { return std::sqrt(t2 - k); }, shift);
}

PseudoLadder pseudo_ladder(const PseudoModel& m) {
  return {annihilation(m.upper_dim(), m.lower_dim()), creation(m.lower_dim(), m.upper_dim())};
}

BlockOperator pseudo_signature(const PseudoModel& m) { return signature(m.dims()); }

BlockOperator h_pjc(const PseudoModel& m) {
  const Index n = m.upper_dim(), n1 = m.lower_dim();
  const auto lad = pseudo_ladder(m);
  const double th = m.theta();
  return block2(th * Matrix::Identity(n, n), lad.a.matrix(), -lad.ad.matrix(),
                -th * Matrix::Identity(n1, n1));
}

BlockOperator v_operator(const PseudoModel& m, Ordering ordering) {
  const Index n = m.upper_dim(), n1 = m.lower_dim();
  const double th = m.theta();
  const auto lad = pseudo_ladder(m);
  const Matrix f1 = diag(f_values(m, 1, n)), f0 = diag(f_values(m, 0, n1));
  const Matrix k1 = diag(s_values(m, 1, n).array() + th), k0 = diag(s_values(m, 0, n1).array() + th);
  const Matrix& a = lad.a.matrix();
  const Matrix& ad = lad.ad.matrix();
  if (ordering == Ordering::Left) return block2(f1 * k1, -(f1 * a), -(f0 * ad), f0 * k0);
  return block2(k1 * f1, -(a * f0), -(ad * f1), k0 * f0);
}

BlockOperator v_inverse(const PseudoModel& m) {
  const BlockOperator j = pseudo_signature(m);
  return j * v_operator(m).adjoint() * j;
}

BlockOperator pseudo_eigenvalues(const PseudoModel& m) {
  return BlockOperator::diagonal(
      {s_op(m, 1, m.upper_dim()).matrix(), -s_op(m, 0, m.lower_dim()).matrix()});
}

double pseudo_factorization(const PseudoModel& m) {
  const BlockOperator rebuilt = v_operator(m) * pseudo_eigenvalues(m) * v_inverse(m);
  return max_abs_diff(rebuilt, h_pjc(m));
}

BlockOperator projector_q_pjc(const PseudoModel& m, Ordering ordering) {
  const Index n = m.upper_dim(), n1 = m.lower_dim();
  const double th = m.theta();
  const auto lad = pseudo_ladder(m);
  const Eigen::VectorXd s1 = s_values(m, 1, n), s0 = s_values(m, 0, n1);
  const Matrix d1 = diag(s1.cwiseInverse() / 2), d0 = diag(s0.cwiseInverse() / 2);
  const Matrix k1 = diag(s1.array() + th), k0 = diag(s0.array() - th);
  const Matrix& a = lad.a.matrix();
  const Matrix& ad = lad.ad.matrix();
  if (ordering == Ordering::Left) return block2(d1 * k1, d1 * a, -(d0 * ad), d0 * k0);
  return block2(k1 * d1, a * d0, -(ad * d1), k0 * d0);
}

BlockOperator evolution_closed_pseudo(const PseudoModel& m, double gt) {
  const Index n = m.upper_dim(), n1 = m.lower_dim();
  const double th = m.theta();
  const auto lad = pseudo_ladder(m);
  const Eigen::VectorXd s1 = s_values(m, 1, n), s0 = s_values(m, 0, n1);
  const Complex i(0, 1);
  Vector d1(n), o1(n), d0(n1), o0(n1);
  for (Index k = 0; k < n; ++k) {
    const double sn = std::sin(gt * s1(k)) / s1(k);
    d1(k) = std::cos(gt * s1(k)) - i * th * sn;
    o1(k) = -i * sn;
  }
  for (Index k = 0; k < n1; ++k) {
    const double sn = std::sin(gt * s0(k)) / s0(k);
    d0(k) = std::cos(gt * s0(k)) + i * th * sn;
    o0(k) = i * sn;
  }
  return block2(d1.asDiagonal(), o1.asDiagonal() * lad.a.matrix(), o0.asDiagonal() * lad.ad.matrix(),
                d0.asDiagonal());
}

BlockOperator pseudo_full_hamiltonian(const JCParams& p, FockSpace space) {
  p.validate();
  const Index dim = space.dim();
  const Matrix a = annihilation_matrix(dim, dim);
  const Matrix ad = creation_matrix(dim, dim);
  const Matrix n = number(space).matrix();
  const Matrix zero = Matrix::Zero(dim, dim);
  const BlockOperator number_term = block2(n, zero, zero, n);
  const BlockOperator t3 = embed(su11_generators().g3, dim);
  const BlockOperator coupling = block2(zero, a, -ad, zero);  // tau_+ (x) a + tau_- (x) a^dagger
  return Complex(p.omega) * number_term + Complex(p.delta / 2) * t3 + Complex(p.g) * coupling;
}

}  // namespace nchopf
