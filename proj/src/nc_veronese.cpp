#include "nchopf/nc_veronese.hpp"

#include <algorithm>
#include <cmath>

namespace nchopf {

namespace {

void require_positive_theta(const DetunedModel& m) {
  if (!(m.theta() > 0)) throw Error(ErrorKind::InvalidModel, "Veronese operators need theta > 0");
}

void require_degree(Index n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "degree must be at least 1");
}

// Row factor sqrt((m-j)/m) g(m-j) for rows m of a creation-type operator,
// with the m = 0 convention (1 for j = 0, 0 otherwise) and clamping below j.
template <typename G>
Eigen::VectorXd shifted_row_factor(Index rows, Index j, G&& g) {
  Eigen::VectorXd d = Eigen::VectorXd::Zero(rows);
  for (Index m = 0; m < rows; ++m) {
    if (m < j) continue;
    const double ratio = m == 0 ? 1.0 : std::sqrt(static_cast<double>(m - j) / static_cast<double>(m));
    const double v = ratio * g(static_cast<double>(m - j));
    d(m) = std::isfinite(v) ? v : 0.0;
  }
  return d;
}

Matrix diag(const Eigen::VectorXd& v) { return v.cast<Complex>().asDiagonal(); }

double r_of(double theta, double k) { return std::sqrt(k + theta * theta); }
double s_of(double theta, double k) { return std::sqrt(theta * theta - k); }

}  // namespace

Matrix OperatorColumn::gram() const {
  Matrix g = Matrix::Zero(entries.front().cols(), entries.front().cols());
  for (const auto& e : entries) g += e.adjoint() * e;
  return g;
}

Matrix OperatorColumn::pseudo_gram() const {
  Matrix g = Matrix::Zero(entries.front().cols(), entries.front().cols());
  double sign = 1.0;
  for (const auto& e : entries) {
    g += sign * (e.adjoint() * e);
    sign = -sign;
  }
  return g;
}

double binomial(Index n, Index k) {
  if (k < 0 || k > n) return 0.0;
  double c = 1.0;
  for (Index i = 1; i <= k; ++i) c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
  return c;
}

double pochhammer_ratio(double a, Index k) {
  double r = 1.0;
  for (Index i = 0; i < k; ++i) r *= (a + static_cast<double>(i)) / static_cast<double>(i + 1);
  return r;
}

FockOperator x_op(const DetunedModel& m, Index j) {
  require_positive_theta(m);
  const double th = m.theta();
  return diag_fn(
      m.space(),
      [th](double k) {
        const double r = r_of(th, k);
        return (r + th) / std::sqrt(2.0 * r * (r + th));
      },
      1 - j);
}

FockOperator y_op(const DetunedModel& m, Index j) {
  require_positive_theta(m);
  const double th = m.theta();
  const Index dim = m.dim();
  const Eigen::VectorXd d = shifted_row_factor(dim, j, [th](double k) {
    const double r = r_of(th, k);
    return 1.0 / std::sqrt(2.0 * r * (r + th));
  });
  return FockOperator(diag(d) * creation_matrix(dim, dim), ValidRange{j, dim}, {dim - 1});
}

FockOperator z_op(const DetunedModel& m, Index j) {
  require_positive_theta(m);
  const double th = m.theta();
  const Index dim = m.dim();
  const Eigen::VectorXd d = shifted_row_factor(dim, j, [th](double k) { return 1.0 / (r_of(th, k) + th); });
  return FockOperator(diag(d) * creation_matrix(dim, dim), ValidRange{j, dim}, {dim - 1});
}

FockOperator z0_right_form(const DetunedModel& m) {
  require_positive_theta(m);
  const double th = m.theta();
  const FockOperator inv = diag_fn(m.space(), [th](double k) { return 1.0 / (r_of(th, k) + th); }, 1);
  return creation(m.space()) * inv;
}

FockOperator diagonal_inverse(const FockOperator& d) {
  Eigen::VectorXcd v = d.matrix().diagonal();
  for (Index i = 0; i < v.size(); ++i) v(i) = v(i) == Complex(0) ? Complex(0) : Complex(1) / v(i);
  return FockOperator(v.asDiagonal(), d.valid());
}

FockOperator diagonal_power(const FockOperator& d, double p) {
  Eigen::VectorXcd v = d.matrix().diagonal();
  for (Index i = 0; i < v.size(); ++i) {
    const double x = v(i).real();
    v(i) = x > 0 ? std::pow(x, p) : 0.0;
  }
  return FockOperator(v.asDiagonal(), d.valid());
}

OperatorColumn sphere_column(const DetunedModel& m) { return veronese_column(m, 1); }

OperatorColumn veronese_column(const DetunedModel& m, Index n) {
  require_degree(n);
  const FockOperator x0 = x_op(m, 0);
  const Index dim = m.dim();
  OperatorColumn col;
  col.valid_first = n;
  col.band = std::max<Index>(kDefaultBand, n);
  Matrix chain = Matrix::Identity(dim, dim);  // Y_{-(j-1)} ... Y_0
  for (Index j = 0; j <= n; ++j) {
    if (j > 0) chain = y_op(m, j - 1).matrix() * chain;
    col.entries.push_back(std::sqrt(binomial(n, j)) * chain *
                          diagonal_power(x0, static_cast<double>(n - j)).matrix());
  }
  return col;
}

BlockOperator veronese_projector(const DetunedModel& m, Index n) {
  const BlockOperator c = veronese_column(m, n).to_block();
  return c * c.adjoint();
}

OperatorColumn local_column(const DetunedModel& m, Index n) {
  require_degree(n);
  const Index dim = m.dim();
  OperatorColumn col;
  col.valid_first = n;
  col.band = std::max<Index>(kDefaultBand, n);
  Matrix chain = Matrix::Identity(dim, dim);
  for (Index j = 1; j <= n; ++j) {
    chain = z_op(m, j - 1).matrix() * chain;
    col.entries.push_back(std::sqrt(binomial(n, j)) * chain);
  }
  return col;
}

OperatorColumn veronese_from_local(const DetunedModel& m, Index n) {
  const OperatorColumn z = local_column(m, n);
  const Index dim = m.dim();
  const Matrix z0 = z_op(m, 0).matrix();
  // 1 + Z_0^dagger Z_0 is diagonal in N.
  const FockOperator g(Matrix((Matrix::Identity(dim, dim) + z0.adjoint() * z0).diagonal().asDiagonal()));
  const Matrix scale = diagonal_power(g, -0.5 * static_cast<double>(n)).matrix();
  OperatorColumn col;
  col.valid_first = n;
  col.band = std::max<Index>(kDefaultBand, n);
  col.entries.push_back(scale);
  for (const auto& e : z.entries) col.entries.push_back(e * scale);
  return col;
}

BlockOperator oike_projector(const Matrix& z, Index band) {
  if (z.rows() != z.cols()) throw Error(ErrorKind::ShapeMismatch, "Oike projector needs a square Z");
  if (!z.allFinite()) throw Error(ErrorKind::SingularGram, "local coordinate has non-finite entries");
  const Index dim = z.rows();
  const Matrix g = Matrix::Identity(dim, dim) + z.adjoint() * z;
  Matrix ginv;
  const Matrix off = g - Matrix(g.diagonal().asDiagonal());
  if (off.cwiseAbs().maxCoeff() == 0.0) {
    Eigen::VectorXcd d = g.diagonal();
    for (Index i = 0; i < dim; ++i) {
      if (!(d(i).real() > 0)) throw Error(ErrorKind::SingularGram, "Gram block not positive");
      d(i) = 1.0 / d(i).real();
    }
    ginv = d.asDiagonal();
  } else {
    Eigen::LLT<Matrix> llt(g);
    if (llt.info() != Eigen::Success) throw Error(ErrorKind::SingularGram, "Gram block not positive definite");
    ginv = llt.solve(Matrix::Identity(dim, dim));
  }
  return block2(ginv, ginv * z.adjoint(), z * ginv, z * ginv * z.adjoint(), band);
}

Complex z_symbol(const BerryPoint& p) {
  const double n = p.x * p.x + p.y * p.y;
  return Complex(p.x, p.y) / (std::sqrt(n + p.z * p.z) + p.z);
}

Eigen::VectorXcd classical_veronese(const Eigen::Vector2cd& v, Index n) {
  require_degree(n);
  if (std::abs(v.squaredNorm() - 1.0) > 1e-10)
    throw Error(ErrorKind::InvalidArgument, "classical Veronese needs a unit vector");
  Eigen::VectorXcd out(n + 1);
  for (Index j = 0; j <= n; ++j)
    out(j) = std::sqrt(binomial(n, j)) * std::pow(v(0), static_cast<int>(n - j)) *
             std::pow(v(1), static_cast<int>(j));
  return out;
}

Eigen::VectorXcd classical_pseudo_veronese(const Eigen::Vector2cd& v, Index n) {
  require_degree(n);
  const double pn = std::norm(v(0)) - std::norm(v(1));
  if (std::abs(pn - 1.0) > 1e-10)
    throw Error(ErrorKind::NotPseudoNormalized, "pseudo Veronese needs |alpha|^2 - |beta|^2 = 1");
  if (!(std::abs(v(1) / v(0)) < 1.0))
    throw Error(ErrorKind::OutsideDomain, "|beta/alpha| must be below 1");
  Eigen::VectorXcd out(n + 1);
  for (Index j = 0; j <= n; ++j)
    out(j) = std::sqrt(binomial(n, j)) * std::pow(v(0), static_cast<int>(n - j)) *
             std::pow(-v(1), static_cast<int>(j));
  return out;
}

Complex pseudo_local_coordinate(const Eigen::Vector2cd& v) {
  if (v(0) == Complex(0)) throw Error(ErrorKind::OutsideDomain, "alpha must be nonzero");
  return -v(1) / v(0);
}

FockOperator gamma_op(const PseudoModel& m, Index j) {
  const double th = m.theta();
  return diag_fn(
      m.upper_dim() + j,
      [th](double k) {
        const double s = s_of(th, k);
        return (s + th) / std::sqrt(2.0 * s * (s + th));
      },
      1 - j);
}

FockOperator omega_op(const PseudoModel& m, Index j) {
  const double th = m.theta();
  const Index cols = m.upper_dim() + j, rows = cols + 1;
  const Eigen::VectorXd d = shifted_row_factor(rows, j, [th](double k) {
    const double s = s_of(th, k);
    return -1.0 / std::sqrt(2.0 * s * (s + th));
  });
  return FockOperator(diag(d) * creation_matrix(rows, cols), ValidRange{j, cols});
}

FockOperator w_op(const PseudoModel& m) {
  const double th = m.theta();
  const Index cols = m.upper_dim(), rows = cols + 1;
  const Eigen::VectorXd d = shifted_row_factor(rows, 0, [th](double k) { return -1.0 / (s_of(th, k) + th); });
  return FockOperator(diag(d) * creation_matrix(rows, cols), ValidRange{0, cols});
}

OperatorColumn pseudo_veronese_column(const PseudoModel& m, Index n) {
  require_degree(n);
  const FockOperator g0 = gamma_op(m, 0);
  const Index dim = m.upper_dim();
  OperatorColumn col;
  Matrix chain = Matrix::Identity(dim, dim);  // Omega_{-(j-1)} ... Omega_0
  for (Index j = 0; j <= n; ++j) {
    if (j > 0) chain = omega_op(m, j - 1).matrix() * chain;
    col.entries.push_back(std::sqrt(binomial(n, j)) * chain *
                          diagonal_power(g0, static_cast<double>(n - j)).matrix());
  }
  return col;
}

BlockOperator column_signature(const OperatorColumn& c) {
  std::vector<Index> dims;
  for (const auto& e : c.entries) dims.push_back(e.rows());
  return signature(dims);
}

BlockOperator pseudo_veronese_projector(const PseudoModel& m, Index n) {
  const OperatorColumn col = pseudo_veronese_column(m, n);
  const BlockOperator b = col.to_block();
  return b * b.adjoint() * column_signature(col);
}

OperatorColumn bhat_column(const PseudoModel& m, Index two_j, Index depth) {
  if (two_j < 1) throw Error(ErrorKind::InvalidArgument, "spin label 2j must be positive");
  if (depth < 0) throw Error(ErrorKind::InvalidArgument, "depth must be non-negative");
  const FockOperator g0 = gamma_op(m, 0);
  const Index dim = m.upper_dim();
  OperatorColumn col;
  Matrix chain = Matrix::Identity(dim, dim);
  for (Index k = 0; k <= depth; ++k) {
    if (k > 0) chain = omega_op(m, k - 1).matrix() * chain;
    col.entries.push_back(std::sqrt(pochhammer_ratio(static_cast<double>(two_j), k)) * chain *
                          diagonal_power(g0, -static_cast<double>(two_j + k)).matrix());
  }
  return col;
}

}  // namespace nchopf
