#include "nchopf/representations.hpp"

#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

#include "nchopf/nc_veronese.hpp"

namespace nchopf {

namespace {

using Poly = std::vector<Complex>;

Poly poly_mul(const Poly& p, const Poly& q) {
  Poly r(p.size() + q.size() - 1, Complex(0));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

// (c0 + c1 z)^e
Poly linear_power(Complex c0, Complex c1, Index e) {
  Poly r{Complex(1)};
  for (Index i = 0; i < e; ++i) r = poly_mul(r, {c0, c1});
  return r;
}

void require_su2(const Matrix2& a) {
  if (!(su2_defect(a) <= 1e-10)) throw Error(ErrorKind::NotInGroup, "matrix is not in SU(2)");
}

void require_su11(const Matrix2& b) {
  if (!(su11_defect(b) <= 1e-10)) throw Error(ErrorKind::NotInGroup, "matrix is not in SU(1,1)");
  const Complex alpha = b(0, 0), beta = -b(1, 0);
  if (!(std::abs(beta / alpha) < 1.0)) throw Error(ErrorKind::NotInGroup, "|beta/alpha| must be below 1");
}

Matrix to_matrix(const Matrix2& a) { return Matrix(a); }

Matrix scalar(Complex c) { return Matrix::Constant(1, 1, c); }

}  // namespace

Matrix spin_rep_su2(Index two_j, const Matrix2& a) {
  if (two_j < 1) throw Error(ErrorKind::InvalidArgument, "2j must be positive");
  require_su2(a);
  const Complex alpha = a(0, 0), beta = a(1, 0);
  const Index dim = two_j + 1;
  Matrix out(dim, dim);
  for (Index k = 0; k < dim; ++k) {
    const Poly p = poly_mul(linear_power(alpha, beta, two_j - k),
                            linear_power(-std::conj(beta), std::conj(alpha), k));
    const double wk = std::sqrt(binomial(two_j, k));
    for (Index m = 0; m < dim; ++m)
      out(m, k) = wk * p[static_cast<std::size_t>(m)] / std::sqrt(binomial(two_j, m));
  }
  return out;
}

Matrix spin_rep_closed(Index two_j, const Matrix2& a) {
  require_su2(a);
  const Complex al = a(0, 0), be = a(1, 0), ac = std::conj(al), bc = std::conj(be);
  const double aa = std::norm(al), bb = std::norm(be);
  const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0);
  Matrix m;
  switch (two_j) {
    case 1:
      return to_matrix(a);
    case 2:
      m.resize(3, 3);
      m << al * al, -r2 * al * bc, bc * bc,  //
          r2 * al * be, aa - bb, -r2 * ac * bc,  //
          be * be, r2 * ac * be, ac * ac;
      return m;
    case 3:
      m.resize(4, 4);
      m << al * al * al, -r3 * al * al * bc, r3 * al * bc * bc, -bc * bc * bc,  //
          r3 * al * al * be, (aa - 2 * bb) * al, -(2 * aa - bb) * bc, r3 * ac * bc * bc,  //
          r3 * al * be * be, (2 * aa - bb) * be, (aa - 2 * bb) * ac, -r3 * ac * ac * bc,  //
          be * be * be, r3 * ac * be * be, r3 * ac * ac * be, ac * ac * ac;
      return m;
    default:
      throw Error(ErrorKind::InvalidArgument, "closed forms exist only for 2j = 1, 2, 3");
  }
}

BlockOperator phi_one_from(const Matrix& x0, const Matrix& x1, const Matrix& x2, const Matrix& y0,
                           const Matrix& y1) {
  const double r2 = std::sqrt(2.0);
  return BlockOperator::from_grid({
      {x0 * x0, -r2 * x0 * y0.adjoint(), y0.adjoint() * y1.adjoint()},
      {r2 * y0 * x0, x1 * x1 - y1.adjoint() * y1, -r2 * x1 * y1.adjoint()},
      {y1 * y0, r2 * y1 * x1, x2 * x2},
  });
}

BlockOperator phi_three_half_from(const Matrix& x0, const Matrix& x1, const Matrix& x2, const Matrix& x3,
                                  const Matrix& y0, const Matrix& y1, const Matrix& y2) {
  const double r3 = std::sqrt(3.0);
  const Matrix y0d = y0.adjoint(), y1d = y1.adjoint(), y2d = y2.adjoint();
  return BlockOperator::from_grid({
      {x0 * x0 * x0, -r3 * x0 * x0 * y0d, r3 * x0 * y0d * y1d, -(y0d * y1d * y2d)},
      {r3 * y0 * x0 * x0, x1 * (x1 * x1 - 2.0 * y1d * y1), -((2.0 * x1 * x1 - y1d * y1) * y1d),
       r3 * x1 * y1d * y2d},
      {r3 * y1 * y0 * x0, y1 * (2.0 * x1 * x1 - y1d * y1), x2 * (x2 * x2 - 2.0 * y2d * y2),
       -r3 * x2 * x2 * y2d},
      {y2 * y1 * y0, r3 * y2 * y1 * x1, r3 * y2 * x2 * x2, x3 * x3 * x3},
  });
}

BlockOperator nc_phi_one(const DetunedModel& m) {
  return phi_one_from(x_op(m, 0).matrix(), x_op(m, 1).matrix(), x_op(m, 2).matrix(), y_op(m, 0).matrix(),
                      y_op(m, 1).matrix())
      .with_band(kDefaultBand);
}

BlockOperator nc_phi_three_half(const DetunedModel& m) {
  return phi_three_half_from(x_op(m, 0).matrix(), x_op(m, 1).matrix(), x_op(m, 2).matrix(),
                             x_op(m, 3).matrix(), y_op(m, 0).matrix(), y_op(m, 1).matrix(),
                             y_op(m, 2).matrix())
      .with_band(3);  // three raising operators per entry
}

Vector su11_column(Index two_j, const Matrix2& b, Index k, Index cutoff) {
  if (two_j < 2) throw Error(ErrorKind::InvalidArgument, "SU(1,1) representation needs j >= 1");
  if (cutoff < 1 || k < 0) throw Error(ErrorKind::InvalidArgument, "cutoff must be positive");
  require_su11(b);
  const Complex alpha = b(0, 0), beta = -b(1, 0);
  const double p = static_cast<double>(two_j + k);
  // Negative-binomial series of (alpha + beta z)^{-p}.
  Vector series(cutoff);
  series(0) = std::pow(alpha, -p);
  const Complex ratio = -beta / alpha;
  for (Index n = 1; n < cutoff; ++n)
    series(n) = series(n - 1) * ratio * ((p + static_cast<double>(n - 1)) / static_cast<double>(n));
  const Poly q = linear_power(std::conj(beta), std::conj(alpha), k);
  const double wk = std::sqrt(pochhammer_ratio(static_cast<double>(two_j), k));
  Vector col = Vector::Zero(cutoff);
  for (Index mrow = 0; mrow < cutoff; ++mrow) {
    Complex acc(0);
    for (Index l = 0; l <= std::min(k, mrow); ++l) acc += q[static_cast<std::size_t>(l)] * series(mrow - l);
    col(mrow) = wk * acc / std::sqrt(pochhammer_ratio(static_cast<double>(two_j), mrow));
  }
  return col;
}

Matrix su11_rep(Index two_j, const Matrix2& b, Index cutoff) {
  Matrix out(cutoff, cutoff);
  for (Index k = 0; k < cutoff; ++k) out.col(k) = su11_column(two_j, b, k, cutoff);
  return out;
}

CutoffChoice su11_auto_cutoff(Index two_j, const Matrix2& b, double tol) {
  CutoffChoice last;
  for (Index cutoff = 64; cutoff <= 4096; cutoff *= 2) {
    const Vector c0 = su11_column(two_j, b, 0, cutoff);
    last = {cutoff, std::abs(c0.squaredNorm() - 1.0)};
    if (last.defect < tol) return last;
  }
  throw Error(ErrorKind::CutoffBudgetExceeded,
              "column-0 norm defect " + std::to_string(last.defect) + " at cutoff 4096");
}

Eigen::MatrixXd clebsch_T(int fold) {
  const double s2 = 1.0 / std::sqrt(2.0), s3 = 1.0 / std::sqrt(3.0), s6 = 1.0 / std::sqrt(6.0);
  const double s23 = std::sqrt(2.0) / std::sqrt(3.0);
  if (fold == 2) {
    Eigen::MatrixXd t(4, 4);
    t << 0, 1, 0, 0,  //
        s2, 0, s2, 0,  //
        -s2, 0, s2, 0,  //
        0, 0, 0, 1;
    return t;
  }
  if (fold == 3) {
    Eigen::MatrixXd t(8, 8);
    t << 0, 0, 0, 0, 1, 0, 0, 0,        //
        s2, 0, s6, 0, 0, s3, 0, 0,      //
        -s2, 0, s6, 0, 0, s3, 0, 0,     //
        0, 0, 0, s23, 0, 0, s3, 0,      //
        0, 0, -s23, 0, 0, s3, 0, 0,     //
        0, s2, 0, -s6, 0, 0, s3, 0,     //
        0, -s2, 0, -s6, 0, 0, s3, 0,    //
        0, 0, 0, 0, 0, 0, 0, 1;
    return t;
  }
  throw Error(ErrorKind::InvalidArgument, "Clebsch-Gordan matrix available for folds 2 and 3");
}

double tensor_decomposition_su2(const Matrix2& a, int fold) {
  require_su2(a);
  const Matrix t = clebsch_T(fold).cast<Complex>();
  const Matrix am = to_matrix(a);
  Matrix prod, expected;
  if (fold == 2) {
    prod = Eigen::kroneckerProduct(am, am).eval();
    expected = Matrix::Zero(4, 4);
    expected(0, 0) = 1.0;
    expected.bottomRightCorner(3, 3) = spin_rep_su2(2, a);
  } else {
    prod = Eigen::kroneckerProduct(Matrix(Eigen::kroneckerProduct(am, am)), am).eval();
    expected = Matrix::Zero(8, 8);
    expected.block(0, 0, 2, 2) = am;
    expected.block(2, 2, 2, 2) = am;
    expected.block(4, 4, 4, 4) = spin_rep_su2(3, a);
  }
  return (t.adjoint() * prod * t - expected).cwiseAbs().maxCoeff();
}

namespace {

// T^dagger (V (x) V) T - diag(1, Phi_1) for a 2x2 operator matrix V with
// entries acting on a common space.
BlockOperator obstruction_operator(const Matrix& v00, const Matrix& v01, const Matrix& v10,
                                   const Matrix& v11, const BlockOperator& phi1) {
  const std::array<std::array<const Matrix*, 2>, 2> v{{{&v00, &v01}, {&v10, &v11}}};
  const Index dim = v00.rows();
  std::vector<std::vector<Matrix>> grid(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          grid[static_cast<std::size_t>(2 * i + j)].push_back((*v[i][k]) * (*v[j][l]));
  const BlockOperator vv = BlockOperator::from_grid(grid);

  const Eigen::MatrixXd t = clebsch_T(2);
  const BlockOperator tt(vv.row_dims(), vv.col_dims(),
                         Eigen::kroneckerProduct(t.cast<Complex>().eval(), Matrix::Identity(dim, dim)).eval());
  const BlockOperator lhs = tt.adjoint() * vv * tt;

  std::vector<std::vector<Matrix>> rhs(4);
  for (Index r = 0; r < 4; ++r)
    for (Index c = 0; c < 4; ++c) {
      Matrix blk = Matrix::Zero(dim, dim);
      if (r == 0 && c == 0) blk = Matrix::Identity(dim, dim);
      if (r > 0 && c > 0) blk = phi1.block(r - 1, c - 1);
      rhs[static_cast<std::size_t>(r)].push_back(blk);
    }
  return lhs - BlockOperator::from_grid(rhs);
}

}  // namespace

double nc_tensor_obstruction(const DetunedModel& m, Window window) {
  const Matrix x0 = x_op(m, 0).matrix(), x1 = x_op(m, 1).matrix();
  const Matrix y0 = y_op(m, 0).matrix();
  const BlockOperator diff = obstruction_operator(x0, -y0.adjoint(), y0, x1, nc_phi_one(m));
  return interior_max(diff, window);
}

double nc_tensor_obstruction_scalar(const BerryPoint& p) {
  const Matrix2 a = berry_diagonalizer(p, Chart::I);
  // Classical symbols: X_{-j} -> a(0,0), Y_{-j} -> a(1,0) for every j.
  const Matrix x = scalar(a(0, 0)), y = scalar(a(1, 0));
  const BlockOperator phi1 = phi_one_from(x, x, x, y, y);
  const BlockOperator diff = obstruction_operator(scalar(a(0, 0)), scalar(a(0, 1)), scalar(a(1, 0)),
                                                  scalar(a(1, 1)), phi1);
  return diff.dense().cwiseAbs().maxCoeff();
}

MomentValue compact_moment(Index two_j, Index k, Index l, const QuadratureConfig& cfg) {
  if (two_j < 1) throw Error(ErrorKind::InvalidArgument, "2j must be positive");
  if (k < 0 || l < 0) throw Error(ErrorKind::InvalidArgument, "moment indices must be non-negative");
  if (k > two_j || l > two_j) throw Error(ErrorKind::DegreeTooHigh, "compact moments need k, l <= 2j");
  if (k != l) return {Complex(0), 0.0};  // angular integral vanishes
  const double p = static_cast<double>(two_j + 2);
  const auto radial = [k, p](double u) { return std::pow(u, static_cast<double>(k)) / std::pow(1.0 + u, p); };
  const double v = static_cast<double>(two_j + 1) * planar_radial_integral(radial, cfg).value;
  return {Complex(v), 1.0 / binomial(two_j, k)};
}

MomentValue noncompact_moment(Index two_j, Index k, Index l, const QuadratureConfig& cfg) {
  if (two_j < 2) throw Error(ErrorKind::InvalidArgument, "non-compact moments need j >= 1");
  if (k < 0 || l < 0) throw Error(ErrorKind::InvalidArgument, "moment indices must be non-negative");
  const double exact = 1.0 / pochhammer_ratio(static_cast<double>(two_j), k);  // k!/(2j)_k
  if (k != l) return {Complex(0), 0.0};
  const double e = static_cast<double>(two_j - 2);
  const auto radial = [k, e](double u) { return std::pow(1.0 - u, e) * std::pow(u, static_cast<double>(k)); };
  const double v = static_cast<double>(two_j - 1) * disk_radial_integral(radial, cfg).value;
  return {Complex(v), exact};
}

InnerProduct inner_product(const std::vector<Complex>& f, const std::vector<Complex>& g, Index two_j,
                           InnerProductKind kind, const QuadratureConfig& cfg) {
  const Index nf = static_cast<Index>(f.size()), ng = static_cast<Index>(g.size());
  if (kind == InnerProductKind::compact && (nf > two_j + 1 || ng > two_j + 1))
    throw Error(ErrorKind::DegreeTooHigh, "compact inner product needs degree <= 2j");
  InnerProduct out{Complex(0), Complex(0)};
  for (Index k = 0; k < std::min(nf, ng); ++k) {
    const double w = kind == InnerProductKind::compact
                         ? 1.0 / binomial(two_j, k)
                         : 1.0 / pochhammer_ratio(static_cast<double>(two_j), k);
    out.closed += w * f[static_cast<std::size_t>(k)] * std::conj(g[static_cast<std::size_t>(k)]);
  }
  for (Index k = 0; k < nf; ++k)
    for (Index l = 0; l < ng; ++l) {
      const Complex c = f[static_cast<std::size_t>(k)] * std::conj(g[static_cast<std::size_t>(l)]);
      if (c == Complex(0)) continue;
      const MomentValue mv = kind == InnerProductKind::compact ? compact_moment(two_j, k, l, cfg)
                                                               : noncompact_moment(two_j, k, l, cfg);
      out.quadrature += c * mv.value;
    }
  return out;
}

}  // namespace nchopf
