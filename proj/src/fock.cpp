#include "nchopf/fock.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace nchopf {

double hermiticity_defect(const Matrix& h) {
  if (h.size() == 0) return 0.0;
  return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

Matrix general_exponential(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::ShapeMismatch, "exponential of a non-square matrix");
  // Extended precision: the oracle is compared against closed forms whose
  // non-normal pseudo-Hermitian inputs amplify Pade roundoff.
  using Wide = Eigen::Matrix<std::complex<long double>, Eigen::Dynamic, Eigen::Dynamic>;
  const Wide w = a.cast<std::complex<long double>>();
  return Wide(w.exp()).cast<Complex>();
}

BlockOperator reference_exponential(const BlockOperator& h, double t, bool hermitian) {
  const Matrix& m = h.dense();
  if (m.rows() != m.cols() || h.row_dims() != h.col_dims())
    throw Error(ErrorKind::ShapeMismatch, "reference_exponential needs a square block operator");

  Matrix e;
  if (hermitian) {
    if (hermiticity_defect(m) > 1e-10)
      throw Error(ErrorKind::NotHermitian, "operator asserted Hermitian is not");
    // Symmetrize so roundoff asymmetry does not leak into the eigenbasis.
    const Matrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
    const Vector phases =
        (es.eigenvalues().cast<Complex>() * Complex(0.0, -t)).array().exp().matrix();
    e = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
  } else {
    e = general_exponential(Complex(0.0, -t) * m);
  }
  return BlockOperator(h.row_dims(), h.col_dims(), std::move(e), h.valid_band());
}

}  // namespace nchopf
