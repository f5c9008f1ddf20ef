#pragma once

// Truncated Fock space operators and the block-operator algebra every other
// module is built on.
//
// Basis |0>,...,|M-1>. The creation operator annihilates |M-1>, so products of
// ladder operators are wrong in the last few indices; comparisons are done on
// an interior window (see interior_equal) instead of padding the space.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "nchopf/error.hpp"

namespace nchopf {

using Index = Eigen::Index;
using Complex = std::complex<double>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix = DenseMatrix<Complex>;
using Vector = DenseVector<Complex>;

inline constexpr Index kDefaultCutoff = 64;
inline constexpr Index kDefaultBand = 2;
inline constexpr double kDefaultTolerance = 1e-10;

class FockSpace {
 public:
  explicit FockSpace(Index dim) : dim_(dim) {
    if (dim < 2) throw Error(ErrorKind::InvalidArgument, "Fock cutoff must be at least 2");
  }
  Index dim() const noexcept { return dim_; }
  bool operator==(const FockSpace&) const = default;

 private:
  Index dim_;
};

/// Half-open window [first, last) of basis indices whose entries are trusted.
struct ValidRange {
  Index first = 0;
  Index last = 0;

  bool contains(Index i) const noexcept { return i >= first && i < last; }
  Index size() const noexcept { return std::max<Index>(0, last - first); }
  friend ValidRange intersect(ValidRange a, ValidRange b) noexcept {
    return {std::max(a.first, b.first), std::min(a.last, b.last)};
  }
  bool operator==(const ValidRange&) const = default;
};

/// Number of trailing basis indices per component excluded from comparisons.
struct ValidityBand {
  Index band = kDefaultBand;
};

/// A (possibly rectangular) operator between truncated Fock spaces.
/// Columns index the domain basis, rows the codomain basis.
template <typename Scalar>
class BasicFockOperator {
 public:
  using MatrixType = DenseMatrix<Scalar>;

  BasicFockOperator() = default;
  explicit BasicFockOperator(MatrixType m)
      : matrix_(std::move(m)), valid_{0, std::min(matrix_.rows(), matrix_.cols())} {}
  BasicFockOperator(MatrixType m, ValidRange valid, std::vector<Index> truncated = {})
      : matrix_(std::move(m)), valid_(valid), truncated_(std::move(truncated)) {}

  const MatrixType& matrix() const noexcept { return matrix_; }
  Index rows() const noexcept { return matrix_.rows(); }
  Index cols() const noexcept { return matrix_.cols(); }
  Index dim() const noexcept { return matrix_.cols(); }
  ValidRange valid() const noexcept { return valid_; }
  /// First basis index no longer trusted.
  Index valid_rows() const noexcept { return valid_.last; }
  /// Domain basis states whose exact image leaves the truncated space.
  const std::vector<Index>& truncated_columns() const noexcept { return truncated_; }
  bool is_truncated(Index column) const {
    return std::binary_search(truncated_.begin(), truncated_.end(), column);
  }

  struct Applied {
    DenseVector<Scalar> state;
    bool truncated = false;
  };

  Applied apply_to_basis(Index n) const {
    return {matrix_.col(n), is_truncated(n)};
  }

  BasicFockOperator adjoint() const {
    // The adjoint of a truncated map is exact on its own domain; the
    // corruption moves to the rows and is tracked through valid().
    return BasicFockOperator(matrix_.adjoint(), valid_);
  }

  friend BasicFockOperator operator*(const BasicFockOperator& lhs, const BasicFockOperator& rhs) {
    if (lhs.cols() != rhs.rows())
      throw Error(ErrorKind::ShapeMismatch, "FockOperator product with incompatible dimensions");
    std::vector<Index> truncated;
    for (Index c = 0; c < rhs.cols(); ++c) {
      bool leaks = rhs.is_truncated(c);
      for (Index r : lhs.truncated_) {
        if (leaks) break;
        if (r < rhs.rows() && rhs.matrix_(r, c) != Scalar(0)) leaks = true;
      }
      if (leaks) truncated.push_back(c);
    }
    return BasicFockOperator(lhs.matrix_ * rhs.matrix_, intersect(lhs.valid_, rhs.valid_),
                             std::move(truncated));
  }
  friend BasicFockOperator operator+(const BasicFockOperator& lhs, const BasicFockOperator& rhs) {
    check_same_shape(lhs, rhs);
    return BasicFockOperator(lhs.matrix_ + rhs.matrix_, intersect(lhs.valid_, rhs.valid_),
                             merge(lhs.truncated_, rhs.truncated_));
  }
  friend BasicFockOperator operator-(const BasicFockOperator& lhs, const BasicFockOperator& rhs) {
    check_same_shape(lhs, rhs);
    return BasicFockOperator(lhs.matrix_ - rhs.matrix_, intersect(lhs.valid_, rhs.valid_),
                             merge(lhs.truncated_, rhs.truncated_));
  }
  friend BasicFockOperator operator*(Scalar s, const BasicFockOperator& op) {
    return BasicFockOperator(s * op.matrix_, op.valid_, op.truncated_);
  }

 private:
  static void check_same_shape(const BasicFockOperator& a, const BasicFockOperator& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
      throw Error(ErrorKind::ShapeMismatch, "FockOperator sum with incompatible dimensions");
  }
  static std::vector<Index> merge(const std::vector<Index>& a, const std::vector<Index>& b) {
    std::vector<Index> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

  MatrixType matrix_;
  ValidRange valid_;
  std::vector<Index> truncated_;
};

using FockOperator = BasicFockOperator<Complex>;

// ---------------------------------------------------------------------------
// Ladder operators

/// a : F_cols -> F_rows with a|m> = sqrt(m)|m-1>.
template <typename Scalar = Complex>
DenseMatrix<Scalar> annihilation_matrix(Index rows, Index cols) {
  DenseMatrix<Scalar> a = DenseMatrix<Scalar>::Zero(rows, cols);
  for (Index m = 1; m < cols && m - 1 < rows; ++m) a(m - 1, m) = std::sqrt(static_cast<double>(m));
  return a;
}

/// a^dagger : F_cols -> F_rows with a^dagger|m> = sqrt(m+1)|m+1>.
template <typename Scalar = Complex>
DenseMatrix<Scalar> creation_matrix(Index rows, Index cols) {
  return annihilation_matrix<Scalar>(cols, rows).adjoint();
}

template <typename Scalar = Complex>
BasicFockOperator<Scalar> annihilation(FockSpace space) {
  return BasicFockOperator<Scalar>(annihilation_matrix<Scalar>(space.dim(), space.dim()),
                                   ValidRange{0, space.dim()});
}

template <typename Scalar = Complex>
BasicFockOperator<Scalar> creation(FockSpace space) {
  const Index m = space.dim();
  return BasicFockOperator<Scalar>(creation_matrix<Scalar>(m, m), ValidRange{0, m}, {m - 1});
}

/// Rectangular ladder operators between F_cols and F_rows, with the columns
/// whose exact image leaves F_rows recorded as truncated.
template <typename Scalar = Complex>
BasicFockOperator<Scalar> annihilation(Index rows, Index cols) {
  std::vector<Index> cut;
  for (Index m = 1; m < cols; ++m)
    if (m - 1 >= rows) cut.push_back(m);
  return BasicFockOperator<Scalar>(annihilation_matrix<Scalar>(rows, cols),
                                   ValidRange{0, std::min(rows, cols)}, std::move(cut));
}

template <typename Scalar = Complex>
BasicFockOperator<Scalar> creation(Index rows, Index cols) {
  std::vector<Index> cut;
  for (Index m = 0; m < cols; ++m)
    if (m + 1 >= rows) cut.push_back(m);
  return BasicFockOperator<Scalar>(creation_matrix<Scalar>(rows, cols),
                                   ValidRange{0, std::min(rows, cols)}, std::move(cut));
}

template <typename Scalar = Complex>
BasicFockOperator<Scalar> number(FockSpace space) {
  DenseMatrix<Scalar> n = DenseMatrix<Scalar>::Zero(space.dim(), space.dim());
  for (Index m = 0; m < space.dim(); ++m) n(m, m) = static_cast<double>(m);
  return BasicFockOperator<Scalar>(std::move(n));
}

template <typename Scalar = Complex>
BasicFockOperator<Scalar> identity(Index dim) {
  return BasicFockOperator<Scalar>(DenseMatrix<Scalar>::Identity(dim, dim));
}

/// Largest contiguous run of `true` (ties resolved towards low indices).
inline ValidRange longest_valid_run(const std::vector<bool>& ok) {
  ValidRange best{0, 0};
  Index start = 0;
  const Index n = static_cast<Index>(ok.size());
  for (Index i = 0; i <= n; ++i) {
    if (i == n || !ok[static_cast<std::size_t>(i)]) {
      if (i - start > best.size()) best = {start, i};
      start = i + 1;
    }
  }
  return best;
}

/// Real diagonal values f(m + shift) for m = 0..dim-1. Non-finite values
/// (negative radicands, division by zero) are clamped to 0 and the returned
/// validity window shrinks to the longest run of well-defined entries.
template <typename F>
std::pair<Eigen::VectorXd, ValidRange> diagonal_values(Index dim, F&& f, Index shift = 0) {
  Eigen::VectorXd values(dim);
  std::vector<bool> ok(static_cast<std::size_t>(dim));
  for (Index m = 0; m < dim; ++m) {
    const double v = f(static_cast<double>(m + shift));
    ok[static_cast<std::size_t>(m)] = std::isfinite(v);
    values(m) = std::isfinite(v) ? v : 0.0;
  }
  return {values, longest_valid_run(ok)};
}

template <typename Scalar = Complex, typename F>
BasicFockOperator<Scalar> diag_fn(Index dim, F&& f, Index shift = 0) {
  auto [values, valid] = diagonal_values(dim, std::forward<F>(f), shift);
  DenseMatrix<Scalar> m = values.template cast<Scalar>().asDiagonal();
  return BasicFockOperator<Scalar>(std::move(m), valid);
}

template <typename Scalar = Complex, typename F>
BasicFockOperator<Scalar> diag_fn(FockSpace space, F&& f, Index shift = 0) {
  return diag_fn<Scalar>(space.dim(), std::forward<F>(f), shift);
}

// ---------------------------------------------------------------------------
// Block operators

/// A grid of operator blocks stored as one dense matrix, component-major:
/// block (i, j) occupies rows offset(i)..offset(i)+row_dims[i].
template <typename Scalar>
class BasicBlockOperator {
 public:
  using MatrixType = DenseMatrix<Scalar>;

  BasicBlockOperator() = default;
  BasicBlockOperator(std::vector<Index> row_dims, std::vector<Index> col_dims, MatrixType dense,
                     Index band = 0)
      : row_dims_(std::move(row_dims)), col_dims_(std::move(col_dims)), data_(std::move(dense)),
        band_(band) {
    if (row_dims_.empty() || col_dims_.empty())
      throw Error(ErrorKind::ShapeMismatch, "block operator needs at least one block");
    for (Index d : row_dims_)
      if (d <= 0) throw Error(ErrorKind::ShapeMismatch, "component dimensions must be positive");
    for (Index d : col_dims_)
      if (d <= 0) throw Error(ErrorKind::ShapeMismatch, "component dimensions must be positive");
    if (data_.rows() != total(row_dims_) || data_.cols() != total(col_dims_))
      throw Error(ErrorKind::ShapeMismatch, "dense storage disagrees with component dimensions");
  }

  /// Assemble from a rectangular grid of blocks.
  static BasicBlockOperator from_grid(const std::vector<std::vector<MatrixType>>& grid,
                                      Index band = 0) {
    if (grid.empty() || grid.front().empty())
      throw Error(ErrorKind::ShapeMismatch, "empty block grid");
    std::vector<Index> rdims, cdims;
    for (const auto& row : grid) rdims.push_back(row.front().rows());
    for (const auto& b : grid.front()) cdims.push_back(b.cols());
    MatrixType dense = MatrixType::Zero(total(rdims), total(cdims));
    Index r0 = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (grid[i].size() != cdims.size())
        throw Error(ErrorKind::ShapeMismatch, "ragged block grid");
      Index c0 = 0;
      for (std::size_t j = 0; j < grid[i].size(); ++j) {
        const auto& b = grid[i][j];
        if (b.rows() != rdims[i] || b.cols() != cdims[j])
          throw Error(ErrorKind::ShapeMismatch, "block inconsistent with its row/column dims");
        dense.block(r0, c0, b.rows(), b.cols()) = b;
        c0 += cdims[j];
      }
      r0 += rdims[i];
    }
    return BasicBlockOperator(std::move(rdims), std::move(cdims), std::move(dense), band);
  }

  static BasicBlockOperator diagonal(const std::vector<MatrixType>& blocks, Index band = 0) {
    std::vector<std::vector<MatrixType>> grid(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i)
      for (std::size_t j = 0; j < blocks.size(); ++j)
        grid[i].push_back(i == j ? blocks[i]
                                 : MatrixType::Zero(blocks[i].rows(), blocks[j].cols()));
    return from_grid(grid, band);
  }

  static BasicBlockOperator identity(const std::vector<Index>& dims) {
    const Index n = total(dims);
    return BasicBlockOperator(dims, dims, MatrixType::Identity(n, n));
  }

  /// Column of blocks (col_dims = {domain}).
  static BasicBlockOperator column(const std::vector<MatrixType>& entries, Index band = 0) {
    std::vector<std::vector<MatrixType>> grid;
    for (const auto& e : entries) grid.push_back({e});
    return from_grid(grid, band);
  }

  const std::vector<Index>& row_dims() const noexcept { return row_dims_; }
  const std::vector<Index>& col_dims() const noexcept { return col_dims_; }
  Index row_blocks() const noexcept { return static_cast<Index>(row_dims_.size()); }
  Index col_blocks() const noexcept { return static_cast<Index>(col_dims_.size()); }
  const MatrixType& dense() const noexcept { return data_; }
  Index valid_band() const noexcept { return band_; }
  BasicBlockOperator with_band(Index band) const {
    return BasicBlockOperator(row_dims_, col_dims_, data_, band);
  }

  Index row_offset(Index i) const {
    return std::accumulate(row_dims_.begin(), row_dims_.begin() + i, Index{0});
  }
  Index col_offset(Index j) const {
    return std::accumulate(col_dims_.begin(), col_dims_.begin() + j, Index{0});
  }
  MatrixType block(Index i, Index j) const {
    return data_.block(row_offset(i), col_offset(j), row_dims_[static_cast<std::size_t>(i)],
                       col_dims_[static_cast<std::size_t>(j)]);
  }

  BasicBlockOperator adjoint() const {
    return BasicBlockOperator(col_dims_, row_dims_, data_.adjoint(), band_);
  }

  friend BasicBlockOperator operator*(const BasicBlockOperator& lhs, const BasicBlockOperator& rhs) {
    if (lhs.col_dims_ != rhs.row_dims_)
      throw Error(ErrorKind::ShapeMismatch, "block product with non-conformable components");
    return BasicBlockOperator(lhs.row_dims_, rhs.col_dims_, lhs.data_ * rhs.data_,
                              std::max(lhs.band_, rhs.band_));
  }
  friend BasicBlockOperator operator+(const BasicBlockOperator& lhs, const BasicBlockOperator& rhs) {
    check_same_shape(lhs, rhs);
    return BasicBlockOperator(lhs.row_dims_, lhs.col_dims_, lhs.data_ + rhs.data_,
                              std::max(lhs.band_, rhs.band_));
  }
  friend BasicBlockOperator operator-(const BasicBlockOperator& lhs, const BasicBlockOperator& rhs) {
    check_same_shape(lhs, rhs);
    return BasicBlockOperator(lhs.row_dims_, lhs.col_dims_, lhs.data_ - rhs.data_,
                              std::max(lhs.band_, rhs.band_));
  }
  friend BasicBlockOperator operator*(Scalar s, const BasicBlockOperator& op) {
    return BasicBlockOperator(op.row_dims_, op.col_dims_, s * op.data_, op.band_);
  }

  static Index total(const std::vector<Index>& dims) {
    return std::accumulate(dims.begin(), dims.end(), Index{0});
  }

 private:
  static void check_same_shape(const BasicBlockOperator& a, const BasicBlockOperator& b) {
    if (a.row_dims_ != b.row_dims_ || a.col_dims_ != b.col_dims_)
      throw Error(ErrorKind::ShapeMismatch, "block sum with different component dimensions");
  }

  std::vector<Index> row_dims_;
  std::vector<Index> col_dims_;
  MatrixType data_;
  Index band_ = 0;
};

using BlockOperator = BasicBlockOperator<Complex>;

template <typename Scalar>
BasicBlockOperator<Scalar> adjoint(const BasicBlockOperator<Scalar>& op) {
  return op.adjoint();
}

/// 2x2 operator matrix [[a, b], [c, d]] of equally shaped square blocks.
inline BlockOperator block2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d,
                            Index band = 0) {
  return BlockOperator::from_grid({{a, b}, {c, d}}, band);
}

/// Embed a constant 2x2 (or k x k) matrix as small (x) 1 over a dim-dimensional space.
inline BlockOperator embed(const Matrix& small, Index dim) {
  std::vector<std::vector<Matrix>> grid(static_cast<std::size_t>(small.rows()));
  for (Index i = 0; i < small.rows(); ++i)
    for (Index j = 0; j < small.cols(); ++j)
      grid[static_cast<std::size_t>(i)].push_back(small(i, j) * Matrix::Identity(dim, dim));
  return BlockOperator::from_grid(grid);
}

/// Signature operator diag(1, -1, 1, ...) blockwise over the given components.
inline BlockOperator signature(const std::vector<Index>& dims) {
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < dims.size(); ++k)
    blocks.push_back((k % 2 == 0 ? 1.0 : -1.0) * Matrix::Identity(dims[k], dims[k]));
  return BlockOperator::diagonal(blocks);
}

// ---------------------------------------------------------------------------
// Band-restricted comparison

struct Comparison {
  double residual = 0.0;
  bool pass = false;
};

/// Index window inside each component: [first, dim - band).
struct Window {
  Index first = 0;
  Index band = kDefaultBand;
};

/// Max |entry| of `op` over rows and columns whose in-component index lies in
/// the window. Throws BandTooLarge when the window is empty for a component.
template <typename Scalar>
double interior_max(const BasicBlockOperator<Scalar>& op, Window w) {
  auto check = [&](const std::vector<Index>& dims) {
    for (Index d : dims)
      if (w.band < 0 || w.first < 0 || w.first + w.band >= d)
        throw Error(ErrorKind::BandTooLarge, "validity window leaves a component empty");
  };
  check(op.row_dims());
  check(op.col_dims());
  double worst = 0.0;
  Index r0 = 0;
  for (Index rd : op.row_dims()) {
    Index c0 = 0;
    for (Index cd : op.col_dims()) {
      const auto blk = op.dense().block(r0 + w.first, c0 + w.first, rd - w.band - w.first,
                                        cd - w.band - w.first);
      if (blk.size() > 0) worst = std::max(worst, static_cast<double>(blk.cwiseAbs().maxCoeff()));
      c0 += cd;
    }
    r0 += rd;
  }
  return worst;
}

template <typename Scalar>
double interior_residual(const BasicBlockOperator<Scalar>& lhs, const BasicBlockOperator<Scalar>& rhs,
                         Window w) {
  if (lhs.row_dims() != rhs.row_dims() || lhs.col_dims() != rhs.col_dims())
    throw Error(ErrorKind::ShapeMismatch, "compared operators differ in shape");
  return interior_max(lhs - rhs, w);
}

template <typename Scalar>
Comparison interior_equal(const BasicBlockOperator<Scalar>& lhs, const BasicBlockOperator<Scalar>& rhs,
                          ValidityBand band, double tol, Index first = 0) {
  const double r = interior_residual(lhs, rhs, Window{first, band.band});
  return {r, r < tol};
}

/// Full (unrestricted) max-entry difference.
template <typename Scalar>
double max_abs_diff(const BasicBlockOperator<Scalar>& lhs, const BasicBlockOperator<Scalar>& rhs) {
  if (lhs.row_dims() != rhs.row_dims() || lhs.col_dims() != rhs.col_dims())
    throw Error(ErrorKind::ShapeMismatch, "compared operators differ in shape");
  return (lhs.dense() - rhs.dense()).cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------
// Oracle exponential

/// e^{-i t H}. Hermitian input goes through a self-adjoint eigensolver;
/// otherwise scaling and squaring (no diagonalizability assumed).
BlockOperator reference_exponential(const BlockOperator& h, double t, bool hermitian);

/// e^{A} for a general square matrix, scaling and squaring.
Matrix general_exponential(const Matrix& a);

/// max |H - H^dagger|.
double hermiticity_defect(const Matrix& h);

}  // namespace nchopf
