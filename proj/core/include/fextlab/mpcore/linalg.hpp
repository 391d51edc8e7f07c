#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fextlab/mpcore/mpcomplex.hpp"
#include "fextlab/mpcore/mpreal.hpp"

namespace fextlab::mp {

using MpVector = std::vector<MpReal>;
using CVector = std::vector<MpComplex>;

/// Dense row-major matrix of MpReal.
class MpMatrix {
 public:
  MpMatrix() = default;
  MpMatrix(std::size_t rows, std::size_t cols, int bits);

  static MpMatrix identity(std::size_t n, int bits);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  int precision() const noexcept { return bits_; }

  MpReal& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const MpReal& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<MpReal> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const MpReal> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  MpMatrix transposed() const;
  MpReal max_abs() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  int bits_ = kMinPrecision;
  std::vector<MpReal> data_;
};

MpMatrix operator*(const MpMatrix& a, const MpMatrix& b);
MpMatrix operator-(const MpMatrix& a, const MpMatrix& b);
MpVector operator*(const MpMatrix& a, const MpVector& x);
CVector operator*(const MpMatrix& a, const CVector& x);

/// Real symmetric Toeplitz matrix; entry(k, j) = first_row[|k - j|].
class HermitianToeplitz {
 public:
  HermitianToeplitz() = default;
  explicit HermitianToeplitz(MpVector first_row);

  std::size_t size() const noexcept { return first_row_.size(); }
  int precision() const noexcept;
  const MpVector& first_row() const noexcept { return first_row_; }
  const MpReal& entry(std::size_t k, std::size_t j) const { return first_row_[k > j ? k - j : j - k]; }

  MpMatrix dense() const;
  MpReal max_abs() const;
  /// Leading principal n x n block (again Toeplitz).
  HermitianToeplitz leading(std::size_t n) const;

 private:
  MpVector first_row_;
};

/// Lower-triangular L with A = L L^T. Throws NotPositiveDefinite.
MpMatrix cholesky(const MpMatrix& a);
MpMatrix cholesky(const HermitianToeplitz& a);

/// Solve L y = b.
MpVector forward_substitute(const MpMatrix& lower, const MpVector& b);
CVector forward_substitute(const MpMatrix& lower, const CVector& b);
/// Solve L^T x = y.
MpVector back_substitute_transposed(const MpMatrix& lower, const MpVector& y);
CVector back_substitute_transposed(const MpMatrix& lower, const CVector& y);
/// Solve (L L^T) x = b given the Cholesky factor.
CVector cholesky_solve(const MpMatrix& lower, const CVector& b);
MpVector cholesky_solve(const MpMatrix& lower, const MpVector& b);
/// Inverse of a lower-triangular matrix.
MpMatrix invert_lower(const MpMatrix& lower);

/// Gaussian elimination with partial pivoting. Throws NotPositiveDefinite
/// (as "singular") when a pivot vanishes.
MpVector gauss_solve(MpMatrix a, MpVector b);

struct EigenDecomposition {
  MpVector eigenvalues;  ///< descending
  MpMatrix eigenvectors; ///< column j pairs with eigenvalues[j]
  int sweeps = 0;
};

struct JacobiOptions {
  int max_sweeps = 60;
};

/// Cyclic two-sided Jacobi rotations on a symmetric matrix. Throws NoConvergence.
EigenDecomposition jacobi_eigen(const MpMatrix& a, int precision_bits, const JacobiOptions& options = {});
EigenDecomposition jacobi_eigen(const HermitianToeplitz& a, int precision_bits, const JacobiOptions& options = {});

/// max_ij |V diag(lambda) V^T - A|_ij
MpReal reconstruction_residual(const EigenDecomposition& eig, const MpMatrix& a);
/// max_ij |V^T V - I|_ij
MpReal orthogonality_residual(const EigenDecomposition& eig);

}  // namespace fextlab::mp
