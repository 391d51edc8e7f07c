#include "fextlab/mpcore/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "fextlab/errors.hpp"

namespace fextlab::mp {

MpMatrix::MpMatrix(std::size_t rows, std::size_t cols, int bits)
    : rows_(rows), cols_(cols), bits_(checked_precision(bits)), data_(rows * cols, MpReal(0L, bits)) {}

MpMatrix MpMatrix::identity(std::size_t n, int bits) {
  MpMatrix m(n, n, bits);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = MpReal(1L, bits);
  }
  return m;
}

MpMatrix MpMatrix::transposed() const {
  MpMatrix t(cols_, rows_, bits_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      t(j, i) = (*this)(i, j);
    }
  }
  return t;
}

MpReal MpMatrix::max_abs() const {
  MpReal m(0L, bits_);
  for (const auto& v : data_) {
    if (abs(v) > m) {
      m = abs(v);
    }
  }
  return m;
}

MpMatrix operator*(const MpMatrix& a, const MpMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix product: dimension mismatch");
  }
  MpMatrix c(a.rows(), b.cols(), std::max(a.precision(), b.precision()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c(i, j).add_product(a(i, k), b(k, j));
      }
    }
  }
  return c;
}

MpMatrix operator-(const MpMatrix& a, const MpMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix difference: dimension mismatch");
  }
  MpMatrix c(a.rows(), a.cols(), std::max(a.precision(), b.precision()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      c(i, j) = a(i, j) - b(i, j);
    }
  }
  return c;
}

MpVector operator*(const MpMatrix& a, const MpVector& x) {
  if (a.cols() != x.size()) {
    throw std::invalid_argument("matrix-vector product: dimension mismatch");
  }
  MpVector y(a.rows(), MpReal(0L, a.precision()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      y[i].add_product(a(i, j), x[j]);
    }
  }
  return y;
}

CVector operator*(const MpMatrix& a, const CVector& x) {
  if (a.cols() != x.size()) {
    throw std::invalid_argument("matrix-vector product: dimension mismatch");
  }
  CVector y(a.rows(), MpComplex::zero(a.precision()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      y[i].add_product(x[j], a(i, j));
    }
  }
  return y;
}

HermitianToeplitz::HermitianToeplitz(MpVector first_row) : first_row_(std::move(first_row)) {
  if (first_row_.empty()) {
    throw std::invalid_argument("Toeplitz matrix needs a nonempty first row");
  }
}

int HermitianToeplitz::precision() const noexcept {
  int bits = kMinPrecision;
  for (const auto& v : first_row_) {
    bits = std::max(bits, v.precision());
  }
  return bits;
}

MpMatrix HermitianToeplitz::dense() const {
  const std::size_t n = size();
  MpMatrix m(n, n, precision());
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      m(k, j) = entry(k, j);
    }
  }
  return m;
}

MpReal HermitianToeplitz::max_abs() const {
  MpReal m(0L, precision());
  for (const auto& v : first_row_) {
    m = max(m, abs(v));
  }
  return m;
}

HermitianToeplitz HermitianToeplitz::leading(std::size_t n) const {
  if (n == 0 || n > size()) {
    throw std::invalid_argument("leading block size out of range");
  }
  return HermitianToeplitz(MpVector(first_row_.begin(), first_row_.begin() + static_cast<std::ptrdiff_t>(n)));
}

MpMatrix cholesky(const MpMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) {
    throw std::invalid_argument("cholesky: matrix must be square");
  }
  const int bits = a.precision();
  MpMatrix l(n, n, bits);
  for (std::size_t j = 0; j < n; ++j) {
    MpReal diag = a(j, j);
    for (std::size_t k = 0; k < j; ++k) {
      diag.sub_product(l(j, k), l(j, k));
    }
    if (diag.sign() <= 0) {
      throw NotPositiveDefinite(j, "pivot " + diag.to_string(6) + " at " + std::to_string(bits) + " bits");
    }
    l(j, j) = sqrt(diag);
    for (std::size_t i = j + 1; i < n; ++i) {
      MpReal s = a(i, j);
      const auto li = l.row(i);
      const auto lj = l.row(j);
      for (std::size_t k = 0; k < j; ++k) {
        s.sub_product(li[k], lj[k]);
      }
      l(i, j) = s / l(j, j);
    }
  }
  return l;
}

MpMatrix cholesky(const HermitianToeplitz& a) { return cholesky(a.dense()); }

namespace {

template <typename Vec>
Vec forward_impl(const MpMatrix& l, const Vec& b) {
  const std::size_t n = l.rows();
  if (b.size() != n) {
    throw std::invalid_argument("forward substitution: dimension mismatch");
  }
  Vec y(b);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < i; ++k) {
      y[i] -= y[k] * l(i, k);
    }
    y[i] /= l(i, i);
  }
  return y;
}

template <typename Vec>
Vec backward_t_impl(const MpMatrix& l, const Vec& y) {
  const std::size_t n = l.rows();
  if (y.size() != n) {
    throw std::invalid_argument("back substitution: dimension mismatch");
  }
  Vec x(y);
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t k = ii + 1; k < n; ++k) {
      x[ii] -= x[k] * l(k, ii);
    }
    x[ii] /= l(ii, ii);
  }
  return x;
}

}  // namespace

MpVector forward_substitute(const MpMatrix& lower, const MpVector& b) { return forward_impl(lower, b); }
CVector forward_substitute(const MpMatrix& lower, const CVector& b) { return forward_impl(lower, b); }
MpVector back_substitute_transposed(const MpMatrix& lower, const MpVector& y) { return backward_t_impl(lower, y); }
CVector back_substitute_transposed(const MpMatrix& lower, const CVector& y) { return backward_t_impl(lower, y); }

CVector cholesky_solve(const MpMatrix& lower, const CVector& b) {
  return back_substitute_transposed(lower, forward_substitute(lower, b));
}

MpVector cholesky_solve(const MpMatrix& lower, const MpVector& b) {
  return back_substitute_transposed(lower, forward_substitute(lower, b));
}

MpMatrix invert_lower(const MpMatrix& lower) {
  const std::size_t n = lower.rows();
  MpMatrix inv(n, n, lower.precision());
  for (std::size_t j = 0; j < n; ++j) {
    inv(j, j) = MpReal(1L, lower.precision()) / lower(j, j);
    for (std::size_t i = j + 1; i < n; ++i) {
      MpReal s(0L, lower.precision());
      for (std::size_t k = j; k < i; ++k) {
        s.add_product(lower(i, k), inv(k, j));
      }
      inv(i, j) = -s / lower(i, i);
    }
  }
  return inv;
}

MpVector gauss_solve(MpMatrix a, MpVector b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) {
    throw std::invalid_argument("gauss_solve: dimension mismatch");
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (abs(a(r, col)) > abs(a(piv, col))) {
        piv = r;
      }
    }
    if (a(piv, col).is_zero()) {
      throw NotPositiveDefinite(col, "singular matrix in Gaussian elimination");
    }
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(col, j), a(piv, j));
      }
      std::swap(b[col], b[piv]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) {
        continue;
      }
      const MpReal factor = a(r, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) {
        a(r, j).sub_product(factor, a(col, j));
      }
      b[r].sub_product(factor, b[col]);
    }
  }
  MpVector x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    MpReal s = b[ii];
    for (std::size_t j = ii + 1; j < n; ++j) {
      s.sub_product(a(ii, j), x[j]);
    }
    x[ii] = s / a(ii, ii);
  }
  return x;
}

EigenDecomposition jacobi_eigen(const MpMatrix& input, int precision_bits, const JacobiOptions& options) {
  const std::size_t n = input.rows();
  if (input.cols() != n) {
    throw std::invalid_argument("jacobi_eigen: matrix must be square");
  }
  const int bits = checked_precision(precision_bits);
  MpMatrix a(n, n, bits);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = input(i, j).rounded(bits);
    }
  }
  MpMatrix v = MpMatrix::identity(n, bits);

  MpReal frob(0L, bits);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      frob.add_product(a(i, j), a(i, j));
    }
  }
  // Stop when the off-diagonal mass is below ~2^{-0.95 bits} of the matrix scale.
  const MpReal stop = sqrt(frob) * MpReal::pow2(-static_cast<long>(0.95 * bits), bits);
  const MpReal stop_sq = stop * stop;

  int sweep = 0;
  for (;; ++sweep) {
    MpReal off(0L, bits);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        off.add_product(a(p, q), a(p, q));
      }
    }
    if (off <= stop_sq) {
      break;
    }
    if (sweep >= options.max_sweeps) {
      throw NoConvergence("Jacobi eigensolver did not converge in " + std::to_string(options.max_sweeps) +
                          " sweeps at " + std::to_string(bits) + " bits");
    }
    // Elements below this size are not worth a rotation in this sweep.
    const MpReal skip = stop / static_cast<double>(std::max<std::size_t>(n, 1));
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (abs(a(p, q)) <= skip) {
          continue;
        }
        const MpReal theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        MpReal t = 1.0 / (abs(theta) + sqrt(theta * theta + 1.0));
        if (theta.sign() < 0) {
          t = -t;
        }
        const MpReal c = 1.0 / sqrt(t * t + 1.0);
        const MpReal s = t * c;
        const MpReal tau = s / (1.0 + c);
        const MpReal apq = a(p, q);
        a(p, p).sub_product(t, apq);
        a(q, q).add_product(t, apq);
        a(p, q) = MpReal(0L, bits);
        a(q, p) = MpReal(0L, bits);
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) {
            continue;
          }
          const MpReal arp = a(r, p);
          const MpReal arq = a(r, q);
          MpReal new_rp = arp;
          new_rp.sub_product(s, arq + tau * arp);
          MpReal new_rq = arq;
          new_rq.add_product(s, arp - tau * arq);
          a(r, p) = new_rp;
          a(p, r) = std::move(new_rp);
          a(r, q) = new_rq;
          a(q, r) = std::move(new_rq);
        }
        for (std::size_t r = 0; r < n; ++r) {
          const MpReal vrp = v(r, p);
          const MpReal vrq = v(r, q);
          v(r, p).sub_product(s, vrq + tau * vrp);
          v(r, q).add_product(s, vrp - tau * vrq);
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

  EigenDecomposition out;
  out.sweeps = sweep;
  out.eigenvalues.reserve(n);
  out.eigenvectors = MpMatrix(n, n, bits);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues.push_back(a(order[k], order[k]));
    for (std::size_t r = 0; r < n; ++r) {
      out.eigenvectors(r, k) = v(r, order[k]);
    }
  }
  return out;
}

EigenDecomposition jacobi_eigen(const HermitianToeplitz& a, int precision_bits, const JacobiOptions& options) {
  return jacobi_eigen(a.dense(), precision_bits, options);
}

MpReal reconstruction_residual(const EigenDecomposition& eig, const MpMatrix& a) {
  const std::size_t n = a.rows();
  const int bits = eig.eigenvectors.precision();
  MpReal worst(0L, bits);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      MpReal s(0L, bits);
      for (std::size_t k = 0; k < n; ++k) {
        s.add_product(eig.eigenvectors(i, k) * eig.eigenvalues[k], eig.eigenvectors(j, k));
      }
      worst = max(worst, abs(s - a(i, j)));
    }
  }
  return worst;
}

MpReal orthogonality_residual(const EigenDecomposition& eig) {
  const auto& v = eig.eigenvectors;
  const std::size_t n = v.rows();
  MpReal worst(0L, v.precision());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      MpReal s(i == j ? -1L : 0L, v.precision());
      for (std::size_t k = 0; k < n; ++k) {
        s.add_product(v(k, i), v(k, j));
      }
      worst = max(worst, abs(s));
    }
  }
  return worst;
}

}  // namespace fextlab::mp
