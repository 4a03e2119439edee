#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "glnz/errors.hpp"
#include "glnz/rational.hpp"

namespace glnz {

// Dense row-major matrix over an exact scalar type.  Zero-sized shapes are
// allowed so that edge cases (empty equation systems, rank-0 lattices) flow
// through the same code paths.
template <typename T>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Mat from_rows(const std::vector<std::vector<T>>& rows,
                       std::size_t cols_hint = 0) {
    std::size_t cols = rows.empty() ? cols_hint : rows.front().size();
    Mat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols)
        throw DimensionMismatch("from_rows: ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }

  void set_row(std::size_t i, const std::vector<T>& v) {
    if (v.size() != cols_) throw DimensionMismatch("set_row: size mismatch");
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c)
      std::swap((*this)(i, c), (*this)(j, c));
  }

  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
  }

  // row[dst] += coeff * row[src]
  void row_axpy(std::size_t dst, std::size_t src, const T& coeff) {
    for (std::size_t c = 0; c < cols_; ++c)
      (*this)(dst, c) += coeff * (*this)(src, c);
  }

  Mat transposed() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Mat top_rows(std::size_t k) const {
    Mat t(k, cols_);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(i, j) = (*this)(i, j);
    return t;
  }

  std::vector<T> mul_vec(const std::vector<T>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("mul_vec: size mismatch");
    std::vector<T> r(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> a_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

template <typename T>
Mat<T> operator*(const Mat<T>& a, const Mat<T>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("operator*: shape");
  Mat<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == T(0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

inline RatMat to_rat(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

inline IntMat to_int_exact(const RatMat& m) {
  IntMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integer(m(i, j))) throw Error("to_int_exact: non-integral entry");
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

// Exact determinant by fraction-free (Bareiss) elimination.
inline Int det(IntMat a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("det: non-square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// Gauss-Jordan inverse over the rationals.
inline RatMat inverse(RatMat a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("inverse: non-square");
  const std::size_t n = a.rows();
  RatMat inv = RatMat::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw SingularMatrix("inverse: singular matrix");
    a.swap_rows(c, p);
    inv.swap_rows(c, p);
    Rat piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rat f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

// Inverse of a matrix with determinant +-1; the result is again integral.
inline IntMat unimodular_inverse(const IntMat& a) {
  return to_int_exact(inverse(to_rat(a)));
}

// One rational solution of A z = b, or nullopt when the system is
// inconsistent.  Free variables are set to zero; pivots are chosen on the
// first nonzero entry so the result is deterministic.
inline std::optional<RatVec> solve_particular(RatMat a, RatVec b) {
  if (a.rows() != b.size()) throw DimensionMismatch("solve_particular: shape");
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a(p, c) == 0) ++p;
    if (p == m) continue;
    a.swap_rows(r, p);
    std::swap(b[r], b[p]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rat f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(r, j);
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (b[i] != 0) return std::nullopt;
  RatVec z(n, Rat(0));
  for (std::size_t i = 0; i < r; ++i) z[pivot_col[i]] = b[i] / a(i, pivot_col[i]);
  return z;
}

}  // namespace glnz
