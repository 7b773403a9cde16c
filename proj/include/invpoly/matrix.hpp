#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "invpoly/arith.hpp"
#include "invpoly/intpoly.hpp"

namespace invpoly {

/// Row-major dense matrix with value semantics.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{}) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error(ErrorKind::Syntax, "ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<long>(i * cols_), data_.begin() + static_cast<long>((i + 1) * cols_));
  }

  [[nodiscard]] Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend auto operator<=>(const Matrix& a, const Matrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return a.data_ <=> b.data_;
  }

  [[nodiscard]] std::string str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
      os << "]";
    }
    os << "]";
    return os.str();
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using RatMatrix = Matrix<Rational>;

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r(a.rows(), b.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      std::int64_t v = a(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        r(i, j) = detail::checked_add(r(i, j), detail::checked_mul(v, b(k, j)));
    }
  return r;
}

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

/// Fraction-free Bareiss elimination.
inline std::int64_t determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error(ErrorKind::NotInvertible, "determinant of a non-square matrix");
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  int sign = 1;
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        (void)detail::narrow(a[i][j]);
      }
    prev = a[k][k];
  }
  return detail::narrow(sign * a[n - 1][n - 1]);
}

/// Inverse over the rationals; throws NotInvertible for singular input.
inline RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) throw Error(ErrorKind::NotInvertible, "singular matrix");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    Rational piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

/// Diagonal of the Smith normal form (non-zero invariant factors, ascending
/// divisibility chain).
inline std::vector<std::int64_t> smith_invariants(IntMatrix a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::int64_t> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Pivot: smallest non-zero absolute value in the remaining block.
    std::size_t pi = rows, pj = cols;
    std::int64_t best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        std::int64_t v = a(i, j) < 0 ? -a(i, j) : a(i, j);
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a(t, j), a(pi, j));
    for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, t), a(i, pj));
    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      std::int64_t q = floor_div(a(i, t), a(t, t));
      for (std::size_t j = t; j < cols; ++j) a(i, j) = detail::checked_sub(a(i, j), detail::checked_mul(q, a(t, j)));
      if (a(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      std::int64_t q = floor_div(a(t, j), a(t, t));
      for (std::size_t i = t; i < rows; ++i) a(i, j) = detail::checked_sub(a(i, j), detail::checked_mul(q, a(i, t)));
      if (a(t, j) != 0) clean = false;
    }
    if (!clean) continue;
    // Enforce divisibility of the rest of the block by the pivot.
    bool divides_all = true;
    for (std::size_t i = t + 1; i < rows && divides_all; ++i)
      for (std::size_t j = t + 1; j < cols; ++j)
        if (a(i, j) % a(t, t) != 0) {
          for (std::size_t k = t; k < cols; ++k) a(t, k) = detail::checked_add(a(t, k), a(i, k));
          divides_all = false;
          break;
        }
    if (!divides_all) continue;
    diag.push_back(a(t, t) < 0 ? -a(t, t) : a(t, t));
    ++t;
  }
  return diag;
}

/// Characteristic polynomial det(tI - M) via the division-free Berkowitz algorithm.
inline IntPoly characteristic_polynomial(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error(ErrorKind::NotInvertible, "characteristic polynomial of a non-square matrix");
  using detail::checked_add;
  using detail::checked_mul;
  // v holds the coefficients (highest degree first) of the char poly of the
  // leading r x r block.
  std::vector<std::int64_t> v{1};
  for (std::size_t r = 0; r < n; ++r) {
    // Toeplitz column for step r: [1, -a_rr, -R S^0 C, -R S^1 C, ...]
    std::vector<std::int64_t> col(r + 2, 0);
    col[0] = 1;
    col[1] = -m(r, r);
    std::vector<std::int64_t> c(r);
    for (std::size_t i = 0; i < r; ++i) c[i] = m(i, r);
    for (std::size_t k = 2; k < r + 2; ++k) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < r; ++j) s = checked_add(s, checked_mul(m(r, j), c[j]));
      col[k] = -s;
      std::vector<std::int64_t> next(r, 0);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) next[i] = checked_add(next[i], checked_mul(m(i, j), c[j]));
      c = std::move(next);
    }
    std::vector<std::int64_t> w(r + 2, 0);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= i && j < v.size(); ++j) w[i] = checked_add(w[i], checked_mul(col[i - j], v[j]));
    v = std::move(w);
  }
  std::reverse(v.begin(), v.end());
  return IntPoly(std::move(v));
}

}  // namespace invpoly
