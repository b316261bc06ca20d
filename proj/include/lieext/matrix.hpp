#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <sstream>
#include <vector>

#include "lieext/error.hpp"
#include "lieext/rational.hpp"

namespace lieext {

/// Dense row-major matrix over a ring-like scalar.
template <typename T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  [[nodiscard]] std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  [[nodiscard]] bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& v) { return v == T(0); });
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    detail::require(a.cols_ == b.rows_, "matrix product: inner dimensions differ");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }

  friend std::vector<T> operator*(const Matrix& a, std::span<const T> v) {
    detail::require(a.cols_ == v.size(), "matrix-vector product: size mismatch");
    std::vector<T> out(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

private:
  void check_same_shape(const Matrix& o) const {
    detail::require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;

template <typename T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b - b * a;
}

template <typename T>
std::string to_string(const Matrix<T>& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << "]\n";
  }
  return os.str();
}

/// Row echelon form of a rational matrix computed by fraction-free (Bareiss)
/// elimination after clearing each row's denominators. Entries are integers.
struct Echelon {
  std::vector<std::vector<mpz_class>> rows;  // first `pivots.size()` rows are nonzero
  std::vector<std::size_t> pivots;           // pivot column of each nonzero row, increasing
  std::size_t cols = 0;
};

inline Echelon fraction_free_echelon(const RationalMatrix& m) {
  Echelon e;
  e.cols = m.cols();
  e.rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class scale = 1;
    for (const auto& v : m.row(i)) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.raw().get_den_mpz_t());
    std::vector<mpz_class> r(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpq_class& v = m(i, j).raw();
      r[j] = v.get_num() * (scale / v.get_den());
    }
    e.rows.push_back(std::move(r));
  }

  auto& a = e.rows;
  const std::size_t nrows = a.size();
  mpz_class previous = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < e.cols && rank < nrows; ++col) {
    std::size_t pivot_row = rank;
    while (pivot_row < nrows && a[pivot_row][col] == 0) ++pivot_row;
    if (pivot_row == nrows) continue;
    std::swap(a[rank], a[pivot_row]);
    const mpz_class pivot = a[rank][col];
    for (std::size_t i = rank + 1; i < nrows; ++i) {
      const mpz_class factor = a[i][col];
      for (std::size_t j = col; j < e.cols; ++j) {
        mpz_class value = pivot * a[i][j] - factor * a[rank][j];
        detail::ensure(mpz_divisible_p(value.get_mpz_t(), previous.get_mpz_t()) != 0,
                       "Bareiss elimination: inexact division");
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
        a[i][j] = std::move(value);
      }
      // Columns left of `col` are already zero in rows below the pivot.
      for (std::size_t j = 0; j < col; ++j) a[i][j] = 0;
    }
    previous = pivot;
    e.pivots.push_back(col);
    ++rank;
  }
  return e;
}

inline std::size_t rank(const RationalMatrix& m) { return fraction_free_echelon(m).pivots.size(); }

/// Basis of {x : m x = 0}. Each vector is scaled to a primitive integer
/// vector whose free coordinate is positive.
inline std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
  const Echelon e = fraction_free_echelon(m);
  std::vector<bool> is_pivot(e.cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < e.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> x(e.cols, 0);
    x[free] = 1;
    for (std::size_t k = e.pivots.size(); k-- > 0;) {
      const std::size_t p = e.pivots[k];
      mpq_class acc = 0;
      for (std::size_t j = p + 1; j < e.cols; ++j) {
        if (x[j] != 0 && e.rows[k][j] != 0) acc += mpq_class(e.rows[k][j]) * x[j];
      }
      x[p] = -acc / mpq_class(e.rows[k][p]);
      x[p].canonicalize();
    }
    mpz_class lcm = 1;
    for (const auto& v : x) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    mpz_class gcd = 0;
    for (const auto& v : x) {
      mpz_class scaled = v.get_num() * (lcm / v.get_den());
      mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    std::vector<Rational> out;
    out.reserve(e.cols);
    for (const auto& v : x) out.emplace_back(mpq_class(v * mpq_class(lcm) / mpq_class(gcd)));
    basis.push_back(std::move(out));
  }
  return basis;
}

/// M^k == 0 for some k <= rows, decided exactly by repeated squaring.
inline bool is_nilpotent(const RationalMatrix& m) {
  detail::require(m.square(), "nilpotency test needs a square matrix");
  if (m.rows() == 0) return true;
  RationalMatrix power = m;
  std::size_t exponent = 1;
  while (exponent < m.rows()) {
    if (power.is_zero()) return true;
    power = power * power;
    exponent *= 2;
  }
  return power.is_zero();
}

}  // namespace lieext
