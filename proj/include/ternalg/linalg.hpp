#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "ternalg/error.hpp"
#include "ternalg/rational.hpp"

namespace ternalg {

/// Largest space dimension accepted by bundle validation (default 16).
std::size_t dimension_cap() noexcept;
void set_dimension_cap(std::size_t cap) noexcept;

class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t n) : v_(n) {}
  Vec(std::initializer_list<Rational> xs) : v_(xs) {}
  explicit Vec(std::vector<Rational> xs) : v_(std::move(xs)) {}

  static Vec basis(std::size_t n, std::size_t i);

  [[nodiscard]] std::size_t size() const noexcept { return v_.size(); }
  Rational& operator[](std::size_t i) { return v_[i]; }
  const Rational& operator[](std::size_t i) const { return v_[i]; }

  [[nodiscard]] bool is_zero() const noexcept;

  auto begin() const noexcept { return v_.begin(); }
  auto end() const noexcept { return v_.end(); }
  auto begin() noexcept { return v_.begin(); }
  auto end() noexcept { return v_.end(); }

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(const Rational& s);
  /// this += s * o
  Vec& axpy(const Rational& s, const Vec& o);

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator-(Vec a) { return a *= Rational(-1); }
  friend Vec operator*(const Rational& s, Vec a) { return a *= s; }
  friend bool operator==(const Vec& a, const Vec& b) = default;

 private:
  std::vector<Rational> v_;
};

Rational dot(const Vec& a, const Vec& b);
/// Concatenation a ⊕ b.
Vec concat(const Vec& a, const Vec& b);
Vec slice(const Vec& v, std::size_t offset, std::size_t len);

std::ostream& operator<<(std::ostream& os, const Vec& v);

/// Dense row-major exact matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  /// Matrix whose j-th column is cols[j].
  static Matrix from_columns(std::size_t rows, const std::vector<Vec>& cols);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  [[nodiscard]] Vec column(std::size_t c) const;
  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] bool is_zero() const noexcept;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) { return a *= Rational(-1); }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vec operator*(const Matrix& a, const Vec& x);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// Exact inverse by Gauss-Jordan elimination. Throws Errc::SingularMatrix.
Matrix invert(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Whether v lies in the column span of m.
bool in_column_span(const Matrix& m, const Vec& v);
/// Block-diagonal direct sum diag(a, b).
Matrix block_diag(const Matrix& a, const Matrix& b);

/// Binary structure constants: e_i · e_j = Σ_k c(i,j,k) e_k.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::size_t n) : n_(n), c_(n * n * n) {}

  [[nodiscard]] std::size_t dim() const noexcept { return n_; }
  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * n_ + j) * n_ + k]; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * n_ + j) * n_ + k];
  }
  /// The structure vector e_i · e_j.
  [[nodiscard]] Vec entry(std::size_t i, std::size_t j) const;
  void set_entry(std::size_t i, std::size_t j, const Vec& v);
  [[nodiscard]] bool is_zero() const noexcept;
  [[nodiscard]] std::size_t nonzeros() const noexcept;

  friend bool operator==(const Tensor3& a, const Tensor3& b) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> c_;
};

/// Ternary structure constants: [e_i, e_j, e_k] = Σ_l f(i,j,k,l) e_l.
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(std::size_t n) : n_(n), f_(n * n * n * n) {}

  [[nodiscard]] std::size_t dim() const noexcept { return n_; }
  Rational& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return f_[((i * n_ + j) * n_ + k) * n_ + l];
  }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return f_[((i * n_ + j) * n_ + k) * n_ + l];
  }
  [[nodiscard]] Vec entry(std::size_t i, std::size_t j, std::size_t k) const;
  void set_entry(std::size_t i, std::size_t j, std::size_t k, const Vec& v);
  [[nodiscard]] bool is_zero() const noexcept;
  [[nodiscard]] std::size_t nonzeros() const noexcept;

  friend bool operator==(const Tensor4& a, const Tensor4& b) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> f_;
};

/// Σ_{i,j} x_i y_j (e_i · e_j); zero coordinates are skipped.
Vec apply_bilinear(const Tensor3& t, const Vec& x, const Vec& y);
/// Σ_{i,j,k} x_i y_j z_k [e_i, e_j, e_k].
Vec apply_trilinear(const Tensor4& t, const Vec& x, const Vec& y, const Vec& z);

/// Matrix of y ↦ x · y (left multiplication by x).
Matrix left_mult_matrix(const Tensor3& t, const Vec& x);
/// Matrix of z ↦ [x, y, z].
Matrix bracket_matrix(const Tensor4& t, const Vec& x, const Vec& y);

}  // namespace ternalg
