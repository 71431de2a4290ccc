#include "ternalg/linalg.hpp"

#include <atomic>
#include <string>
#include <utility>

namespace ternalg {

namespace {

std::atomic<std::size_t> g_dimension_cap{16};

void require(bool ok, const char* what) {
  if (!ok) throw Error(Errc::DimensionMismatch, what);
}

}  // namespace

std::size_t dimension_cap() noexcept { return g_dimension_cap.load(std::memory_order_relaxed); }
void set_dimension_cap(std::size_t cap) noexcept { g_dimension_cap.store(cap, std::memory_order_relaxed); }

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::DimensionCap: return "DimensionCap";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::MissingTensor: return "MissingTensor";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::InvalidBundle: return "InvalidBundle";
    case Errc::MissingRep: return "MissingRep";
    case Errc::NotATrace: return "NotATrace";
    case Errc::NotRelativeRB: return "NotRelativeRB";
    case Errc::NotRotaBaxter: return "NotRotaBaxter";
    case Errc::NotNijenhuis: return "NotNijenhuis";
    case Errc::NotCoherent: return "NotCoherent";
    case Errc::NotSkew: return "NotSkew";
    case Errc::NotSymplectic: return "NotSymplectic";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownName: return "UnknownName";
  }
  return "Unknown";
}

// ---- Vec -------------------------------------------------------------------

Vec Vec::basis(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

bool Vec::is_zero() const noexcept {
  for (const auto& x : v_)
    if (!x.is_zero()) return false;
  return true;
}

Vec& Vec::operator+=(const Vec& o) {
  require(size() == o.size(), "vector addition");
  for (std::size_t i = 0; i < v_.size(); ++i)
    if (!o.v_[i].is_zero()) v_[i] += o.v_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  require(size() == o.size(), "vector subtraction");
  for (std::size_t i = 0; i < v_.size(); ++i)
    if (!o.v_[i].is_zero()) v_[i] -= o.v_[i];
  return *this;
}

Vec& Vec::operator*=(const Rational& s) {
  for (auto& x : v_) x *= s;
  return *this;
}

Vec& Vec::axpy(const Rational& s, const Vec& o) {
  require(size() == o.size(), "axpy");
  if (s.is_zero()) return *this;
  for (std::size_t i = 0; i < v_.size(); ++i)
    if (!o.v_[i].is_zero()) v_[i] += s * o.v_[i];
  return *this;
}

Rational dot(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "dot product");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

Vec concat(const Vec& a, const Vec& b) {
  Vec r(a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[a.size() + i] = b[i];
  return r;
}

Vec slice(const Vec& v, std::size_t offset, std::size_t len) {
  require(offset + len <= v.size(), "slice");
  Vec r(len);
  for (std::size_t i = 0; i < len; ++i) r[i] = v[offset + i];
  return r;
}

std::ostream& operator<<(std::ostream& os, const Vec& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  return os << ')';
}

// ---- Matrix ----------------------------------------------------------------

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require(r.size() == cols_, "ragged matrix literal");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    require(cols[c].size() == rows, "column length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const noexcept {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix addition");
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (!o.a_[i].is_zero()) a_[i] += o.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix subtraction");
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (!o.a_[i].is_zero()) a_[i] -= o.a_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& x : a_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols_ == b.rows_, "matrix product");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
    }
  return c;
}

Vec operator*(const Matrix& a, const Vec& x) {
  require(a.cols_ == x.size(), "matrix-vector product");
  Vec y(a.rows_);
  for (std::size_t k = 0; k < a.cols_; ++k) {
    if (x[k].is_zero()) continue;
    for (std::size_t i = 0; i < a.rows_; ++i)
      if (!a(i, k).is_zero()) y[i] += a(i, k) * x[k];
  }
  return y;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
  }
  return os << ']';
}

namespace {

// Reduced row echelon form in place; returns the rank.
std::size_t rref(Matrix& m) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    const Rational inv = Rational(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
    }
    ++row;
  }
  return row;
}

}  // namespace

Matrix invert(const Matrix& m) {
  if (!m.is_square()) throw Error(Errc::DimensionMismatch, "invert: matrix is not square");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  rref(aug);
  for (std::size_t i = 0; i < n; ++i)
    if (aug(i, i) != Rational(1))
      throw Error(Errc::SingularMatrix, "matrix has rank < " + std::to_string(n));
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

std::size_t rank(const Matrix& m) {
  Matrix w = m;
  return rref(w);
}

bool in_column_span(const Matrix& m, const Vec& v) {
  require(m.rows() == v.size(), "in_column_span");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = v[r];
  }
  return rank(m) == rank(aug);
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
  return m;
}

// ---- Tensors ---------------------------------------------------------------

Vec Tensor3::entry(std::size_t i, std::size_t j) const {
  Vec v(n_);
  for (std::size_t k = 0; k < n_; ++k) v[k] = (*this)(i, j, k);
  return v;
}

void Tensor3::set_entry(std::size_t i, std::size_t j, const Vec& v) {
  require(v.size() == n_, "Tensor3::set_entry");
  for (std::size_t k = 0; k < n_; ++k) (*this)(i, j, k) = v[k];
}

bool Tensor3::is_zero() const noexcept { return nonzeros() == 0; }

std::size_t Tensor3::nonzeros() const noexcept {
  std::size_t c = 0;
  for (const auto& x : c_) c += !x.is_zero();
  return c;
}

Vec Tensor4::entry(std::size_t i, std::size_t j, std::size_t k) const {
  Vec v(n_);
  for (std::size_t l = 0; l < n_; ++l) v[l] = (*this)(i, j, k, l);
  return v;
}

void Tensor4::set_entry(std::size_t i, std::size_t j, std::size_t k, const Vec& v) {
  require(v.size() == n_, "Tensor4::set_entry");
  for (std::size_t l = 0; l < n_; ++l) (*this)(i, j, k, l) = v[l];
}

bool Tensor4::is_zero() const noexcept { return nonzeros() == 0; }

std::size_t Tensor4::nonzeros() const noexcept {
  std::size_t c = 0;
  for (const auto& x : f_) c += !x.is_zero();
  return c;
}

Vec apply_bilinear(const Tensor3& t, const Vec& x, const Vec& y) {
  const std::size_t n = t.dim();
  if (x.size() != n || y.size() != n)
    throw Error(Errc::DimensionMismatch, "apply_bilinear: tensor dim " + std::to_string(n) +
                                             ", arguments " + std::to_string(x.size()) + ", " +
                                             std::to_string(y.size()));
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Rational w = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& c = t(i, j, k);
        if (!c.is_zero()) out[k] += w * c;
      }
    }
  }
  return out;
}

Vec apply_trilinear(const Tensor4& t, const Vec& x, const Vec& y, const Vec& z) {
  const std::size_t n = t.dim();
  if (x.size() != n || y.size() != n || z.size() != n)
    throw Error(Errc::DimensionMismatch, "apply_trilinear: tensor dim " + std::to_string(n));
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Rational wij = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (z[k].is_zero()) continue;
        const Rational w = wij * z[k];
        for (std::size_t l = 0; l < n; ++l) {
          const Rational& f = t(i, j, k, l);
          if (!f.is_zero()) out[l] += w * f;
        }
      }
    }
  }
  return out;
}

Matrix left_mult_matrix(const Tensor3& t, const Vec& x) {
  const std::size_t n = t.dim();
  std::vector<Vec> cols;
  cols.reserve(n);
  for (std::size_t j = 0; j < n; ++j) cols.push_back(apply_bilinear(t, x, Vec::basis(n, j)));
  return Matrix::from_columns(n, cols);
}

Matrix bracket_matrix(const Tensor4& t, const Vec& x, const Vec& y) {
  const std::size_t n = t.dim();
  std::vector<Vec> cols;
  cols.reserve(n);
  for (std::size_t k = 0; k < n; ++k) cols.push_back(apply_trilinear(t, x, y, Vec::basis(n, k)));
  return Matrix::from_columns(n, cols);
}

}  // namespace ternalg
