#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "monocal/fields.hpp"

namespace monocal {

// Dense matrix over a coefficient field.  Rows index the target basis,
// columns the source basis; every equivariance statement in this library is a
// matrix identity under that convention.
template <class Field>
class Matrix {
 public:
  using Elem = typename Field::Elem;

  Matrix(Field f, std::size_t rows, std::size_t cols)
      : fld_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

  static Matrix identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return fld_; }

  Elem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Elem& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix mul(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    Matrix r(fld_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Elem& a = at(i, k);
        if (fld_.is_zero(a)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r.at(i, j) = fld_.add(r.at(i, j), fld_.mul(a, o.at(k, j)));
      }
    return r;
  }

  Matrix add(const Matrix& o) const {
    require_same_shape(o);
    Matrix r(fld_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = fld_.add(data_[i], o.data_[i]);
    return r;
  }

  Matrix sub(const Matrix& o) const {
    require_same_shape(o);
    Matrix r(fld_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = fld_.sub(data_[i], o.data_[i]);
    return r;
  }

  Matrix scale(const Elem& c) const {
    Matrix r(fld_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = fld_.mul(c, data_[i]);
    return r;
  }

  // Kronecker product; block index (i,j) of this pairs with o so that the
  // combined column index is col(this)*o.cols() + col(o).
  Matrix kron(const Matrix& o) const {
    Matrix r(fld_, rows_ * o.rows_, cols_ * o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const Elem& a = at(i, j);
        if (fld_.is_zero(a)) continue;
        for (std::size_t k = 0; k < o.rows_; ++k)
          for (std::size_t l = 0; l < o.cols_; ++l)
            r.at(i * o.rows_ + k, j * o.cols_ + l) = fld_.mul(a, o.at(k, l));
      }
    return r;
  }

  bool eq(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!fld_.eq(data_[i], o.data_[i])) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& e : data_)
      if (!fld_.is_zero(e)) return false;
    return true;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    return eq(identity(fld_, rows_));
  }

  Matrix pow(unsigned long e) const {
    if (rows_ != cols_) throw std::invalid_argument("matrix power: not square");
    Matrix r = identity(fld_, rows_);
    Matrix b = *this;
    while (e > 0) {
      if (e & 1) r = r.mul(b);
      b = b.mul(b);
      e >>= 1;
    }
    return r;
  }

  // Gauss-Jordan over the field; throws on singular input.
  Matrix inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("matrix inverse: not square");
    Matrix a = *this;
    Matrix inv = identity(fld_, rows_);
    for (std::size_t col = 0; col < cols_; ++col) {
      std::size_t piv = col;
      while (piv < rows_ && fld_.is_zero(a.at(piv, col))) ++piv;
      if (piv == rows_) throw std::domain_error("matrix inverse: singular matrix");
      if (piv != col) {
        a.swap_rows(piv, col);
        inv.swap_rows(piv, col);
      }
      Elem d = fld_.inv(a.at(col, col));
      a.scale_row(col, d);
      inv.scale_row(col, d);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == col || fld_.is_zero(a.at(i, col))) continue;
        Elem c = a.at(i, col);
        a.axpy_row(i, col, fld_.neg(c));
        inv.axpy_row(i, col, fld_.neg(c));
      }
    }
    return inv;
  }

  std::size_t rank() const {
    Matrix a = *this;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
      std::size_t piv = r;
      while (piv < rows_ && fld_.is_zero(a.at(piv, col))) ++piv;
      if (piv == rows_) continue;
      if (piv != r) a.swap_rows(piv, r);
      Elem d = fld_.inv(a.at(r, col));
      a.scale_row(r, d);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || fld_.is_zero(a.at(i, col))) continue;
        a.axpy_row(i, r, fld_.neg(a.at(i, col)));
      }
      ++r;
    }
    return r;
  }

  // Unique solution of this * x = b when this has full column rank.
  Matrix solve_full_column_rank(const Matrix& b) const {
    if (b.rows_ != rows_) throw std::invalid_argument("solve: dimension mismatch");
    Matrix a = *this;
    Matrix rhs = b;
    std::size_t r = 0;
    std::vector<std::size_t> pivot_row(cols_, 0);
    for (std::size_t col = 0; col < cols_; ++col) {
      std::size_t piv = r;
      while (piv < rows_ && fld_.is_zero(a.at(piv, col))) ++piv;
      if (piv == rows_) throw std::domain_error("solve: column rank deficient");
      if (piv != r) {
        a.swap_rows(piv, r);
        rhs.swap_rows(piv, r);
      }
      Elem d = fld_.inv(a.at(r, col));
      a.scale_row(r, d);
      rhs.scale_row(r, d);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || fld_.is_zero(a.at(i, col))) continue;
        Elem c = fld_.neg(a.at(i, col));
        a.axpy_row(i, r, c);
        rhs.axpy_row(i, r, c);
      }
      pivot_row[col] = r;
      ++r;
    }
    // consistency of the remaining rows
    for (std::size_t i = r; i < rows_; ++i)
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        if (!fld_.is_zero(rhs.at(i, j))) throw std::domain_error("solve: inconsistent system");
    Matrix x(fld_, cols_, b.cols_);
    for (std::size_t col = 0; col < cols_; ++col)
      for (std::size_t j = 0; j < b.cols_; ++j) x.at(col, j) = rhs.at(pivot_row[col], j);
    return x;
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
      s += "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ", ";
        s += fld_.str(at(i, j));
      }
      s += "]\n";
    }
    return s;
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }
  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
  }
  void scale_row(std::size_t i, const Elem& c) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) = fld_.mul(c, at(i, k));
  }
  void axpy_row(std::size_t i, std::size_t j, const Elem& c) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) = fld_.add(at(i, k), fld_.mul(c, at(j, k)));
  }

  Field fld_;
  std::size_t rows_, cols_;
  std::vector<Elem> data_;
};

}  // namespace monocal
