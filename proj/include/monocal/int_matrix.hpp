#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "monocal/numeric.hpp"

namespace monocal {

// Integer matrices with exact arithmetic, plus Smith normal form and the
// linear-algebra queries built on it (rank, kernel, solvability with
// certificates).

class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

  static IntMat identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntMat mul(const IntMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMat product: dimension mismatch");
    IntMat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& x = at(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
      }
    return r;
  }

  IntMat add(const IntMat& o) const {
    require_same_shape(o);
    IntMat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
  }

  IntMat sub(const IntMat& o) const {
    require_same_shape(o);
    IntMat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
  }

  IntMat neg() const {
    IntMat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
  }

  IntMat scale(const Int& c) const {
    IntMat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = c * a_[i];
    return r;
  }

  IntMat transpose() const {
    IntMat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }

  bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  std::vector<Int> row(std::size_t i) const {
    std::vector<Int> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
  }

  IntMat columns(const std::vector<std::size_t>& idx) const {
    IntMat r(rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
      for (std::size_t i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
    return r;
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
      s += "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ", ";
        s += at(i, j).get_str();
      }
      s += "]\n";
    }
    return s;
  }

 private:
  void require_same_shape(const IntMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("IntMat shape mismatch");
  }
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., all
// nonnegative.
struct SmithForm {
  IntMat u, d, v;
  std::size_t rank = 0;

  std::vector<Int> invariant_factors() const {
    std::vector<Int> f;
    for (std::size_t i = 0; i < rank; ++i) f.push_back(d.at(i, i));
    return f;
  }
};

namespace detail {

inline void snf_swap_rows(IntMat& d, IntMat& u, std::size_t i, std::size_t j) {
  for (std::size_t k = 0; k < d.cols(); ++k) std::swap(d.at(i, k), d.at(j, k));
  for (std::size_t k = 0; k < u.cols(); ++k) std::swap(u.at(i, k), u.at(j, k));
}
inline void snf_swap_cols(IntMat& d, IntMat& v, std::size_t i, std::size_t j) {
  for (std::size_t k = 0; k < d.rows(); ++k) std::swap(d.at(k, i), d.at(k, j));
  for (std::size_t k = 0; k < v.rows(); ++k) std::swap(v.at(k, i), v.at(k, j));
}
inline void snf_addmul_row(IntMat& d, IntMat& u, std::size_t dst, std::size_t src, const Int& c) {
  for (std::size_t k = 0; k < d.cols(); ++k) d.at(dst, k) += c * d.at(src, k);
  for (std::size_t k = 0; k < u.cols(); ++k) u.at(dst, k) += c * u.at(src, k);
}
inline void snf_addmul_col(IntMat& d, IntMat& v, std::size_t dst, std::size_t src, const Int& c) {
  for (std::size_t k = 0; k < d.rows(); ++k) d.at(k, dst) += c * d.at(k, src);
  for (std::size_t k = 0; k < v.rows(); ++k) v.at(k, dst) += c * v.at(k, src);
}

}  // namespace detail

inline SmithForm smith_normal_form(const IntMat& m) {
  SmithForm s{IntMat::identity(m.rows()), m, IntMat::identity(m.cols()), 0};
  IntMat& d = s.d;
  std::size_t t = 0;
  const std::size_t lim = std::min(m.rows(), m.cols());
  while (t < lim) {
    // locate a nonzero entry of minimal absolute value in the working block
    std::size_t pi = t, pj = t;
    bool found = false;
    Int best;
    for (std::size_t i = t; i < d.rows(); ++i)
      for (std::size_t j = t; j < d.cols(); ++j) {
        if (d.at(i, j) == 0) continue;
        Int a = abs(d.at(i, j));
        if (!found || a < best) {
          best = a;
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    detail::snf_swap_rows(d, s.u, t, pi);
    detail::snf_swap_cols(d, s.v, t, pj);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = d.at(i, t) / d.at(t, t);  // truncated: remainder smaller than pivot
        detail::snf_addmul_row(d, s.u, i, t, -q);
        if (d.at(i, t) != 0) {
          detail::snf_swap_rows(d, s.u, t, i);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = d.at(t, j) / d.at(t, t);
        detail::snf_addmul_col(d, s.v, j, t, -q);
        if (d.at(t, j) != 0) {
          detail::snf_swap_cols(d, s.v, t, j);
          dirty = true;
        }
      }
    }

    // divisibility: pivot must divide the rest of the block
    bool restart = false;
    for (std::size_t i = t + 1; i < d.rows() && !restart; ++i)
      for (std::size_t j = t + 1; j < d.cols() && !restart; ++j)
        if (d.at(i, j) % d.at(t, t) != 0) {
          detail::snf_addmul_row(d, s.u, t, i, Int(1));
          restart = true;
        }
    if (restart) continue;

    if (d.at(t, t) < 0) {
      for (std::size_t k = 0; k < d.cols(); ++k) d.at(t, k) = -d.at(t, k);
      for (std::size_t k = 0; k < s.u.cols(); ++k) s.u.at(t, k) = -s.u.at(t, k);
    }
    ++t;
  }
  s.rank = t;
  return s;
}

inline std::size_t int_rank(const IntMat& m) { return smith_normal_form(m).rank; }

// Invariant factors different from 1 (the torsion/stretch profile).
inline std::vector<Int> invariant_factors(const IntMat& m) {
  auto s = smith_normal_form(m);
  std::vector<Int> f;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.d.at(i, i) != 1) f.push_back(s.d.at(i, i));
  return f;
}

// Basis of the integer kernel of M (as columns).  The basis is primitive:
// it spans a direct summand.
inline IntMat kernel_basis(const IntMat& m) {
  auto s = smith_normal_form(m);
  std::vector<std::size_t> idx;
  for (std::size_t j = s.rank; j < m.cols(); ++j) idx.push_back(j);
  return s.v.columns(idx);
}

// Witness that M x = b has no integer solution: a row vector w and a modulus
// mod such that w^T M == 0 (mod mod) entrywise but w^T b != 0 (mod mod).
// mod == 0 means exact equality/vanishing.
struct UnsolvableCert {
  std::vector<Int> w;
  Int mod;
  std::size_t bad_column = 0;  // column of b that is obstructed

  bool verify(const IntMat& m, const IntMat& b) const {
    if (w.size() != m.rows()) return false;
    auto dotcol = [&](const IntMat& mat, std::size_t j) {
      Int s(0);
      for (std::size_t i = 0; i < mat.rows(); ++i) s += w[i] * mat.at(i, j);
      return s;
    };
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Int s = dotcol(m, j);
      if (mod == 0 ? s != 0 : s % mod != 0) return false;
    }
    Int s = dotcol(b, bad_column);
    return mod == 0 ? s != 0 : s % mod != 0;
  }
};

struct IntSolveResult {
  std::optional<IntMat> x;  // a particular solution when solvable
  std::optional<UnsolvableCert> cert;
  bool solvable() const { return x.has_value(); }
};

// Solve M x = b over the integers (b may have several columns).
inline IntSolveResult solve_int(const IntMat& m, const IntMat& b) {
  if (b.rows() != m.rows()) throw std::invalid_argument("solve_int: dimension mismatch");
  auto s = smith_normal_form(m);
  IntMat ub = s.u.mul(b);
  IntMat y(m.cols(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Int di = (i < s.rank) ? s.d.at(i, i) : Int(0);
      if (di == 0) {
        if (ub.at(i, j) != 0) return {std::nullopt, UnsolvableCert{s.u.row(i), Int(0), j}};
      } else {
        if (ub.at(i, j) % di != 0) return {std::nullopt, UnsolvableCert{s.u.row(i), di, j}};
        if (i < m.cols()) y.at(i, j) = ub.at(i, j) / di;
      }
    }
  }
  return {s.v.mul(y), std::nullopt};
}

}  // namespace monocal
