#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "monocal/fields.hpp"
#include "monocal/numeric.hpp"

namespace monocal {

// ---------------------------------------------------------------------------
// The binomial basis delta_r(x) = x-choose-r and the rescaling coefficients
// c_r^j with delta_r(t*x) = sum_j c_r^j(t) delta_j(x).  Everything here is
// exact; the two routes to the c-values (symbolic basis conversion and the
// Vandermonde recursion) are kept independent so they can check each other.
// ---------------------------------------------------------------------------

// delta_r at an arbitrary integer (also negative).
inline Int delta_eval_int(unsigned r, const Int& n) { return binomial(n, r); }

// delta_r at a rational argument, via the falling-factorial formula.
inline Rat delta_eval_rat(unsigned r, const Rat& x) {
  Rat num(1);
  for (unsigned i = 0; i < r; ++i) num *= x - Rat(i);
  return num / Rat(factorial(r));
}

// delta_r of a field element.  In characteristic ell the falling-factorial
// formula divides by r!, so it is only usable for r < ell; larger r must go
// through the integer-binomial path (delta_eval_int, then reduce).
template <class F>
typename F::Elem delta_eval(const F& fld, unsigned r, const typename F::Elem& n) {
  long long ch = fld.characteristic();
  if (ch != 0 && r >= static_cast<unsigned long long>(ch))
    throw std::domain_error("delta_eval: r >= characteristic; use the integer-binomial path");
  typename F::Elem num = fld.one();
  for (unsigned i = 0; i < r; ++i) num = fld.mul(num, fld.sub(n, fld.from_int(Int(i))));
  return fld.div(num, fld.from_int(factorial(r)));
}

// Polynomial over Q in the delta basis; coeffs[r] multiplies delta_r.
class BinomialPoly {
 public:
  BinomialPoly() = default;
  explicit BinomialPoly(std::vector<Rat> delta_coeffs) : c_(std::move(delta_coeffs)) { trim(); }

  static BinomialPoly delta(unsigned r) {
    std::vector<Rat> c(r + 1, Rat(0));
    c[r] = 1;
    return BinomialPoly(std::move(c));
  }

  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Rat coeff(unsigned r) const { return r < c_.size() ? c_[r] : Rat(0); }

  Rat eval(const Rat& x) const {
    Rat s(0);
    for (unsigned r = 0; r < c_.size(); ++r) s += c_[r] * delta_eval_rat(r, x);
    return s;
  }
  Rat eval_int(const Int& n) const {
    Rat s(0);
    for (unsigned r = 0; r < c_.size(); ++r) s += c_[r] * Rat(delta_eval_int(r, n));
    return s;
  }

  BinomialPoly add(const BinomialPoly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (unsigned i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (unsigned i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return BinomialPoly(std::move(c));
  }

  BinomialPoly scale(const Rat& q) const {
    std::vector<Rat> c = c_;
    for (auto& x : c) x *= q;
    return BinomialPoly(std::move(c));
  }

  bool has_integer_delta_coords() const {
    for (const auto& q : c_)
      if (!is_integer(q)) return false;
    return true;
  }

  bool eq(const BinomialPoly& o) const { return c_ == o.c_; }

  // Monomial coefficients (constant term first).
  std::vector<Rat> to_monomial() const;
  static BinomialPoly from_monomial(const std::vector<Rat>& mono);

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

// Monomial coefficients of delta_r = x(x-1)...(x-r+1)/r!.
inline std::vector<Rat> delta_monomial_coeffs(unsigned r) {
  std::vector<Rat> c{Rat(1)};
  for (unsigned i = 0; i < r; ++i) {
    // multiply by (x - i)
    std::vector<Rat> next(c.size() + 1, Rat(0));
    for (unsigned k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= Rat(i) * c[k];
    }
    c = std::move(next);
  }
  Rat rf(factorial(r));
  for (auto& q : c) q /= rf;
  return c;
}

inline std::vector<Rat> BinomialPoly::to_monomial() const {
  std::vector<Rat> mono(c_.empty() ? 1 : c_.size(), Rat(0));
  for (unsigned r = 0; r < c_.size(); ++r) {
    if (c_[r] == 0) continue;
    auto d = delta_monomial_coeffs(r);
    for (unsigned k = 0; k < d.size(); ++k) mono[k] += c_[r] * d[k];
  }
  while (mono.size() > 1 && mono.back() == 0) mono.pop_back();
  return mono;
}

// Triangular solve against the delta basis: peel off the top monomial degree,
// whose coefficient in delta_m is 1/m!.
inline BinomialPoly BinomialPoly::from_monomial(const std::vector<Rat>& mono) {
  std::vector<Rat> rem = mono;
  while (rem.size() > 1 && rem.back() == 0) rem.pop_back();
  std::vector<Rat> delta(rem.size(), Rat(0));
  for (long m = static_cast<long>(rem.size()) - 1; m >= 0; --m) {
    if (rem[m] == 0) continue;
    Rat cm = rem[m] * Rat(factorial(static_cast<unsigned>(m)));
    delta[m] = cm;
    auto d = delta_monomial_coeffs(static_cast<unsigned>(m));
    for (unsigned k = 0; k < d.size(); ++k) rem[k] -= cm * d[k];
  }
  return BinomialPoly(std::move(delta));
}

// delta_r * delta_s = sum_i (r+s-i)! / ((r-i)!(s-i)!i!) delta_{r+s-i}.
inline BinomialPoly delta_product(unsigned r, unsigned s) {
  std::vector<Rat> c(r + s + 1, Rat(0));
  for (unsigned i = 0; i <= std::min(r, s); ++i) {
    Int num = factorial(r + s - i);
    Int den = factorial(r - i) * factorial(s - i) * factorial(i);
    c[r + s - i] = make_rat(num, den);  // always a positive integer
  }
  return BinomialPoly(std::move(c));
}

inline BinomialPoly mul(const BinomialPoly& f, const BinomialPoly& g) {
  BinomialPoly out;
  for (unsigned r = 0; r < f.coeffs().size(); ++r) {
    if (f.coeff(r) == 0) continue;
    for (unsigned s = 0; s < g.coeffs().size(); ++s) {
      if (g.coeff(s) == 0) continue;
      out = out.add(delta_product(r, s).scale(f.coeff(r) * g.coeff(s)));
    }
  }
  return out;
}

// Sampling certificate: p(n) integral for 0 <= n <= sample_range.  The exact
// criterion is has_integer_delta_coords(); the two agree (tested).
inline bool is_z_closed(const BinomialPoly& p, unsigned sample_range) {
  if (sample_range < 1) throw std::invalid_argument("is_z_closed: sample_range must be >= 1");
  for (unsigned n = 0; n <= sample_range; ++n)
    if (!is_integer(p.eval_int(Int(n)))) return false;
  return true;
}

// Dense polynomial in Q[t], constant term first.
class PolyQ {
 public:
  PolyQ() : c_{Rat(0)} {}
  explicit PolyQ(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.push_back(Rat(0));
    trim();
  }
  static PolyQ constant(const Rat& q) { return PolyQ({q}); }
  static PolyQ t_power(unsigned k) {
    std::vector<Rat> c(k + 1, Rat(0));
    c[k] = 1;
    return PolyQ(std::move(c));
  }

  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const { return c_.size() == 1 && c_[0] == 0; }

  PolyQ add(const PolyQ& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (unsigned i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (unsigned i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return PolyQ(std::move(c));
  }
  PolyQ sub(const PolyQ& o) const { return add(o.scale(Rat(-1))); }
  PolyQ mul(const PolyQ& o) const {
    std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
    for (unsigned i = 0; i < c_.size(); ++i)
      for (unsigned j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return PolyQ(std::move(c));
  }
  PolyQ scale(const Rat& q) const {
    std::vector<Rat> c = c_;
    for (auto& x : c) x *= q;
    return PolyQ(std::move(c));
  }
  Rat eval(const Rat& t) const {
    Rat s(0);
    for (long i = static_cast<long>(c_.size()) - 1; i >= 0; --i) s = s * t + c_[i];
    return s;
  }
  bool eq(const PolyQ& o) const { return c_ == o.c_; }
  std::string str() const {
    std::string s;
    for (unsigned i = 0; i < c_.size(); ++i) {
      if (i) s += " + ";
      s += rat_str(c_[i]) + "*t^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

// Row r of the rescaling table by basis conversion: expand delta_r(t*x) as a
// polynomial in x with Q[t] coefficients, then solve triangularly against the
// delta_j(x) basis.  Returns c_r^0, ..., c_r^r.
inline std::vector<PolyQ> rescale_coeffs_basis(unsigned r) {
  // product (tx)(tx-1)...(tx-r+1)/r!, collected by powers of x
  std::vector<PolyQ> xc{PolyQ::constant(Rat(1))};
  for (unsigned i = 0; i < r; ++i) {
    std::vector<PolyQ> next(xc.size() + 1, PolyQ());
    for (unsigned k = 0; k < xc.size(); ++k) {
      next[k + 1] = next[k + 1].add(xc[k].mul(PolyQ::t_power(1)));
      next[k] = next[k].add(xc[k].scale(Rat(-(long)i)));
    }
    xc = std::move(next);
  }
  Rat rf(factorial(r));
  for (auto& p : xc) p = p.scale(Rat(1) / rf);

  std::vector<PolyQ> c(r + 1, PolyQ());
  for (long m = static_cast<long>(xc.size()) - 1; m >= 0; --m) {
    if (xc[m].is_zero()) continue;
    PolyQ cm = xc[m].scale(Rat(factorial(static_cast<unsigned>(m))));
    c[m] = cm;
    auto dm = delta_monomial_coeffs(static_cast<unsigned>(m));
    for (unsigned k = 0; k < dm.size(); ++k) xc[k] = xc[k].sub(cm.scale(dm[k]));
  }
  return c;
}

// Triangle of c_g^h values at argument 0: c_0^0 = 1, everything else 0.
inline std::vector<std::vector<Int>> rescale_triangle_base(unsigned r_max) {
  std::vector<std::vector<Int>> cur(r_max + 1);
  for (unsigned g = 0; g <= r_max; ++g) cur[g].assign(g + 1, Int(0));
  cur[0][0] = 1;
  return cur;
}

// One step of the Vandermonde recursion: the triangle at m from the triangle
// at m-1.
inline std::vector<std::vector<Int>> rescale_triangle_step(const std::vector<std::vector<Int>>& cur) {
  unsigned r_max = static_cast<unsigned>(cur.size()) - 1;
  std::vector<std::vector<Int>> next(r_max + 1);
  for (unsigned r = 0; r <= r_max; ++r) {
    next[r].assign(r + 1, Int(0));
    for (unsigned j = 0; j <= r; ++j) {
      Int sum(0);
      for (unsigned g = 0; g <= r; ++g) {
        for (unsigned h = 0; h <= g; ++h) {
          long i = static_cast<long>(r) - g + h - j;  // index into the delta-product expansion
          if (i < 0) continue;
          if (i > static_cast<long>(std::min(h, r - g))) continue;
          if (j + g < r) continue;  // (j+g-r)! requires j+g >= r
          if (h > j) continue;
          Int coef = factorial(j) / (factorial(j + g - r) * factorial(j - h) * factorial(static_cast<unsigned>(i)));
          sum += cur[g][h] * coef;
        }
      }
      next[r][j] = sum;
    }
  }
  return next;
}

// The full triangle c_g^h(m) for g <= r_max at an integer argument m >= 0,
// computed by the Vandermonde recursion (induction on m).  Every entry is an
// integer.
inline std::vector<std::vector<Int>> rescale_triangle_at(unsigned r_max, unsigned long m) {
  auto cur = rescale_triangle_base(r_max);
  for (unsigned long step = 1; step <= m; ++step) cur = rescale_triangle_step(cur);
  return cur;
}

// Row r only, at integer argument m.
inline std::vector<Int> rescale_coeffs_recursive(unsigned r, unsigned long m) {
  return rescale_triangle_at(r, m)[r];
}

// Table of c_r^j(t) for 0 <= j <= r <= r_max, stored symbolically in Q[t].
struct RescaleTable {
  unsigned r_max;
  std::vector<std::vector<PolyQ>> rows;  // rows[r][j] = c_r^j

  static RescaleTable build(unsigned r_max) {
    RescaleTable t;
    t.r_max = r_max;
    t.rows.reserve(r_max + 1);
    for (unsigned r = 0; r <= r_max; ++r) t.rows.push_back(rescale_coeffs_basis(r));
    return t;
  }

  // c_r^j evaluated at a rational point.
  Rat eval(unsigned r, unsigned j, const Rat& t) const { return rows.at(r).at(j).eval(t); }
};

}  // namespace monocal
