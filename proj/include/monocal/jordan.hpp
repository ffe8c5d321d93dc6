#pragma once

#include <stdexcept>
#include <vector>

#include "monocal/binomial.hpp"
#include "monocal/fields.hpp"
#include "monocal/matrix.hpp"

namespace monocal {

// ---------------------------------------------------------------------------
// Matrix models of the modules L_a spanned by phi_0, ..., phi_{a-1}, where
// phi_r(n) = (-1)^r * delta_r(n).  Monodromy is the translation action of an
// integer multiple of the fixed generator, the Galois action is parameterized
// by the unit t (the inverse cyclotomic value), and the multiplication maps
// come from the delta-product structure constants.
//
// Convention: rows index the target basis, columns the source basis.
// ---------------------------------------------------------------------------

struct JordanModule {
  unsigned dim = 1;   // a >= 1
  int twist = 0;      // Tate-twist weight; scales Galois by t^twist
};

template <class F>
struct ModuleMap {
  std::vector<JordanModule> sources;  // tensor factors of the source
  JordanModule target;
  Matrix<F> matrix;

  std::size_t source_dim() const {
    std::size_t d = 1;
    for (const auto& m : sources) d *= m.dim;
    return d;
  }
};

// Action of n*g on L_a in the phi basis: entry (j, r) = (-1)^(r-j) * delta_{r-j}(-n).
// Upper triangular with unit diagonal, hence always unipotent.
template <class F>
Matrix<F> monodromy_matrix(const F& fld, unsigned a, const Int& n) {
  if (a < 1) throw std::invalid_argument("monodromy_matrix: dimension must be >= 1");
  Matrix<F> m(fld, a, a);
  for (unsigned r = 0; r < a; ++r)
    for (unsigned j = 0; j <= r; ++j) {
      unsigned d = r - j;
      Int val = delta_eval_int(d, -n);
      if (d % 2) val = -val;
      m.at(j, r) = fld.from_int(val);
    }
  return m;
}

// Second route: powers of the generator matrix M(-1).
template <class F>
Matrix<F> monodromy_matrix_via_power(const F& fld, unsigned a, long n) {
  Matrix<F> gen = monodromy_matrix(fld, a, Int(-1));
  if (n <= 0) return gen.pow(static_cast<unsigned long>(-n));
  return gen.inverse().pow(static_cast<unsigned long>(n));
}

// Evaluation matrix E[m][r] = phi_r(m g) for m = 0..a-1.  Lower triangular
// with diagonal (-1)^m, hence invertible over every coefficient field.
template <class F>
Matrix<F> evaluation_matrix(const F& fld, unsigned a) {
  Matrix<F> e(fld, a, a);
  for (unsigned m = 0; m < a; ++m)
    for (unsigned r = 0; r < a; ++r) {
      Int val = delta_eval_int(r, Int(m));
      if (r % 2) val = -val;
      e.at(m, r) = fld.from_int(val);
    }
  return e;
}

// Oracle route for the monodromy action: sample (n*g . phi_r) at m = 0..a-1
// and solve against the evaluation matrix.
template <class F>
Matrix<F> monodromy_matrix_via_evaluation(const F& fld, unsigned a, const Int& n) {
  Matrix<F> samples(fld, a, a);
  for (unsigned m = 0; m < a; ++m)
    for (unsigned r = 0; r < a; ++r) {
      Int val = delta_eval_int(r, Int(m) - n);
      if (r % 2) val = -val;
      samples.at(m, r) = fld.from_int(val);
    }
  return evaluation_matrix(fld, a).inverse().mul(samples);
}

// --- Galois action --------------------------------------------------------
//
// gamma . phi_r = sum_j (-1)^(j+r) c_r^j(t) phi_j with t the inverse
// cyclotomic value of gamma.  Over Q the c-polynomials are evaluated
// symbolically at a rational unit.  Over F_ell the c-values have non-integral
// coefficients, so t is lifted to an integer representative modulo ell^k
// (the smallest k with a-1 < ell^k), the integer value is computed by the
// Vandermonde recursion, and the result is reduced mod ell.

inline Matrix<RationalField> galois_matrix(const RationalField& fld, unsigned a, const Rat& t) {
  if (a < 1) throw std::invalid_argument("galois_matrix: dimension must be >= 1");
  if (t == 0) throw std::domain_error("galois_matrix: t must be a unit");
  Matrix<RationalField> g(fld, a, a);
  for (unsigned r = 0; r < a; ++r) {
    auto row = rescale_coeffs_basis(r);
    for (unsigned j = 0; j <= r; ++j) {
      Rat val = row[j].eval(t);
      if ((j + r) % 2) val = -val;
      g.at(j, r) = val;
    }
  }
  return g;
}

// Precision needed to evaluate c_r^j mod ell for all r < a: smallest k with
// a-1 < ell^k.
inline unsigned residue_precision_for(unsigned a, long long ell) {
  unsigned k = 1;
  long long pk = ell;
  while (pk <= static_cast<long long>(a) - 1) {
    pk *= ell;
    ++k;
  }
  return k;
}

inline Matrix<PrimeField> galois_matrix(const PrimeField& fld, unsigned a, const ResidueElem& t) {
  if (a < 1) throw std::invalid_argument("galois_matrix: dimension must be >= 1");
  if (t.ell != fld.p) throw std::invalid_argument("galois_matrix: residue prime does not match the field");
  if (t.value % t.ell == 0) throw std::domain_error("galois_matrix: t must be a unit");
  unsigned k = residue_precision_for(a, fld.p);
  if (t.exponent < k)
    throw std::invalid_argument("galois_matrix: t needs precision ell^" + std::to_string(k) + " for dimension " + std::to_string(a));
  long long pk = 1;
  for (unsigned i = 0; i < k; ++i) pk *= fld.p;
  unsigned long lift = static_cast<unsigned long>(t.value % pk);
  auto triangle = rescale_triangle_at(a - 1, lift);
  Matrix<PrimeField> g(fld, a, a);
  for (unsigned r = 0; r < a; ++r)
    for (unsigned j = 0; j <= r; ++j) {
      Int val = triangle[r][j];
      if ((j + r) % 2) val = -val;
      g.at(j, r) = fld.from_int(val);
    }
  return g;
}

// Oracle routes: sample gamma.phi_r at m = 0..a-1 and solve.
inline Matrix<RationalField> galois_matrix_via_evaluation(const RationalField& fld, unsigned a, const Rat& t) {
  Matrix<RationalField> samples(fld, a, a);
  for (unsigned m = 0; m < a; ++m)
    for (unsigned r = 0; r < a; ++r) {
      Rat val = delta_eval_rat(r, Rat(m) * t);
      if (r % 2) val = -val;
      samples.at(m, r) = val;
    }
  return evaluation_matrix(fld, a).inverse().mul(samples);
}

inline Matrix<PrimeField> galois_matrix_via_evaluation(const PrimeField& fld, unsigned a, const ResidueElem& t) {
  unsigned k = residue_precision_for(a, fld.p);
  if (t.exponent < k) throw std::invalid_argument("galois_matrix_via_evaluation: insufficient precision");
  long long pk = 1;
  for (unsigned i = 0; i < k; ++i) pk *= fld.p;
  long long lift = t.value % pk;
  Matrix<PrimeField> samples(fld, a, a);
  for (unsigned m = 0; m < a; ++m)
    for (unsigned r = 0; r < a; ++r) {
      Int val = delta_eval_int(r, to_int(lift) * m);
      if (r % 2) val = -val;
      samples.at(m, r) = fld.from_int(val);
    }
  return evaluation_matrix(fld, a).inverse().mul(samples);
}

// Base change from the phi^{g'} basis to the phi^{g} basis where g' = u*g;
// same triangular formula as the Galois action.
template <class F, class Unit>
Matrix<F> change_of_generator_matrix(const F& fld, unsigned a, const Unit& u) {
  return galois_matrix(fld, a, u);
}

// Exponent of a field element, negative exponents via inversion.
template <class F>
typename F::Elem field_pow(const F& fld, const typename F::Elem& x, long e) {
  typename F::Elem base = e < 0 ? fld.inv(x) : x;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  typename F::Elem r = fld.one();
  while (k > 0) {
    if (k & 1) r = fld.mul(r, base);
    base = fld.mul(base, base);
    k >>= 1;
  }
  return r;
}

// The Galois parameter reduced into the coefficient field.
inline Rat galois_unit_in_field(const RationalField&, const Rat& t) { return t; }
inline PrimeFieldElem galois_unit_in_field(const PrimeField& fld, const ResidueElem& t) {
  return fld.from_int(to_int(t.value));
}

// Galois action on a module with a twist label: t^twist * G_dim(t).
template <class F, class Unit>
Matrix<F> twisted_galois_matrix(const F& fld, const JordanModule& mod, const Unit& t) {
  auto g = galois_matrix(fld, mod.dim, t);
  if (mod.twist == 0) return g;
  auto scalar = field_pow(fld, galois_unit_in_field(fld, t), mod.twist);
  return g.scale(scalar);
}

// --- Structure maps --------------------------------------------------------

// L_{a-1} -> L_a, the coordinate inclusion on the first a-1 basis vectors.
template <class F>
ModuleMap<F> ses_inclusion(const F& fld, unsigned a) {
  if (a < 2) throw std::invalid_argument("ses_inclusion: need dimension >= 2");
  Matrix<F> m(fld, a, a - 1);
  for (unsigned i = 0; i + 1 < a; ++i) m.at(i, i) = fld.one();
  return {{JordanModule{a - 1, 0}}, JordanModule{a, 0}, m};
}

// Composite inclusion L_a -> L_b for a <= b.
template <class F>
Matrix<F> inclusion_matrix(const F& fld, unsigned a, unsigned b) {
  if (a > b) throw std::invalid_argument("inclusion_matrix: need a <= b");
  Matrix<F> m(fld, b, a);
  for (unsigned i = 0; i < a; ++i) m.at(i, i) = fld.one();
  return m;
}

// Quotient onto the top coordinate: L_a ->> L_1(-a+1).
template <class F>
ModuleMap<F> top_quotient(const F& fld, unsigned a) {
  Matrix<F> m(fld, 1, a);
  m.at(0, a - 1) = fld.one();
  return {{JordanModule{a, 0}}, JordanModule{1, -static_cast<int>(a) + 1}, m};
}

// Multiplication L_a (x) L_b -> L_{a+b-1}:
//   phi_r (x) phi_s |-> sum_i (-1)^i (r+s-i)!/((r-i)!(s-i)!i!) phi_{r+s-i}.
// Columns are indexed by (r, s) -> r*b + s.
template <class F>
ModuleMap<F> mult_map(const F& fld, unsigned a, unsigned b) {
  if (a < 1 || b < 1) throw std::invalid_argument("mult_map: dimensions must be >= 1");
  Matrix<F> m(fld, a + b - 1, a * b);
  for (unsigned r = 0; r < a; ++r)
    for (unsigned s = 0; s < b; ++s)
      for (unsigned i = 0; i <= std::min(r, s); ++i) {
        Int val = factorial(r + s - i) / (factorial(r - i) * factorial(s - i) * factorial(i));
        if (i % 2) val = -val;
        m.at(r + s - i, r * b + s) = fld.from_int(val);
      }
  return {{JordanModule{a, 0}, JordanModule{b, 0}}, JordanModule{a + b - 1, 0}, m};
}

// Oracle route: sample phi_r(m)*phi_s(m) at m = 0..a+b-2 and solve.
template <class F>
Matrix<F> mult_map_via_evaluation(const F& fld, unsigned a, unsigned b) {
  unsigned c = a + b - 1;
  Matrix<F> samples(fld, c, a * b);
  for (unsigned m = 0; m < c; ++m)
    for (unsigned r = 0; r < a; ++r)
      for (unsigned s = 0; s < b; ++s) {
        Int val = delta_eval_int(r, Int(m)) * delta_eval_int(s, Int(m));
        if ((r + s) % 2) val = -val;
        samples.at(m, r * b + s) = fld.from_int(val);
      }
  return evaluation_matrix(fld, c).inverse().mul(samples);
}

// Left-nested iterated multiplication (x)_i L_{a_i} -> L_{sum a_i - k + 1}.
template <class F>
ModuleMap<F> iterated_mult(const F& fld, const std::vector<unsigned>& dims) {
  if (dims.empty()) throw std::invalid_argument("iterated_mult: empty dimension list");
  unsigned cur = dims[0];
  Matrix<F> m = Matrix<F>::identity(fld, cur);
  for (std::size_t i = 1; i < dims.size(); ++i) {
    unsigned b = dims[i];
    m = mult_map(fld, cur, b).matrix.mul(m.kron(Matrix<F>::identity(fld, b)));
    cur = cur + b - 1;
  }
  std::vector<JordanModule> srcs;
  for (unsigned d : dims) srcs.push_back({d, 0});
  return {srcs, JordanModule{cur, 0}, m};
}

// Right-nested variant; bracketing independence is a tested property.
template <class F>
Matrix<F> iterated_mult_right(const F& fld, const std::vector<unsigned>& dims) {
  if (dims.empty()) throw std::invalid_argument("iterated_mult_right: empty dimension list");
  unsigned cur = dims.back();
  Matrix<F> m = Matrix<F>::identity(fld, cur);
  for (std::size_t i = dims.size() - 1; i-- > 0;) {
    unsigned a = dims[i];
    m = mult_map(fld, a, cur).matrix.mul(Matrix<F>::identity(fld, a).kron(m));
    cur = a + cur - 1;
  }
  return m;
}

// --- Characteristic-zero structure (nu basis) -------------------------------
//
// nu_r(n) = n^r / r!; requires division by r!, hence characteristic 0.

template <class F>
void require_char_zero(const F& fld, const char* what) {
  if (fld.characteristic() != 0) throw std::domain_error(std::string(what) + ": requires characteristic 0");
}

// Matrix expressing nu_r in the phi basis, by evaluation at n = 0..a-1.
template <class F>
Matrix<F> nu_basis_change(const F& fld, unsigned a) {
  require_char_zero(fld, "nu_basis_change");
  Matrix<F> samples(fld, a, a);
  for (unsigned m = 0; m < a; ++m)
    for (unsigned r = 0; r < a; ++r)
      samples.at(m, r) = fld.div(fld.from_int(pow_int(Int(m), r)), fld.from_int(factorial(r)));
  return evaluation_matrix(fld, a).inverse().mul(samples);
}

// Nilpotent shift nu_r |-> nu_{r-1}.
template <class F>
Matrix<F> nu_shift(const F& fld, unsigned a) {
  Matrix<F> s(fld, a, a);
  for (unsigned r = 1; r < a; ++r) s.at(r - 1, r) = fld.one();
  return s;
}

// exp(-n*S) as a finite sum; entry (r-j, r) = (-n)^j / j!.
template <class F>
Matrix<F> exp_of_shift(const F& fld, unsigned a, const Int& n) {
  Matrix<F> e(fld, a, a);
  for (unsigned r = 0; r < a; ++r)
    for (unsigned j = 0; j <= r; ++j) {
      Int num = pow_int(-n, j);
      e.at(r - j, r) = fld.div(fld.from_int(num), fld.from_int(factorial(j)));
    }
  return e;
}

// The action of n*g, read in the nu basis, equals exp(-n*S).
template <class F>
bool exp_structure_check(const F& fld, unsigned a, const Int& n) {
  require_char_zero(fld, "exp_structure_check");
  Matrix<F> nu = nu_basis_change(fld, a);
  Matrix<F> lhs = nu.inverse().mul(monodromy_matrix(fld, a, n)).mul(nu);
  return lhs.eq(exp_of_shift(fld, a, n));
}

// a-fold differentiation L_b -> L_{b-a}(-a): nu_r |-> nu_{r-a}.
template <class F>
ModuleMap<F> partial_quotient_map(const F& fld, unsigned a, unsigned b) {
  require_char_zero(fld, "partial_quotient_map");
  if (a < 1 || a >= b) throw std::invalid_argument("partial_quotient_map: need 1 <= a < b");
  Matrix<F> dnu(fld, b - a, b);
  for (unsigned r = a; r < b; ++r) dnu.at(r - a, r) = fld.one();
  Matrix<F> m = nu_basis_change(fld, b - a).mul(dnu).mul(nu_basis_change(fld, b).inverse());
  return {{JordanModule{b, 0}}, JordanModule{b - a, -static_cast<int>(a)}, m};
}

// The F_2 witness that the Galois action on L_3 is not semisimple: for a
// prime p = 3 (mod 4), the matrix of Frobenius (t = p^{-1}) is the
// non-diagonalizable upper unitriangular block.
inline Matrix<PrimeField> nonsemisimple_witness(long long p) {
  if (!is_prime(p) || p % 4 != 3)
    throw std::invalid_argument("nonsemisimple_witness: need a prime p = 3 (mod 4)");
  PrimeField f2(2);
  ResidueElem t = invert_unit(to_int(p), 2, residue_precision_for(3, 2));
  Matrix<PrimeField> g = galois_matrix(f2, 3, t);
  Matrix<PrimeField> expected(f2, 3, 3);
  for (unsigned i = 0; i < 3; ++i) expected.at(i, i) = f2.one();
  expected.at(1, 2) = f2.one();
  if (!g.eq(expected)) throw std::logic_error("nonsemisimple_witness: unexpected matrix");
  if (g.is_identity() || !g.mul(g).is_identity())
    throw std::logic_error("nonsemisimple_witness: matrix is not a non-trivial involution");
  return g;
}

}  // namespace monocal
