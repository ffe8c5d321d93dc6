#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace monocal {

using Int = mpz_class;
using Rat = mpq_class;

// gmpxx has no long long constructor on LP64; everything we build from a
// long long fits in a long here.
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// Generalized binomial coefficient: top may be any integer (also negative).
inline Int binomial(const Int& n, unsigned long k) {
  Int r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat pow_rat(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (e < 0) {
    if (base == 0) throw std::domain_error("pow_rat: zero base, negative exponent");
    return pow_rat(Rat(base.get_den(), base.get_num()), -e);
  }
  Rat r(1);
  Rat b = base;
  unsigned long k = static_cast<unsigned long>(e);
  while (k > 0) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// "p" for integers, "p/q" otherwise.
inline std::string rat_str(const Rat& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat rat_from_str(const std::string& s) {
  Rat q(s);
  q.canonicalize();
  return q;
}

inline bool is_prime(long long n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(to_int(n).get_mpz_t(), 40) != 0;
}

// Floored residue in [0, m).
inline long long mod_floor(const Int& v, long long m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), to_int(m).get_mpz_t());
  return r.get_si();
}

}  // namespace monocal
