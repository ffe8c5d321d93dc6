#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "monocal/numeric.hpp"

namespace monocal {

// Coefficient fields: exact rationals and prime fields F_ell.  A field object
// carries the modulus (if any) and builds/combines elements; elements of F_ell
// also carry their modulus so that mixed-modulus operands are rejected.

struct RationalField {
  using Elem = Rat;

  static long long characteristic() { return 0; }

  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  Elem from_int(const Int& n) const { return Rat(n); }
  Elem from_rat(const Rat& q) const { return q; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("rational inverse of zero");
    return Rat(1) / a;
  }
  Elem div(const Elem& a, const Elem& b) const {
    if (b == 0) throw std::domain_error("rational division by zero");
    return a / b;
  }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::string str(const Elem& a) const { return rat_str(a); }

  bool operator==(const RationalField&) const { return true; }
};

struct PrimeFieldElem {
  long long value = 0;  // reduced representative in [0, p)
  long long p = 0;
};

struct PrimeField {
  long long p;

  explicit PrimeField(long long prime) : p(prime) {
    if (!is_prime(prime)) throw std::invalid_argument("PrimeField: modulus " + std::to_string(prime) + " is not prime");
  }

  using Elem = PrimeFieldElem;

  long long characteristic() const { return p; }

  Elem zero() const { return {0, p}; }
  Elem one() const { return {1 % p, p}; }
  Elem from_int(const Int& n) const { return {mod_floor(n, p), p}; }

  void check(const Elem& a) const {
    if (a.p != p) throw std::invalid_argument("mixed-field operands: F_" + std::to_string(a.p) + " vs F_" + std::to_string(p));
  }

  Elem add(const Elem& a, const Elem& b) const {
    check(a);
    check(b);
    return {(a.value + b.value) % p, p};
  }
  Elem sub(const Elem& a, const Elem& b) const {
    check(a);
    check(b);
    return {((a.value - b.value) % p + p) % p, p};
  }
  Elem mul(const Elem& a, const Elem& b) const {
    check(a);
    check(b);
    return {static_cast<long long>((__int128)a.value * b.value % p), p};
  }
  Elem neg(const Elem& a) const {
    check(a);
    return {(p - a.value) % p, p};
  }
  Elem inv(const Elem& a) const {
    check(a);
    if (a.value == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(p));
    // Fermat: a^(p-2)
    long long r = 1, b = a.value, e = p - 2;
    while (e > 0) {
      if (e & 1) r = static_cast<long long>((__int128)r * b % p);
      b = static_cast<long long>((__int128)b * b % p);
      e >>= 1;
    }
    return {r, p};
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  bool is_zero(const Elem& a) const {
    check(a);
    return a.value == 0;
  }
  bool eq(const Elem& a, const Elem& b) const {
    check(a);
    check(b);
    return a.value == b.value;
  }
  std::string str(const Elem& a) const { return std::to_string(a.value) + " mod " + std::to_string(p); }

  bool operator==(const PrimeField& o) const { return p == o.p; }
};

// Truncated residue ring Z/ell^N.  Not a field: used for l-adic units
// (Galois parameters, invert_unit) and continuity tests.
struct ResidueElem {
  long long value = 0;  // in [0, ell^n)
  long long ell = 0;
  unsigned exponent = 1;

  long long modulus() const {
    long long m = 1;
    for (unsigned i = 0; i < exponent; ++i) m *= ell;
    return m;
  }
};

struct ResidueRing {
  long long ell;
  unsigned exponent;
  long long modulus;

  ResidueRing(long long prime, unsigned n) : ell(prime), exponent(n) {
    if (!is_prime(prime)) throw std::invalid_argument("ResidueRing: " + std::to_string(prime) + " is not prime");
    if (n < 1) throw std::invalid_argument("ResidueRing: exponent must be >= 1");
    modulus = 1;
    for (unsigned i = 0; i < n; ++i) {
      if (modulus > (1LL << 60) / prime) throw std::overflow_error("ResidueRing: modulus too large");
      modulus *= prime;
    }
  }

  ResidueElem from_int(const Int& n) const { return {mod_floor(n, modulus), ell, exponent}; }

  void check(const ResidueElem& a) const {
    if (a.ell != ell || a.exponent != exponent)
      throw std::invalid_argument("mixed residue rings: Z/" + std::to_string(a.modulus()) + " vs Z/" + std::to_string(modulus));
  }

  ResidueElem add(const ResidueElem& a, const ResidueElem& b) const {
    check(a);
    check(b);
    return {(a.value + b.value) % modulus, ell, exponent};
  }
  ResidueElem sub(const ResidueElem& a, const ResidueElem& b) const {
    check(a);
    check(b);
    return {((a.value - b.value) % modulus + modulus) % modulus, ell, exponent};
  }
  ResidueElem mul(const ResidueElem& a, const ResidueElem& b) const {
    check(a);
    check(b);
    return {static_cast<long long>((__int128)a.value * b.value % modulus), ell, exponent};
  }
  bool is_unit(const ResidueElem& a) const {
    check(a);
    return a.value % ell != 0;
  }
  std::string str(const ResidueElem& a) const { return std::to_string(a.value) + " mod " + std::to_string(modulus); }
};

// v with u*v == 1 mod ell^N.  Throws if gcd(u, ell) != 1.
inline ResidueElem invert_unit(const Int& u, long long ell, unsigned n) {
  ResidueRing ring(ell, n);
  Int m = to_int(ring.modulus);
  Int g, inv;
  mpz_gcdext(g.get_mpz_t(), inv.get_mpz_t(), nullptr, to_int(mod_floor(u, ring.modulus)).get_mpz_t(), m.get_mpz_t());
  if (g != 1) throw std::domain_error("invert_unit: " + u.get_str() + " is not a unit mod " + std::to_string(ring.modulus));
  return ring.from_int(inv);
}

using CoeffField = std::variant<RationalField, PrimeField>;

inline long long characteristic(const CoeffField& f) {
  return std::visit([](const auto& fld) -> long long { return fld.characteristic(); }, f);
}

}  // namespace monocal
