#include <catch2/catch_amalgamated.hpp>

#include "monocal/fields.hpp"
#include "monocal/rng.hpp"

using namespace monocal;

TEST_CASE("rational arithmetic is exact and reduced") {
  RationalField q;
  CHECK(q.add(Rat(1, 2), Rat(1, 3)) == Rat(5, 6));
  CHECK(q.div(Rat(1), Rat(3)) == Rat(1, 3));
  CHECK_THROWS_AS(q.div(Rat(1), Rat(0)), std::domain_error);

  Rat x = make_rat(Int(4), Int(-6));
  CHECK(x.get_num() == -2);
  CHECK(x.get_den() == 3);
  CHECK(rat_str(x) == "-2/3");
  CHECK(rat_str(Rat(7)) == "7");
  CHECK(rat_from_str("-2/3") == x);
}

TEST_CASE("prime field arithmetic") {
  PrimeField f2(2);
  CHECK(f2.add(f2.one(), f2.one()).value == 0);
  PrimeField f5(5);
  CHECK(f5.mul(f5.from_int(Int(3)), f5.from_int(Int(4))).value == 2);
  CHECK(f5.inv(f5.from_int(Int(3))).value == 2);  // 3*2 = 6 = 1
  CHECK_THROWS_AS(f5.inv(f5.zero()), std::domain_error);
  CHECK_THROWS_AS(PrimeField(6), std::invalid_argument);

  PrimeField f3(3);
  CHECK_THROWS_AS(f5.add(f5.one(), f3.one()), std::invalid_argument);
}

TEST_CASE("residue rings and unit inversion") {
  ResidueRing r8(2, 3);
  CHECK(r8.mul(r8.from_int(Int(5)), r8.from_int(Int(3))).value == 7);  // 15 mod 8

  CHECK(invert_unit(Int(3), 2, 3).value == 3);  // 9 = 1 mod 8
  CHECK(invert_unit(Int(5), 3, 2).value == 2);  // brute force below confirms
  CHECK_THROWS_AS(invert_unit(Int(2), 2, 3), std::domain_error);

  // brute-force oracle for 5^{-1} mod 9
  long long found = -1;
  for (long long v = 0; v < 9; ++v)
    if (5 * v % 9 == 1) found = v;
  CHECK(found == 2);

  // u * invert_unit(u) = 1 for every unit in small rings
  for (auto [ell, n] : {std::pair<long long, unsigned>{2, 4}, {3, 3}, {5, 2}, {7, 1}}) {
    ResidueRing ring(ell, n);
    for (long long u = 1; u < ring.modulus; ++u) {
      if (u % ell == 0) continue;
      auto inv = invert_unit(to_int(u), ell, n);
      CHECK(ring.mul(ring.from_int(to_int(u)), inv).value == 1);
    }
  }
}

TEST_CASE("field axioms hold on random samples") {
  Rng rng(2024);
  RationalField q;
  for (int i = 0; i < 200; ++i) {
    Rat a(rng.range(-20, 20), 1 + rng.below(9));
    Rat b(rng.range(-20, 20), 1 + rng.below(9));
    Rat c(rng.range(-20, 20), 1 + rng.below(9));
    a.canonicalize();
    b.canonicalize();
    c.canonicalize();
    CHECK(q.add(q.add(a, b), c) == q.add(a, q.add(b, c)));
    CHECK(q.mul(q.mul(a, b), c) == q.mul(a, q.mul(b, c)));
    CHECK(q.mul(a, q.add(b, c)) == q.add(q.mul(a, b), q.mul(a, c)));
    if (a != 0) CHECK(q.mul(a, q.inv(a)) == Rat(1));
    // results reduced
    Rat s = q.mul(a, b);
    CHECK(gcd(s.get_num(), s.get_den()) == 1);
    CHECK(s.get_den() > 0);
  }
  for (long long p : {2LL, 3LL, 5LL, 7LL}) {
    PrimeField f(p);
    for (int i = 0; i < 100; ++i) {
      auto a = f.from_int(to_int(rng.range(-50, 50)));
      auto b = f.from_int(to_int(rng.range(-50, 50)));
      auto c = f.from_int(to_int(rng.range(-50, 50)));
      CHECK(f.eq(f.add(f.add(a, b), c), f.add(a, f.add(b, c))));
      CHECK(f.eq(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c))));
      if (!f.is_zero(a)) CHECK(f.eq(f.mul(a, f.inv(a)), f.one()));
    }
  }
}
