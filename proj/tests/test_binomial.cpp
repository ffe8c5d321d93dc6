#include <catch2/catch_amalgamated.hpp>

#include "monocal/binomial.hpp"
#include "monocal/rng.hpp"

using namespace monocal;

TEST_CASE("delta evaluation") {
  CHECK(delta_eval_int(0, Int(17)) == 1);
  CHECK(delta_eval_int(2, Int(5)) == 10);
  // rational-formula oracle at n = -1: (-1)(-2)(-3)/6 = -1
  CHECK(delta_eval_rat(3, Rat(-1)) == Rat(-1));
  CHECK(delta_eval_int(3, Int(-1)) == -1);

  RationalField q;
  CHECK(delta_eval(q, 4, Rat(7, 2)) == delta_eval_rat(4, Rat(7, 2)));

  PrimeField f3(3);
  // r < ell: the in-field formula agrees with the reduced integer binomial
  for (long n = 0; n < 9; ++n)
    CHECK(delta_eval(f3, 2, f3.from_int(Int(n))).value == mod_floor(delta_eval_int(2, Int(n)), 3));
  // r >= ell requires the integer-binomial path
  CHECK_THROWS_AS(delta_eval(f3, 3, f3.one()), std::domain_error);
}

TEST_CASE("delta products") {
  // oracle: x^2 = 2*delta_2 + delta_1, from the monomial conversion
  BinomialPoly x2 = BinomialPoly::from_monomial({Rat(0), Rat(0), Rat(1)});
  CHECK(x2.coeffs() == std::vector<Rat>{Rat(0), Rat(1), Rat(2)});
  CHECK(delta_product(1, 1).coeffs() == x2.coeffs());

  CHECK(delta_product(0, 7).eq(BinomialPoly::delta(7)));

  // delta_2 * delta_1 = 3 delta_3 + 2 delta_2, cross-checked by evaluation
  BinomialPoly p = delta_product(2, 1);
  CHECK(p.coeffs() == std::vector<Rat>{Rat(0), Rat(0), Rat(2), Rat(3)});
  for (long n = 0; n <= 5; ++n)
    CHECK(p.eval_int(Int(n)) == Rat(delta_eval_int(2, Int(n)) * delta_eval_int(1, Int(n))));
}

TEST_CASE("monomial/delta conversions round-trip") {
  Rng rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rat> coeffs(1 + rng.below(7));
    for (auto& c : coeffs) c = Rat(rng.range(-9, 9), 1 + rng.below(4));
    for (auto& c : coeffs) c.canonicalize();
    BinomialPoly p(coeffs);
    BinomialPoly q = BinomialPoly::from_monomial(p.to_monomial());
    CHECK(p.eq(q));
    for (long n = -3; n <= 6; ++n) CHECK(p.eval(Rat(n)) == p.eval_int(Int(n)));
  }
}

TEST_CASE("rescaling rows, basis route") {
  auto r0 = rescale_coeffs_basis(0);
  REQUIRE(r0.size() == 1);
  CHECK(r0[0].eq(PolyQ::constant(Rat(1))));

  auto r1 = rescale_coeffs_basis(1);
  CHECK(r1[0].is_zero());
  CHECK(r1[1].eq(PolyQ::t_power(1)));

  auto r2 = rescale_coeffs_basis(2);
  CHECK(r2[0].is_zero());
  CHECK(r2[1].eq(PolyQ({Rat(0), Rat(-1, 2), Rat(1, 2)})));  // (t^2 - t)/2
  CHECK(r2[2].eq(PolyQ::t_power(2)));
}

TEST_CASE("rescaling rows, recursive route") {
  CHECK(rescale_coeffs_recursive(0, 12) == std::vector<Int>{Int(1)});
  CHECK(rescale_coeffs_recursive(2, 3) == std::vector<Int>{Int(0), Int(3), Int(9)});
  for (unsigned r = 1; r <= 6; ++r) {
    auto row = rescale_coeffs_recursive(r, 0);
    for (const auto& v : row) CHECK(v == 0);
  }
}

TEST_CASE("the two rescaling routes agree") {
  RescaleTable table = RescaleTable::build(8);
  for (unsigned long m = 0; m <= 12; ++m) {
    auto tri = rescale_triangle_at(8, m);
    for (unsigned r = 0; r <= 8; ++r)
      for (unsigned j = 0; j <= r; ++j) CHECK(table.eval(r, j, Rat(static_cast<long>(m))) == Rat(tri[r][j]));
  }
}

TEST_CASE("delta_r(tx) expansion identity") {
  // the defining identity, sampled: delta_r(t*x) = sum_j c_r^j(t) delta_j(x)
  RescaleTable table = RescaleTable::build(5);
  for (long t = 0; t <= 6; ++t)
    for (long x = -2; x <= 6; ++x)
      for (unsigned r = 0; r <= 5; ++r) {
        Rat lhs(delta_eval_int(r, Int(t * x)));
        Rat rhs(0);
        for (unsigned j = 0; j <= r; ++j) rhs += table.eval(r, j, Rat(t)) * Rat(delta_eval_int(j, Int(x)));
        CHECK(lhs == rhs);
      }
}

TEST_CASE("Z-closedness certificates") {
  CHECK(is_z_closed(BinomialPoly::delta(3), 20));
  CHECK_FALSE(is_z_closed(BinomialPoly::from_monomial({Rat(0), Rat(1, 2)}), 20));
  CHECK(is_z_closed(BinomialPoly::from_monomial({Rat(0), Rat(-1, 2), Rat(1, 2)}), 50));
  CHECK_THROWS_AS(is_z_closed(BinomialPoly::delta(1), 0), std::invalid_argument);

  // integer delta-coordinates characterize Z-closedness
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Rat> coords(1 + rng.below(6));
    for (auto& c : coords) {
      c = Rat(rng.range(-5, 5));
      if (rng.chance(1, 3)) c += Rat(1, 2 + static_cast<long>(rng.below(4)));
      c.canonicalize();
    }
    BinomialPoly p(coords);
    CHECK(is_z_closed(p, 10) == p.has_integer_delta_coords());
  }
}

TEST_CASE("binomial poly multiplication matches pointwise products") {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rat> ca(1 + rng.below(4)), cb(1 + rng.below(4));
    for (auto& c : ca) c = Rat(rng.range(-4, 4));
    for (auto& c : cb) c = Rat(rng.range(-4, 4));
    BinomialPoly a(ca), b(cb), ab = mul(a, b);
    for (long n = 0; n <= 8; ++n) CHECK(ab.eval_int(Int(n)) == a.eval_int(Int(n)) * b.eval_int(Int(n)));
  }
}
