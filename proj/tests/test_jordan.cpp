#include <catch2/catch_amalgamated.hpp>

#include "monocal/jordan.hpp"

using namespace monocal;

namespace {

Matrix<RationalField> qmat(const std::vector<std::vector<Rat>>& rows) {
  RationalField q;
  Matrix<RationalField> m(q, rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("monodromy matrices") {
  RationalField q;
  CHECK(monodromy_matrix(q, 2, Int(-1)).eq(qmat({{1, -1}, {0, 1}})));
  CHECK(monodromy_matrix(q, 3, Int(0)).is_identity());

  // frozen from the evaluation oracle: sample m -> (-1)^r C(m-2, r) at
  // m = 0, 1, 2 and solve against [phi_r(m)]
  auto expected = qmat({{1, 2, 3}, {0, 1, 2}, {0, 0, 1}});
  CHECK(monodromy_matrix(q, 3, Int(2)).eq(expected));
  CHECK(monodromy_matrix_via_evaluation(q, 3, Int(2)).eq(expected));
  CHECK(monodromy_matrix_via_power(q, 3, 2).eq(expected));

  PrimeField f3(3);
  for (int n = -4; n <= 4; ++n)
    CHECK(monodromy_matrix(f3, 4, Int(n)).eq(monodromy_matrix_via_evaluation(f3, 4, Int(n))));
}

TEST_CASE("galois matrices over Q") {
  RationalField q;
  CHECK(galois_matrix(q, 3, Rat(1)).is_identity());
  CHECK(galois_matrix(q, 2, Rat(1, 2)).eq(qmat({{1, 0}, {0, Rat(1, 2)}})));
  CHECK_THROWS_AS(galois_matrix(q, 3, Rat(0)), std::domain_error);

  // c_2^1(t) lands in the (1,2) slot with sign (-1)^{1+2}
  auto g = galois_matrix(q, 3, Rat(3));
  CHECK(g.at(1, 2) == Rat(-3));
  CHECK(g.at(2, 2) == Rat(9));

  for (const Rat& t : {Rat(2), Rat(1, 2), Rat(-3), Rat(5, 7)})
    for (unsigned a = 1; a <= 5; ++a) CHECK(galois_matrix(q, a, t).eq(galois_matrix_via_evaluation(q, a, t)));
}

TEST_CASE("galois matrices over F_ell via integer lifts") {
  PrimeField f2(2);
  ResidueRing r8(2, 3);
  auto g = galois_matrix(f2, 3, r8.from_int(Int(3)));
  // t = 3 mod 8: c_1^1(3) = 3 = 1, c_2^1(3) = 3 = 1, c_2^2(3) = 9 = 1 (mod 2)
  Matrix<PrimeField> expected(f2, 3, 3);
  for (unsigned i = 0; i < 3; ++i) expected.at(i, i) = f2.one();
  expected.at(1, 2) = f2.one();
  CHECK(g.eq(expected));
  CHECK(g.eq(galois_matrix_via_evaluation(f2, 3, r8.from_int(Int(3)))));

  // insufficient precision is rejected: dimension 3 needs ell^k > 2
  ResidueRing r2(2, 1);
  CHECK_THROWS_AS(galois_matrix(f2, 3, r2.from_int(Int(1))), std::invalid_argument);
  // non-units are rejected
  CHECK_THROWS_AS(galois_matrix(f2, 3, r8.from_int(Int(4))), std::domain_error);

  PrimeField f5(5);
  ResidueRing r25(5, 2);
  for (long v : {1L, 2L, 3L, 7L})
    CHECK(galois_matrix(f5, 5, r25.from_int(Int(v))).eq(galois_matrix_via_evaluation(f5, 5, r25.from_int(Int(v)))));
}

TEST_CASE("change of generator") {
  RationalField q;
  CHECK(change_of_generator_matrix(q, 4, Rat(1)).is_identity());
  auto m = change_of_generator_matrix(q, 3, Rat(3));
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(1, 1) == 3);
  CHECK(m.at(2, 2) == 9);
  CHECK(m.at(1, 2) == -3);
  CHECK(m.mul(m.inverse()).is_identity());
  for (long u : {2L, 3L, 5L})
    for (long v : {2L, 3L, 5L})
      CHECK(change_of_generator_matrix(q, 4, Rat(u)).mul(change_of_generator_matrix(q, 4, Rat(v)))
                .eq(change_of_generator_matrix(q, 4, Rat(u * v))));
}

TEST_CASE("short exact sequence maps") {
  RationalField q;
  auto incl = ses_inclusion(q, 2);
  CHECK(incl.matrix.rows() == 2);
  CHECK(incl.matrix.cols() == 1);
  CHECK(incl.matrix.at(0, 0) == 1);
  CHECK(incl.matrix.at(1, 0) == 0);
  CHECK_THROWS_AS(ses_inclusion(q, 1), std::invalid_argument);

  for (unsigned a = 2; a <= 5; ++a) {
    auto i = ses_inclusion(q, a).matrix;
    for (int n = -3; n <= 3; ++n)
      CHECK(monodromy_matrix(q, a, Int(n)).mul(i).eq(i.mul(monodromy_matrix(q, a - 1, Int(n)))));
    // the quotient scalar is t^{a-1}
    auto g = galois_matrix(q, a, Rat(1, 2));
    CHECK(g.at(a - 1, a - 1) == pow_rat(Rat(1, 2), static_cast<long>(a) - 1));
  }
}

TEST_CASE("multiplication maps") {
  RationalField q;
  // a = 1 tensor factor is the unit
  CHECK(mult_map(q, 1, 4).matrix.is_identity());
  CHECK(mult_map(q, 4, 1).matrix.is_identity());

  // phi_1 (x) phi_1 |-> 2 phi_2 - phi_1 (column (1,1) of the 2x2 case)
  auto m22 = mult_map(q, 2, 2).matrix;
  CHECK(m22.rows() == 3);
  CHECK(m22.cols() == 4);
  CHECK(m22.at(0, 3) == 0);
  CHECK(m22.at(1, 3) == -1);
  CHECK(m22.at(2, 3) == 2);
  CHECK(m22.eq(mult_map_via_evaluation(q, 2, 2)));

  for (unsigned a = 1; a <= 6; ++a)
    for (unsigned b = 1; b <= 6; ++b) CHECK(mult_map(q, a, b).matrix.rank() >= std::max(a, b));

  PrimeField f2(2);
  for (unsigned a = 1; a <= 6; ++a)
    for (unsigned b = 1; b <= 6; ++b) CHECK(mult_map(f2, a, b).matrix.rank() >= std::max(a, b));
}

TEST_CASE("iterated multiplication") {
  RationalField q;
  CHECK(iterated_mult(q, {3}).matrix.is_identity());
  CHECK(iterated_mult(q, {1, 1, 1, 1}).matrix.is_identity());
  CHECK_THROWS_AS(iterated_mult(q, {}), std::invalid_argument);

  // bracketing independence into L_4
  auto left = iterated_mult(q, {2, 2, 2}).matrix;
  CHECK(left.rows() == 4);
  CHECK(left.eq(iterated_mult_right(q, {2, 2, 2})));
}

TEST_CASE("nu basis in characteristic zero") {
  RationalField q;
  CHECK(nu_basis_change(q, 1).is_identity());
  // nu_1(n) = n while phi_1(n) = -n
  CHECK(nu_basis_change(q, 2).eq(qmat({{1, 0}, {0, -1}})));
  for (unsigned a = 1; a <= 6; ++a) {
    auto n = nu_basis_change(q, a);
    CHECK(n.mul(n.inverse()).is_identity());
  }
  PrimeField f3(3);
  CHECK_THROWS_AS(nu_basis_change(f3, 2), std::domain_error);
}

TEST_CASE("exponential form of the monodromy") {
  RationalField q;
  CHECK(exp_structure_check(q, 3, Int(1)));
  CHECK(exp_structure_check(q, 4, Int(0)));
  CHECK(exp_structure_check(q, 4, Int(-2)));
  // the column formula (g.nu_r)(mg) = (m-1)^r / r!
  auto nu = nu_basis_change(q, 3);
  auto g_in_nu = nu.inverse().mul(monodromy_matrix(q, 3, Int(1))).mul(nu);
  for (unsigned r = 0; r < 3; ++r)
    for (unsigned m = 0; m < 3; ++m) {
      Rat sampled(0);
      for (unsigned j = 0; j < 3; ++j)
        sampled += g_in_nu.at(j, r) * Rat(pow_int(Int(m), j)) / Rat(factorial(j));
      CHECK(sampled == Rat(pow_int(Int(m) - 1, r)) / Rat(factorial(r)));
    }
}

TEST_CASE("partial quotient maps") {
  RationalField q;
  auto d = partial_quotient_map(q, 1, 2);
  CHECK(d.target.twist == -1);
  // in the nu basis this is the shift nu_1 -> nu_0
  auto dnu = nu_basis_change(q, 1).inverse().mul(d.matrix).mul(nu_basis_change(q, 2));
  CHECK(dnu.at(0, 0) == 0);
  CHECK(dnu.at(0, 1) == 1);

  for (unsigned b = 2; b <= 5; ++b)
    for (unsigned a = 1; a < b; ++a) {
      auto pd = partial_quotient_map(q, a, b).matrix;
      CHECK(pd.mul(inclusion_matrix(q, a, b)).is_zero());
      CHECK(pd.rank() == b - a);
      for (const Rat& t : {Rat(2), Rat(1, 3)})
        CHECK(pd.mul(galois_matrix(q, b, t)).eq(galois_matrix(q, b - a, t).mul(pd).scale(pow_rat(t, a))));
    }
  CHECK_THROWS_AS(partial_quotient_map(q, 2, 2), std::invalid_argument);
  PrimeField f2(2);
  CHECK_THROWS_AS(partial_quotient_map(f2, 1, 2), std::domain_error);
}

TEST_CASE("non-semisimplicity witness") {
  PrimeField f2(2);
  Matrix<PrimeField> expected(f2, 3, 3);
  for (unsigned i = 0; i < 3; ++i) expected.at(i, i) = f2.one();
  expected.at(1, 2) = f2.one();
  CHECK(nonsemisimple_witness(3).eq(expected));
  CHECK(nonsemisimple_witness(7).eq(expected));
  CHECK_THROWS_AS(nonsemisimple_witness(5), std::invalid_argument);
  CHECK_THROWS_AS(nonsemisimple_witness(9), std::invalid_argument);
}

TEST_CASE("twisted galois action") {
  RationalField q;
  JordanModule twisted{2, -3};
  auto g = twisted_galois_matrix(q, twisted, Rat(2));
  CHECK(g.eq(galois_matrix(q, 2, Rat(2)).scale(Rat(1, 8))));
}
