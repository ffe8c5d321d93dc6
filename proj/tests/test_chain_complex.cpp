#include <catch2/catch_amalgamated.hpp>

#include "monocal/chain_complex.hpp"
#include "monocal/serialize.hpp"

using namespace monocal;

namespace {

IntMat m1x1(long v) {
  IntMat m(1, 1);
  m.at(0, 0) = v;
  return m;
}

// Z --v--> Z in degrees (lo, lo+1)
IntChainComplex two_term(long v, int lo = 0) { return IntChainComplex(lo, {1, 1}, {m1x1(v)}); }

}  // namespace

TEST_CASE("complex validation") {
  CHECK_THROWS_AS(IntChainComplex(0, {1, 1}, {}), std::invalid_argument);
  // d.d != 0 is rejected
  IntMat d0 = m1x1(1), d1 = m1x1(1);
  CHECK_THROWS_AS(IntChainComplex(0, {1, 1, 1}, {d0, d1}), std::invalid_argument);
  // and accepted when the composite vanishes
  IntChainComplex ok(0, {1, 1, 1}, {m1x1(2), m1x1(0)});
  CHECK(ok.hi() == 2);
  CHECK(ok.rank_at(5) == 0);
}

TEST_CASE("cohomology of pinned complexes") {
  // Z --2--> Z: H^0 = 0, H^1 = Z/2
  auto c = two_term(2);
  CHECK(cohomology(c, 0).trivial());
  auto h1 = cohomology(c, 1);
  CHECK(h1.torsion == std::vector<Int>{Int(2)});
  CHECK(h1.free_rank == 0);
  CHECK(h1.str() == "Z/2");

  // zero differentials: free of the given ranks
  IntChainComplex z(0, {2, 3}, {IntMat(3, 2)});
  CHECK(cohomology(z, 0).free_rank == 2);
  CHECK(cohomology(z, 1).free_rank == 3);

  // acyclic
  auto a = two_term(1);
  CHECK(cohomology(a, 0).trivial());
  CHECK(cohomology(a, 1).trivial());
}

TEST_CASE("chain map validation") {
  auto c = two_term(2);
  // f multiplies by (1, 2): 2*1 != 2*... the square needs 2*f0 = f1*2
  std::map<int, IntMat> good{{0, m1x1(3)}, {1, m1x1(3)}};
  CHECK_NOTHROW(ChainMap(c, c, good));
  std::map<int, IntMat> bad{{0, m1x1(1)}, {1, m1x1(2)}};
  CHECK_THROWS_AS(ChainMap(c, c, bad), std::invalid_argument);
}

TEST_CASE("induced maps on cohomology") {
  // identity induces the identity
  auto c = two_term(2);
  std::map<int, IntMat> idc{{0, m1x1(1)}, {1, m1x1(1)}};
  ChainMap id(c, c, idc);
  auto w = induced_cohomology_map(id, 1);
  REQUIRE(w.matrix.rows() == 1);
  CHECK(w.matrix.at(0, 0) == 1);
  CHECK(w.target_factors == std::vector<Int>{Int(2)});
  CHECK_FALSE(w.is_zero());

  // multiplication by 2 on (Z -> 0): H^0 = Z, the matrix is [2]
  IntChainComplex zonly(0, {1}, {});
  std::map<int, IntMat> twice{{0, m1x1(2)}};
  ChainMap f2(zonly, zonly, twice);
  auto w2 = induced_cohomology_map(f2, 0);
  CHECK(w2.matrix.at(0, 0) == 2);
  CHECK(w2.source_factors == std::vector<Int>{Int(0)});

  // 2*id on a complex with H^0 = Z/2 induces zero
  IntChainComplex tor(-1, {1, 1}, {m1x1(2)});
  std::map<int, IntMat> twice2{{-1, m1x1(2)}, {0, m1x1(2)}};
  ChainMap f3(tor, tor, twice2);
  CHECK(induced_cohomology_map(f3, 0).is_zero());
  CHECK(induces_zero_everywhere(f3));
}

TEST_CASE("null homotopy solving") {
  auto c = two_term(2);
  // the zero map has the zero homotopy
  std::map<int, IntMat> zero{{0, m1x1(0)}, {1, m1x1(0)}};
  auto r0 = null_homotopy(ChainMap(c, c, zero));
  CHECK(r0.exists());

  // the identity on an acyclic bounded complex of frees is null-homotopic
  auto acyclic = two_term(1);
  std::map<int, IntMat> idm{{0, m1x1(1)}, {1, m1x1(1)}};
  auto r1 = null_homotopy(ChainMap(acyclic, acyclic, idm));
  CHECK(r1.exists());

  // 2*id on the torsion complex: h with 2h + h2 = 2 exists (h = 1)
  std::map<int, IntMat> twice{{0, m1x1(2)}, {1, m1x1(2)}};
  CHECK(null_homotopy(ChainMap(c, c, twice)).exists());

  // the Bockstein witness is cohomologically zero but not null-homotopic
  auto bw = bockstein_witness(0);
  CHECK(induces_zero_everywhere(bw.maps[0]));
  auto rb = null_homotopy(bw.maps[0]);
  CHECK_FALSE(rb.exists());
  REQUIRE(rb.cert.has_value());

  // ...while its square vanishes
  auto sq = ChainMap::compose(bw.maps[0], bw.maps[0]);
  CHECK(null_homotopy(sq).exists());
}

TEST_CASE("vanishing criterion verdicts") {
  // window of width 0: a single map, zero on the only cohomology
  auto c = two_term(2, -1);  // H^0 = Z/2
  std::map<int, IntMat> twice{{-1, m1x1(2)}, {0, m1x1(2)}};
  ChainMap f(c, c, twice);
  auto v = vancrit_check({f}, TWindow(0, 0));
  CHECK(v.preconditions_ok);
  CHECK(v.composite_null_homotopic);
  REQUIRE(v.witness.has_value());
  CHECK(verify_homotopy(f, *v.witness));

  // too few maps for the window
  auto bw = bockstein_witness(0);
  auto short_v = vancrit_check({bw.maps[0]}, TWindow(0, 1));
  CHECK_FALSE(short_v.preconditions_ok);

  // a map that is not cohomologically zero is reported per degree
  std::map<int, IntMat> idm{{-1, m1x1(1)}, {0, m1x1(1)}};
  ChainMap id(c, c, idm);
  auto bad = vancrit_check({id, id}, TWindow(0, 1));
  CHECK_FALSE(bad.preconditions_ok);
  bool mentions_degree = false;
  for (const auto& s : bad.violations) mentions_degree |= s.find("degree 0") != std::string::npos;
  CHECK(mentions_degree);

  // cohomology outside the window is reported
  auto outside = vancrit_check({f}, TWindow(1, 1));
  CHECK_FALSE(outside.preconditions_ok);
}

TEST_CASE("generator produces valid, deterministic instances") {
  for (std::uint64_t seed : {1ULL, 17ULL, 992ULL}) {
    auto inst = generate_cohomologically_zero_instance(TWindow(0, 1), seed);
    REQUIRE(inst.maps.size() == 2);
    for (const auto& f : inst.maps) CHECK(induces_zero_everywhere(f));
    auto v = vancrit_check(inst.maps, TWindow(0, 1));
    CHECK(v.holds());

    auto again = generate_cohomologically_zero_instance(TWindow(0, 1), seed);
    CHECK(to_json(inst, TWindow(0, 1)) == to_json(again, TWindow(0, 1)));
  }

  // degenerate: an all-zero complex passes trivially
  IntChainComplex empty(0, {0, 0}, {IntMat(0, 0)});
  ChainMap z(empty, empty, {});
  CHECK(vancrit_check({z}, TWindow(0, 0)).holds());
}
