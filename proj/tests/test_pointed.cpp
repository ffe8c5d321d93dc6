#include <catch2/catch_amalgamated.hpp>

#include "monocal/pointed_map.hpp"

using namespace monocal;

TEST_CASE("pointed map basics") {
  PointedMap alpha({"1", "2"}, {"q", "q'"}, {0, PointedMap::kStar});
  CHECK_FALSE(alpha.is_surjective());
  CHECK_FALSE(alpha.is_injective());
  CHECK(alpha.fiber(0) == std::vector<std::size_t>{0});
  CHECK(alpha.fiber(PointedMap::kStar) == std::vector<std::size_t>{1});
  CHECK_THROWS_AS(PointedMap({"1"}, {"q"}, {2}), std::invalid_argument);

  auto id = PointedMap::identity({"a", "b"});
  CHECK(id.is_isomorphism());
  CHECK(PointedMap::compose(id, id) == id);
}

TEST_CASE("factorization through the image") {
  auto id = PointedMap::identity({"1", "2", "3"});
  auto f = factorize(id);
  CHECK(f.alpha1 == id);
  CHECK(f.alpha2 == id);

  PointedMap alpha({"1", "2"}, {"q", "q'"}, {0, PointedMap::kStar});
  auto g = factorize(alpha);
  CHECK(g.alpha1.target() == std::vector<std::string>{"q"});
  CHECK(g.alpha1.assignment() == std::vector<int>{0, PointedMap::kStar});
  CHECK(g.alpha2.assignment() == std::vector<int>{0});
  CHECK(g.alpha1.is_surjective());
  CHECK(g.alpha2.is_injective());
  CHECK(PointedMap::compose(g.alpha2, g.alpha1) == alpha);

  PointedMap to_star({"1", "2"}, {"q"}, {PointedMap::kStar, PointedMap::kStar});
  auto h = factorize(to_star);
  CHECK(h.alpha1.target().empty());
  CHECK(h.alpha2.source().empty());
}

TEST_CASE("induced linear maps") {
  auto id = PointedMap::identity({"1", "2", "3"});
  CHECK(linear_map_matrix(id).is_identity());

  PointedMap diag({"1", "2"}, {"q"}, {0, 0});
  auto m = linear_map_matrix(diag);
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 1);
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(1, 0) == 1);

  PointedMap zero({"1", "2"}, {"q"}, {PointedMap::kStar, PointedMap::kStar});
  CHECK(linear_map_matrix(zero).is_zero());
}

TEST_CASE("degree windows") {
  // |P| = 3, |Q| = 2, image meets Q in one label
  PointedMap alpha(default_labels(3), default_labels(2), {0, 0, PointedMap::kStar});
  CHECK(degree_window(alpha) == std::make_pair(-1L, 1L));

  CHECK(degree_window(PointedMap::identity(default_labels(3))) == std::make_pair(0L, 0L));

  PointedMap beilinson(default_labels(1), {}, {PointedMap::kStar});
  CHECK(degree_window(beilinson) == std::make_pair(-1L, 0L));
}

TEST_CASE("special functions") {
  PointedMap alpha(default_labels(3), default_labels(1), {0, PointedMap::kStar, 0});
  CHECK(is_special({1, 5, 1}, alpha));
  CHECK_FALSE(is_special({2, 1, 1}, alpha));
  CHECK_THROWS_AS(is_special({0, 1, 1}, alpha), std::invalid_argument);

  // Q empty: every function is special
  PointedMap to_empty(default_labels(2), {}, {PointedMap::kStar, PointedMap::kStar});
  CHECK(is_special({4, 7}, to_empty));
}

TEST_CASE("composition data") {
  // P = {1,2,3} -> Q = {q} -> R = {}
  PointedMap alpha(default_labels(3), {"q"}, {0, 0, 0});
  PointedMap beta({"q"}, {}, {PointedMap::kStar});
  auto d = compose_data({2, 3, 4}, alpha, beta);
  CHECK(d.a == std::vector<int>{1, 1, 1});
  CHECK(d.b == std::vector<int>{2, 3, 4});
  CHECK(d.b_prime == std::vector<int>{7});  // -3 + 1 + 9

  // alpha sends everything to the basepoint: a = c, b = 1, b' = 1
  PointedMap astar(default_labels(2), {"q"}, {PointedMap::kStar, PointedMap::kStar});
  PointedMap bq({"q"}, {}, {PointedMap::kStar});
  auto d2 = compose_data({3, 5}, astar, bq);
  CHECK(d2.a == std::vector<int>{3, 5});
  CHECK(d2.b == std::vector<int>{1, 1});
  CHECK(d2.b_prime == std::vector<int>{1});

  // c must be (beta.alpha)-special
  PointedMap beta_id = PointedMap::identity({"q"});
  PointedMap alpha_q(default_labels(1), {"q"}, {0});
  CHECK_THROWS_AS(compose_data({2}, alpha_q, beta_id), std::invalid_argument);
}

TEST_CASE("pullback multiplication") {
  RationalField q;
  PointedMap singletons(default_labels(2), default_labels(2), {0, 1});
  CHECK(pullback_mult_matrix(q, singletons, {3, 2}).matrix.is_identity());

  PointedMap pair(default_labels(2), {"q"}, {0, 0});
  auto pm = pullback_mult_matrix(q, pair, {2, 2});
  CHECK(pm.b_prime == std::vector<int>{3});
  CHECK(pm.matrix.eq(mult_map(q, 2, 2).matrix));

  PointedMap empty_fiber(default_labels(1), {"q"}, {PointedMap::kStar});
  auto pe = pullback_mult_matrix(q, empty_fiber, {5});
  CHECK(pe.b_prime == std::vector<int>{1});
  CHECK(pe.matrix.rows() == 1);
  CHECK(pe.matrix.is_identity());
}

TEST_CASE("pullback equivariance") {
  RationalField q;
  PointedMap pair(default_labels(2), {"q"}, {0, 0});
  CHECK(diagonal_equivariance_check(q, pair, {2, 3}, Int(0)));
  CHECK(diagonal_equivariance_check(q, pair, {2, 3}, Int(1)));

  PointedMap triple(default_labels(3), {"q"}, {0, 0, 0});
  CHECK(diagonal_equivariance_check(q, triple, {2, 2, 2}, Int(-1)));

  PointedMap mixed(default_labels(4), default_labels(2), {0, 1, 0, PointedMap::kStar});
  CHECK(diagonal_equivariance_check(q, mixed, {2, 3, 2, 4}, Int(2)));
  CHECK(galois_equivariance_check(q, mixed, {2, 3, 2, 4}, Rat(1, 3)));
}
