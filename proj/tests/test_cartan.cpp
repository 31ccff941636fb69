#include <doctest.h>

#include <set>

#include "lzpath/cartan.hpp"
#include "lzpath/errors.hpp"

using namespace lzpath;

TEST_CASE("A_1^(1) tables") {
  auto d = datum_for(Family::A, 2);
  CHECK(d.label() == "A1(1)");
  CHECK(d.num_nodes() == 2);
  CHECK(d.cartan() == std::vector<std::vector<int>>{{2, -2}, {-2, 2}});
  CHECK(d.marks() == std::vector<int>{1, 1});
  CHECK(d.comarks() == std::vector<int>{1, 1});
  CHECK(d.a0() == 1);
}

TEST_CASE("A_2^(1) is cyclic") {
  auto d = datum_for(Family::A, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int expect = i == j ? 2 : -1;  // every pair of nodes adjacent on the 3-cycle
      CHECK(d.cartan()[i][j] == expect);
    }
  CHECK(d.marks() == std::vector<int>{1, 1, 1});
}

TEST_CASE("rank below table range is rejected") {
  CHECK_THROWS_AS(datum_for(Family::A, 1), std::invalid_argument);
  CHECK_THROWS_AS(datum_for(Family::C, 1), std::invalid_argument);
  CHECK_THROWS_AS(datum_for(Family::D, 3), std::invalid_argument);
}

TEST_CASE("C and D tables pass the kernel identities") {
  for (int n : {2, 3, 4}) datum_for(Family::C, n);
  for (int n : {4, 5}) datum_for(Family::D, n);
}

TEST_CASE("level-zero fundamental weights") {
  auto d2 = datum_for(Family::A, 2);
  CHECK(d2.fundamental_cl(1).pairings == std::vector<long long>{-1, 1});
  auto d3 = datum_for(Family::A, 3);
  CHECK(d3.fundamental_cl(2).pairings == std::vector<long long>{-1, 0, 1});
  for (int i = 1; i <= 2; ++i) CHECK(d3.level(d3.fundamental_cl(i)) == 0);
  CHECK_THROWS_AS(d3.fundamental_cl(0), std::invalid_argument);
  CHECK_THROWS_AS(d3.fundamental_cl(3), std::invalid_argument);
}

TEST_CASE("reflections") {
  auto d = datum_for(Family::A, 2);
  ClassicalWeight mu{{-1, 1}};
  CHECK(d.reflect(1, mu).pairings == std::vector<long long>{1, -1});
  CHECK(d.reflect(1, d.reflect(1, mu)) == mu);
  ClassicalWeight fixed{{0, 0}};
  CHECK(d.reflect(1, fixed) == fixed);
  for (int j = 0; j < 2; ++j) CHECK(d.level(d.reflect(j, mu)) == d.level(mu));
}

TEST_CASE("finite orbits") {
  auto d2 = datum_for(Family::A, 2);
  auto orbit2 = d2.finite_orbit(d2.fundamental_cl(1));
  CHECK(orbit2.size() == 2);

  auto d3 = datum_for(Family::A, 3);
  auto orbit3 = d3.finite_orbit(d3.fundamental_cl(1));
  CHECK(orbit3.size() == 3);

  // closure under all j in I agrees with closure under I_0 only
  std::set<std::vector<long long>> all;
  for (const auto& w : orbit3) all.insert(w.pairings);
  std::set<std::vector<long long>> grown = all;
  for (const auto& w : orbit3)
    for (int j = 0; j < d3.num_nodes(); ++j) grown.insert(d3.reflect(j, w).pairings);
  CHECK(grown == all);

  CHECK_THROWS_AS(d3.finite_orbit(ClassicalWeight{{1, 0, 0}}), std::invalid_argument);
}

TEST_CASE("anti-dominant representatives") {
  auto d2 = datum_for(Family::A, 2);
  CHECK(d2.anti_dominant(d2.fundamental_cl(1)).pairings == std::vector<long long>{1, -1});
  auto anti = d2.anti_dominant(ClassicalWeight{{1, -1}});
  CHECK(anti.pairings == std::vector<long long>{1, -1});

  auto d3 = datum_for(Family::A, 3);
  CHECK(d3.anti_dominant(d3.fundamental_cl(1)).pairings == std::vector<long long>{1, 0, -1});
  CHECK(d3.dominant_representative(d3.anti_dominant(d3.fundamental_cl(1))) ==
        d3.fundamental_cl(1));
}

TEST_CASE("classical bilinear form") {
  auto d = datum_for(Family::A, 2);
  ClassicalWeight w = d.fundamental_cl(1);
  CHECK(d.cl_form(w, w) == Rational(1, 2));
  CHECK(d.cl_form(ClassicalWeight{{0, 0}}, ClassicalWeight{{0, 0}}) == Rational(0));
  // positivity and W-invariance on a sample of orbit weights
  auto d3 = datum_for(Family::A, 3);
  for (int i = 1; i <= 2; ++i) {
    ClassicalWeight mu = d3.fundamental_cl(i);
    CHECK(d3.cl_form(mu, mu) > Rational(0));
    for (int j = 1; j <= 2; ++j) {
      ClassicalWeight nu = d3.fundamental_cl(j);
      CHECK(d3.cl_form(mu, nu) == d3.cl_form(nu, mu));
      for (int r = 1; r <= 2; ++r)
        CHECK(d3.cl_form(d3.reflect(r, mu), d3.reflect(r, nu)) == d3.cl_form(mu, nu));
    }
  }
}

TEST_CASE("shapes from sequences") {
  auto d = datum_for(Family::A, 3);
  auto s = LevelZeroDominantWeight::from_sequence(d, {1, 2, 1});
  CHECK(s.mult == std::vector<long long>{2, 1});
  CHECK(s.key() == "2,1");
  CHECK(s.cl(d) == d.fundamental_cl(1) * 2 + d.fundamental_cl(2));
  CHECK_THROWS_AS(LevelZeroDominantWeight::from_sequence(d, {0}), std::invalid_argument);
  CHECK_THROWS_AS(LevelZeroDominantWeight::from_sequence(d, {3}), std::invalid_argument);
}
