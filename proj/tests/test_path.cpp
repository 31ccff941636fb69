#include <doctest.h>

#include "lzpath/errors.hpp"
#include "lzpath/path.hpp"

using namespace lzpath;

namespace {
const AffineCartanDatum& a1() {
  static AffineCartanDatum d = datum_for(Family::A, 2);
  return d;
}
ClPath two_seg() {
  // ((-2,2) dur 1/2, (2,-2) dur 1/2)
  return ClPath(a1(), {Segment{ClassicalWeight{{-2, 2}}, Rational(1, 2)},
                       Segment{ClassicalWeight{{2, -2}}, Rational(1, 2)}});
}
}  // namespace

TEST_CASE("straight lines") {
  ClPath p = ClPath::straight(a1(), a1().fundamental_cl(1));
  CHECK(p.segments().size() == 1);
  CHECK(p.to_string() == "[(-1,1)@1/1]");
  CHECK(p.weight() == a1().fundamental_cl(1));
  CHECK(p.initial_direction() == a1().fundamental_cl(1));
  CHECK(p.final_direction() == a1().fundamental_cl(1));
  CHECK_THROWS_AS(ClPath::straight(a1(), ClassicalWeight{{1, 1}}), std::invalid_argument);
}

TEST_CASE("normalization merges equal adjacent directions") {
  ClassicalWeight mu{{-1, 1}};
  ClPath p(a1(), {Segment{mu, Rational(1, 3)}, Segment{mu, Rational(2, 3)}});
  CHECK(p.segments().size() == 1);
  CHECK(p == ClPath::straight(a1(), mu));
  // durations must sum to one
  CHECK_THROWS_AS(ClPath(a1(), {Segment{mu, Rational(1, 2)}}), std::invalid_argument);
  // endpoint must be integral
  CHECK_THROWS_AS(ClPath(a1(), {Segment{mu, Rational(1, 2)},
                                Segment{ClassicalWeight{{1, -1}}, Rational(1, 4)},
                                Segment{mu, Rational(1, 4)}}),
                  std::invalid_argument);
}

TEST_CASE("evaluation") {
  ClPath p = ClPath::straight(a1(), a1().fundamental_cl(1));
  auto at0 = p.evaluate(Rational(0));
  CHECK((at0[0].is_zero() && at0[1].is_zero()));
  auto mid = p.evaluate(Rational(1, 2));
  CHECK(mid[0] == Rational(-1, 2));
  CHECK(mid[1] == Rational(1, 2));
  auto mid2 = two_seg().evaluate(Rational(1, 2));
  CHECK(mid2[0] == Rational(-1));
  CHECK(mid2[1] == Rational(1));
  CHECK_THROWS_AS(p.evaluate(Rational(3, 2)), std::invalid_argument);
}

TEST_CASE("H profiles") {
  ClPath plus = ClPath::straight(a1(), ClassicalWeight{{-1, 1}});
  auto h1 = plus.h_profile(1);
  CHECK(h1.min == 0);
  CHECK(!h1.has_cut);
  auto h0 = plus.h_profile(0);
  CHECK(h0.min == -1);
  CHECK(h0.has_cut);
  CHECK(h0.t1 == Rational(1));
  CHECK(h0.t0 == Rational(0));
  CHECK(two_seg().h_profile(1).min == 0);  // rises to 1 and returns to 0
}

TEST_CASE("raise on straight lines") {
  ClPath minus = ClPath::straight(a1(), ClassicalWeight{{1, -1}});
  auto up = minus.raise(a1(), 1);
  REQUIRE(up);
  CHECK(*up == ClPath::straight(a1(), ClassicalWeight{{-1, 1}}));

  ClPath plus = ClPath::straight(a1(), ClassicalWeight{{-1, 1}});
  CHECK(!plus.raise(a1(), 1));  // dominant direction, m = 0
  auto zero = plus.raise(a1(), 0);
  REQUIRE(zero);
  CHECK(*zero == minus);
}

TEST_CASE("lower and raise are partially inverse") {
  ClPath plus = ClPath::straight(a1(), ClassicalWeight{{-1, 1}});
  auto dn = plus.lower(a1(), 1);
  REQUIRE(dn);
  CHECK(*dn == ClPath::straight(a1(), ClassicalWeight{{1, -1}}));
  CHECK(!dn->lower(a1(), 1));  // phi_1 = 0
  auto back = dn->raise(a1(), 1);
  REQUIRE(back);
  CHECK(*back == plus);

  ClPath v = two_seg();
  for (int j = 0; j < 2; ++j) {
    if (auto r = v.raise(a1(), j)) {
      auto inv = r->lower(a1(), j);
      REQUIRE(inv);
      CHECK(*inv == v);
    }
    if (auto f = v.lower(a1(), j)) {
      auto inv = f->raise(a1(), j);
      REQUIRE(inv);
      CHECK(*inv == v);
    }
  }
}

TEST_CASE("epsilon and phi") {
  ClPath minus = ClPath::straight(a1(), ClassicalWeight{{1, -1}});
  CHECK(minus.epsilon(1) == 1);
  CHECK(minus.phi(1) == 0);
  ClPath plus = ClPath::straight(a1(), ClassicalWeight{{-1, 1}});
  CHECK(plus.epsilon(1) == 0);
  CHECK(plus.phi(1) == 1);
  for (int j = 0; j < 2; ++j) {
    CHECK(plus.epsilon(j) - plus.phi(j) == -plus.weight()(j));
    // counts of successful applications match the profile values
    long long ups = 0, downs = 0;
    ClPath cur = plus;
    while (auto r = cur.raise(a1(), j)) {
      cur = *r;
      ++ups;
    }
    cur = plus;
    while (auto f = cur.lower(a1(), j)) {
      cur = *f;
      ++downs;
    }
    CHECK(ups == plus.epsilon(j));
    CHECK(downs == plus.phi(j));
  }
}

TEST_CASE("folding splits and reflects the middle piece") {
  // e_0 on straight(-2,2) cuts at t0 = 1/2 and reflects the tail
  ClPath s(a1(), {Segment{ClassicalWeight{{-2, 2}}, Rational(1)}});
  auto up = s.raise(a1(), 0);
  REQUIRE(up);
  CHECK(up->to_string() == "[(-2,2)@1/2,(2,-2)@1/2]");
  CHECK(up->weight() == ClassicalWeight{{0, 0}});
  // and once more reaches the anti-dominant straight line
  auto up2 = up->raise(a1(), 0);
  REQUIRE(up2);
  CHECK(*up2 == ClPath(a1(), {Segment{ClassicalWeight{{2, -2}}, Rational(1)}}));
}
