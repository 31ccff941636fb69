#include <doctest.h>

#include <json.hpp>

#include "lzpath/crystal.hpp"
#include "lzpath/errors.hpp"
#include "lzpath/export.hpp"

using namespace lzpath;

namespace {

CrystalGraph fundamental_graph(const AffineCartanDatum& d, int i) {
  return CrystalGraph::generate(d, {LevelZeroDominantWeight::fundamental(d, i)});
}

long long binom(int n, int k) {
  long long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - t + 1) / t;
  return r;
}

}  // namespace

TEST_CASE("type A fundamental crystals are minuscule") {
  for (int l = 2; l <= 4; ++l) {
    auto d = datum_for(Family::A, l);
    for (int i = 1; i < l; ++i) {
      auto g = fundamental_graph(d, i);
      CHECK(g.size() == binom(l, i));
      for (int x = 0; x < g.size(); ++x)
        CHECK(g.element(x).factors[0].segments().size() == 1);
    }
  }
}

TEST_CASE("B(2 varpi_1) in A_1^(1)") {
  auto d = datum_for(Family::A, 2);
  auto g = CrystalGraph::generate(d, {LevelZeroDominantWeight{{2}}});
  CHECK(g.size() == 4);
  CHECK(g.index_of("[(-2,2)@1/2,(2,-2)@1/2]") >= 0);
}

TEST_CASE("element cap aborts with a resource error") {
  auto d = datum_for(Family::A, 3);
  CHECK_THROWS_AS(CrystalGraph::generate(d, {LevelZeroDominantWeight{{1, 1}}}, 3), ResourceError);
}

TEST_CASE("tensor operator routing") {
  auto d = datum_for(Family::A, 2);
  ClPath plus = ClPath::straight(d, ClassicalWeight{{-1, 1}});
  ClPath minus = ClPath::straight(d, ClassicalWeight{{1, -1}});
  CrystalElement pm{{plus, minus}};
  CHECK(!pm.raise(d, 1));  // phi_1(plus) = 1 routes left, raise(plus, 1) none
  CrystalElement pp{{plus, plus}};
  auto up = pp.raise(d, 0);
  REQUIRE(up);
  CHECK(*up == pm);  // phi_0(plus) = 0 < eps_0(plus) = 1 routes right
  // iterated raises count eps
  CrystalElement cur = pp;
  long long n = 0;
  while (auto r = cur.raise(d, 0)) {
    cur = *r;
    ++n;
  }
  CHECK(n == pp.epsilon(0));
}

TEST_CASE("Weyl action on the graph") {
  auto d = datum_for(Family::A, 2);
  auto g = fundamental_graph(d, 1);
  int plus = g.index_of("[(-1,1)@1/1]");
  int minus = g.index_of("[(1,-1)@1/1]");
  REQUIRE(plus >= 0);
  REQUIRE(minus >= 0);
  CHECK(g.weyl_s(1, plus) == minus);
  for (int x = 0; x < g.size(); ++x)
    for (int j = 0; j < 2; ++j) {
      CHECK(g.weyl_s(j, g.weyl_s(j, x)) == x);
      CHECK(g.weight(g.weyl_s(j, x)) == d.reflect(j, g.weight(x)));
    }
  // arbitrary, non-reduced words are accepted
  CHECK(g.weyl_w({1, 1, 1}, plus) == minus);
  CHECK(g.weyl_w({}, plus) == plus);
}

TEST_CASE("extremal elements") {
  auto d = datum_for(Family::A, 2);
  auto g2 = CrystalGraph::generate(d, {LevelZeroDominantWeight{{2}}});
  CHECK(g2.is_extremal(g2.source()));
  int vshape = g2.index_of("[(-2,2)@1/2,(2,-2)@1/2]");
  REQUIRE(vshape >= 0);
  CHECK(!g2.is_extremal(vshape));
  // every orbit straight line is extremal
  for (const auto& mu : d.finite_orbit(ClassicalWeight{{-2, 2}})) {
    int idx = g2.index_of(ClPath::straight(d, mu).to_string());
    REQUIRE(idx >= 0);
    CHECK(g2.is_extremal(idx));
  }
}

TEST_CASE("simplicity report") {
  auto d = datum_for(Family::A, 3);
  for (int i = 1; i <= 2; ++i) CHECK(fundamental_graph(d, i).check_simple().ok);
  auto shapes = std::vector<LevelZeroDominantWeight>{
      LevelZeroDominantWeight::fundamental(d, 1), LevelZeroDominantWeight::fundamental(d, 2)};
  auto tensor = CrystalGraph::generate(d, shapes);
  CHECK(tensor.check_simple().ok);
  // negative control: fault injection breaks the report
  auto broken = tensor.with_element_removed(tensor.size() - 1);
  CHECK(!broken.check_simple().ok);
}

TEST_CASE("anchored isomorphism is the identity on equal graphs") {
  auto d = datum_for(Family::A, 2);
  auto g = fundamental_graph(d, 1);
  auto iso = anchored_isomorphism(g, g, g.source(), g.source());
  for (int x = 0; x < g.size(); ++x) CHECK(iso[x] == x);
}

TEST_CASE("psi maps the dominant line to the all-dominant tensor") {
  auto d = datum_for(Family::A, 2);
  auto pg = CrystalGraph::generate(d, {LevelZeroDominantWeight{{2}}});
  auto f = LevelZeroDominantWeight::fundamental(d, 1);
  auto tg = CrystalGraph::generate(d, {f, f});
  auto iso = psi_map(pg, tg);
  CHECK(iso[pg.source()] == tg.source());
  CHECK(pg.size() == tg.size());
  // the two-segment element maps to eta_+ (x) eta_-
  int vshape = pg.index_of("[(-2,2)@1/2,(2,-2)@1/2]");
  CHECK(tg.key(iso[vshape]) == "[(-1,1)@1/1][(1,-1)@1/1]");
  // size mismatch is rejected
  auto other = fundamental_graph(d, 1);
  CHECK_THROWS_AS(psi_map(other, tg), ConsistencyError);
}

TEST_CASE("R-matrix") {
  auto d3 = datum_for(Family::A, 3);
  auto f1 = LevelZeroDominantWeight::fundamental(d3, 1);
  auto f2 = LevelZeroDominantWeight::fundamental(d3, 2);
  auto fwd = CrystalGraph::generate(d3, {f1, f2});
  auto rev = CrystalGraph::generate(d3, {f2, f1});
  CHECK(fwd.size() == 9);
  auto r = r_matrix_map(fwd, rev);
  auto rinv = r_matrix_map(rev, fwd);
  for (int x = 0; x < fwd.size(); ++x) {
    CHECK(fwd.weight(x) == rev.weight(r[x]));
    CHECK(rinv[r[x]] == x);  // R_{l',l} o R_{l,l'} = id
  }
  // lambda = lambda' gives the identity
  auto d2 = datum_for(Family::A, 2);
  auto f = LevelZeroDominantWeight::fundamental(d2, 1);
  auto sq = CrystalGraph::generate(d2, {f, f});
  auto rid = r_matrix_map(sq, sq);
  for (int x = 0; x < sq.size(); ++x) CHECK(rid[x] == x);
}

TEST_CASE("concatenation matches psi inverse for 2 varpi_i") {
  auto d = datum_for(Family::A, 2);
  auto f = LevelZeroDominantWeight::fundamental(d, 1);
  auto pg = CrystalGraph::generate(d, {LevelZeroDominantWeight{{2}}});
  auto tg = CrystalGraph::generate(d, {f, f});
  auto iso = psi_map(pg, tg);
  for (int x = 0; x < pg.size(); ++x) {
    const CrystalElement& b = tg.element(iso[x]);
    CHECK(concatenate(d, b.factors[0], b.factors[1]) == pg.element(x).factors[0]);
  }
  // equal directions merge into a single segment
  ClPath plus = ClPath::straight(d, ClassicalWeight{{-1, 1}});
  ClPath cat = concatenate(d, plus, plus);
  CHECK(cat.segments().size() == 1);
  CHECK(cat.segments()[0].dir == ClassicalWeight{{-2, 2}});
}

TEST_CASE("norm squared") {
  auto d = datum_for(Family::A, 2);
  auto g = CrystalGraph::generate(d, {LevelZeroDominantWeight{{2}}});
  for (int x = 0; x < g.size(); ++x)
    for (int j = 0; j < 2; ++j) {
      Rational grown = g.norm_squared(g.raise_max(j, x));
      CHECK(grown >= g.norm_squared(x));
      bool boundary = g.raise_edge(j, x) < 0 || g.lower_edge(j, x) < 0;
      CHECK((grown == g.norm_squared(x)) == boundary);
    }
}

TEST_CASE("graph JSON export shape") {
  auto d = datum_for(Family::A, 2);
  auto g = fundamental_graph(d, 1);
  nlohmann::json j = graph_to_json(g);
  CHECK(j["elements"].size() == 2);
  CHECK(j["elements"][0] == "[(-1,1)@1/1]");
  CHECK(j["source"] == g.source());
  CHECK(j["edges"]["1"].size() == 1);  // one f_1 edge
  CHECK(j["edges"]["0"].size() == 1);
}

TEST_CASE("structural lemma reports pass on generated crystals") {
  auto d = datum_for(Family::A, 3);
  auto pg = CrystalGraph::generate(d, {LevelZeroDominantWeight{{1, 1}}});
  CHECK(check_regular_crystal_lemmas(pg).ok);
  CHECK(check_path_lemmas(pg).ok);
  auto tg = CrystalGraph::generate(d, {LevelZeroDominantWeight::fundamental(d, 1),
                                       LevelZeroDominantWeight::fundamental(d, 2)});
  CHECK(check_regular_crystal_lemmas(tg).ok);
  CHECK(check_tensor_lemmas(tg).ok);
}
