#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "rootlie/quiver.hpp"

using namespace rootlie;

TEST_CASE("euler form") {
  auto q = testq::a2();
  CHECK(euler_form(*q, {1, 0}, {0, 1}) == -1);
  CHECK(euler_form(*q, {0, 1}, {1, 0}) == 0);
  CHECK(euler_form(*q, {3, 2}, {0, 0}) == 0);
  auto k = testq::kronecker();
  CHECK(euler_form(*k, {1, 1}, {1, 1}) == 0);

  // bilinearity spot checks
  DimVector d{2, 1}, e{1, 3}, f{0, 2};
  CHECK(euler_form(*k, d + e, f) == euler_form(*k, d, f) + euler_form(*k, e, f));
  CHECK(euler_form(*k, d, e + f) == euler_form(*k, d, e) + euler_form(*k, d, f));

  Quiver rel({"1", "2"}, {{"a", 0, 1}}, {Relation{RelationTerm{1, {0}}}});
  CHECK_THROWS_WITH(euler_form(rel, {1, 0}, {0, 1}),
                    Catch::Matchers::ContainsSubstring("relations present"));
}

TEST_CASE("symmetric form") {
  auto q = testq::a2();
  CHECK(symmetric_form(*q, {1, 0}, {1, 0}) == 2);
  CHECK(symmetric_form(*q, {1, 0}, {0, 1}) == -1);
  auto k = testq::kronecker();
  CHECK(symmetric_form(*k, {1, 1}, {1, 1}) == 0);
  CHECK(symmetric_form(*k, {1, 0}, {0, 1}) ==
        symmetric_form(*k, {0, 1}, {1, 0}));
}

TEST_CASE("cartan datum") {
  auto q = testq::a2();
  CartanDatum c = CartanDatum::of(*q);
  CHECK(c.a[0][0] == 2);
  CHECK(c.a[1][1] == 2);
  CHECK(c.a[0][1] == -1);
  CHECK(c.a[1][0] == -1);
  // off-diagonal = -(number of arrows between i and j)
  auto k = testq::kronecker();
  CHECK(CartanDatum::of(*k).a[0][1] == -2);
  auto d = testq::d4();
  CartanDatum cd = CartanDatum::of(*d);
  for (int i = 0; i < 3; ++i) {
    CHECK(cd.a[i][3] == -1);
    CHECK(cd.a[i][(i + 1) % 3] == 0);
  }
}

TEST_CASE("simple reflections") {
  auto q = testq::a2();
  CHECK(reflect(*q, 0, {1, 0}) == DimVector{-1, 0});
  CHECK(reflect(*q, 0, {0, 1}) == DimVector{1, 1});
  CHECK(reflect(*q, 0, {1, 1}) == DimVector{0, 1});
  // involution on a spread of vectors
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int i = 0; i < 2; ++i)
        CHECK(reflect(*q, i, reflect(*q, i, {a, b})) == DimVector{a, b});
}

TEST_CASE("quiver type detection") {
  CHECK(quiver_type(*testq::a1()) == QuiverType::Finite);
  CHECK(quiver_type(*testq::a2()) == QuiverType::Finite);
  CHECK(quiver_type(*testq::a3()) == QuiverType::Finite);
  CHECK(quiver_type(*testq::d4()) == QuiverType::Finite);
  CHECK(quiver_type(*testq::kronecker()) == QuiverType::Affine);
  CHECK(quiver_type(*testq::wild3()) == QuiverType::Wild);
}

TEST_CASE("root enumeration, finite type") {
  RootSystem a1 = enumerate_roots(*testq::a1(), 10);
  CHECK(a1.positive_reals == std::vector<DimVector>{{1}});
  CHECK(a1.complete);

  RootSystem a2 = enumerate_roots(*testq::a2(), 10);
  CHECK(a2.positive_reals ==
        std::vector<DimVector>{{0, 1}, {1, 0}, {1, 1}});

  RootSystem a3 = enumerate_roots(*testq::a3(), 10);
  CHECK(a3.positive_reals.size() == 6);

  RootSystem d4 = enumerate_roots(*testq::d4(), 10);
  CHECK(d4.positive_reals.size() == 12);
  CHECK(d4.type == QuiverType::Finite);
  // every real root pairs to 2 with itself
  for (const DimVector& r : d4.positive_reals)
    CHECK(symmetric_form(*testq::d4(), r, r) == 2);
}

TEST_CASE("root enumeration, affine and wild") {
  RootSystem k = enumerate_roots(*testq::kronecker(), 5);
  std::vector<DimVector> expect{{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}};
  CHECK(k.positive_reals == expect);
  REQUIRE(k.delta);
  CHECK(*k.delta == DimVector{1, 1});
  CHECK(symmetric_form(*testq::kronecker(), *k.delta, *k.delta) == 0);
  CHECK_FALSE(k.complete);

  RootSystem w = enumerate_roots(*testq::wild3(), 4);
  CHECK(w.type == QuiverType::Wild);
  CHECK_FALSE(w.delta);
  for (const DimVector& r : w.positive_reals)
    CHECK(symmetric_form(*testq::wild3(), r, r) == 2);

  Quiver disc({"1", "2"}, {});
  CHECK_THROWS_WITH(enumerate_roots(disc, 3),
                    Catch::Matchers::ContainsSubstring("disconnected"));
}

TEST_CASE("reflections map enumerated roots to roots") {
  auto q = testq::a3();
  RootSystem rs = enumerate_roots(*q, 10);
  for (const DimVector& r : rs.positive_reals)
    for (int i = 0; i < q->n(); ++i) {
      DimVector s = reflect(*q, i, r);
      if (is_nonneg(s) && !is_zero(s))
        CHECK(std::find(rs.positive_reals.begin(), rs.positive_reals.end(),
                        s) != rs.positive_reals.end());
    }
}

TEST_CASE("quiver utilities") {
  auto q = testq::a2();
  CHECK(q->is_acyclic());
  CHECK(q->is_connected());
  CHECK(q->is_source(0));
  CHECK(q->is_sink(1));
  Quiver r = q->reflect_at(0);
  CHECK(r.is_sink(0));
  CHECK(r.arrows()[0].src == 1);
  CHECK(q->vertex_index("2") == 1);
  CHECK_THROWS(q->vertex_index("zz"));

  Quiver loop({"1"}, {{"a", 0, 0}});
  CHECK_FALSE(loop.is_acyclic());
}
