#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "oracles.hpp"
#include "rootlie/hall.hpp"

using namespace rootlie;

namespace {

IndecLabel S(DimVector d) { return IndecLabel{std::move(d)}; }

}  // namespace

TEST_CASE("subspace enumeration and counts") {
  PrimeField f3(3);
  CHECK(detail::all_subspaces(f3, 2, 1).size() == 4);   // P^1(F_3)
  CHECK(detail::all_subspaces(f3, 3, 1).size() == 13);  // P^2(F_3)
  CHECK(detail::gaussian_count(2, 1, 3) == 4);
  CHECK(detail::gaussian_count(4, 2, 2) == 35);
  CHECK(detail::gaussian_count(3, 2, 2) == 7);
  for (const FMatrix& u : detail::all_subspaces(f3, 3, 2))
    CHECK(u.rank() == 2);
}

TEST_CASE("submodule counts on A2 match the brute-force oracle") {
  auto q = testq::a2();
  HallContext ctx(q);
  PrimeField f2(2);
  ModuleLabel s1{S({1, 0})}, s2{S({0, 1})}, p12{S({1, 1})};
  Rep l_p = ctx.realize_module(p12, f2);
  Rep l_split = ctx.realize_module({S({1, 0}), S({0, 1})}, f2);

  CHECK(ctx.count_submodules(l_p, s1, s2) == 1);
  CHECK(ctx.count_submodules(l_split, s1, s2) == 1);
  CHECK(ctx.count_submodules(l_p, s2, s1) == 0);

  Rep rs1 = ctx.realize_indec(S({1, 0}), f2);
  Rep rs2 = ctx.realize_indec(S({0, 1}), f2);
  CHECK(oracles::count_sub_quot(l_p, rs2, rs1) == 1);
  CHECK(oracles::count_sub_quot(l_split, rs2, rs1) == 1);
  CHECK(oracles::count_sub_quot(l_p, rs1, rs2) == 0);
}

TEST_CASE("hall polynomials on A2") {
  auto q = testq::a2();
  HallContext ctx(q);
  ModuleLabel s1{S({1, 0})}, s2{S({0, 1})}, p12{S({1, 1})};
  CHECK(ctx.hall_polynomial(p12, s1, s2).poly == IntPoly{1});
  CHECK(ctx.hall_polynomial({S({1, 0}), S({0, 1})}, s1, s2).poly == IntPoly{1});
  // empty submodule: g^L_{X,0} = 1 iff L = X
  CHECK(ctx.hall_polynomial(p12, p12, {}).poly == IntPoly{1});
  CHECK(ctx.hall_polynomial(p12, {S({1, 0}), S({0, 1})}, {}).poly.is_zero());
  // a genuinely nonconstant one: number of S1 submodules of S1 + S1
  CHECK(ctx.hall_polynomial({S({1, 0}), S({1, 0})}, s1, s1).poly ==
        IntPoly({1, 1}));
}

TEST_CASE("interpolation soundness: recount at a fresh prime") {
  auto q = testq::a2();
  HallContext ctx(q);
  ModuleLabel s1{S({1, 0})}, two_s1{S({1, 0}), S({1, 0})};
  HallPolynomial h = ctx.hall_polynomial(two_s1, s1, s1);
  for (int p : {13, 17}) {
    PrimeField f(p);
    CHECK(h.poly.eval(p) == ctx.count_for_prime(two_s1, s1, s1, f));
  }
}

TEST_CASE("ringel bracket constants") {
  auto q = testq::a2();
  HallContext ctx(q);
  ModuleLabel s1{S({1, 0})}, s2{S({0, 1})}, p12{S({1, 1})};
  CHECK(ctx.ringel_bracket_constant(p12, s1, s2) == 1);
  CHECK(ctx.ringel_bracket_constant(p12, s2, s1) == -1);
  CHECK(ctx.ringel_bracket_constant(p12, s1, s1) == 0);
}

TEST_CASE("class lists") {
  auto q = testq::a2();
  HallContext ctx(q);
  PrimeField f2(2);
  CHECK(ctx.all_classes({1, 1}, f2).size() == 2);
  CHECK(ctx.all_classes({2, 1}, f2).size() == 2);
  auto k = testq::kronecker();
  HallContext kctx(k);
  CHECK(kctx.all_classes({1, 1}, f2).size() == 4);  // 3 regulars + split
}

TEST_CASE("twisted products over A2") {
  auto q = testq::a2();
  HallContext ctx(q);
  ModuleLabel s1{S({1, 0})}, s2{S({0, 1})}, p12{S({1, 1})};
  ModuleLabel split{S({1, 0}), S({0, 1})};
  TwistMode at2{false, 2};

  HallElement u1 = HallElement::of(s1), u2 = HallElement::of(s2);
  HallElement prod = twisted_product(ctx, u1, u2, at2);
  REQUIRE(prod.terms.size() == 2);
  CHECK(prod.terms.at(normalized(split)) == Laurent::v_power(-1));
  CHECK(prod.terms.at(p12) == Laurent::v_power(-1));

  HallElement rev = twisted_product(ctx, u2, u1, at2);
  REQUIRE(rev.terms.size() == 1);
  CHECK(rev.terms.at(normalized(split)) == Laurent::constant(1));

  // unit element
  CHECK(twisted_product(ctx, u1, HallElement::unit(), at2).terms ==
        u1.terms);

  // same shape in symbolic mode
  TwistMode sym{true, 2};
  HallElement sprod = twisted_product(ctx, u1, u2, sym);
  CHECK(sprod.terms.at(p12) == Laurent::v_power(-1));
}

TEST_CASE("associativity of the twisted product on A2 basis classes") {
  auto q = testq::a2();
  HallContext ctx(q);
  std::vector<ModuleLabel> basis{{S({1, 0})}, {S({0, 1})}, {S({1, 1})}};
  for (int p : {2, 3}) {
    TwistMode mode{false, p};
    for (const ModuleLabel& a : basis)
      for (const ModuleLabel& b : basis)
        for (const ModuleLabel& c : basis) {
          HallElement ua = HallElement::of(a), ub = HallElement::of(b),
                      uc = HallElement::of(c);
          HallElement left =
              twisted_product(ctx, twisted_product(ctx, ua, ub, mode), uc, mode);
          HallElement right =
              twisted_product(ctx, ua, twisted_product(ctx, ub, uc, mode), mode);
          CHECK((left - right).is_zero());
        }
  }
}

TEST_CASE("quantum Serre relations") {
  auto a2 = testq::a2();
  HallContext ctx(a2);
  CHECK(quantum_serre_check(ctx, 0, 1, TwistMode{true, 2}));
  CHECK(quantum_serre_check(ctx, 1, 0, TwistMode{true, 2}));
  CHECK(quantum_serre_check(ctx, 0, 1, TwistMode{false, 3}));

  // commuting pair: two vertices, no arrows
  auto disc = std::make_shared<Quiver>(std::vector<std::string>{"1", "2"},
                                       std::vector<Arrow>{});
  HallContext dctx(disc);
  CHECK(quantum_serre_check(dctx, 0, 1, TwistMode{false, 2}));
  CHECK(quantum_serre_check(dctx, 0, 1, TwistMode{true, 2}));

  // Kronecker: degree-3 relation, per prime in Z[v]/(v^2 - p)
  auto k = testq::kronecker();
  HallContext kctx(k);
  for (int p : {2, 3})
    CHECK(quantum_serre_check(kctx, 0, 1, TwistMode{false, p}));
  // symbolic mode falls back to the per-prime generic check on unstable
  // class systems and still decides the relation
  CHECK(quantum_serre_check(kctx, 0, 1, TwistMode{true, 2}));
}

TEST_CASE("aggregate classes over the Kronecker quiver") {
  auto k = testq::kronecker();
  HallContext ctx(k);
  IndecLabel e0 = build_E0(*k, 1);
  CHECK(e0.dim == DimVector{1, 1});
  for (int p : {2, 3}) {
    PrimeField f(p);
    CHECK(ctx.realize_aggregate(e0, f).size() == static_cast<size_t>(p) + 1);
    // g^{R_z}_{S1, S2} = 1 for every tube point z
    CHECK(ctx.count_for_prime({e0}, {S({1, 0})}, {S({0, 1})}, f) == 1);
  }
}

TEST_CASE("field-stability guard") {
  auto k = testq::kronecker();
  HallContext ctx(k);
  IndecLabel reg;
  reg.dim = {1, 1};
  reg.tube = TubeCoord{"0", 0, 1};
  CHECK_THROWS_WITH(ctx.hall_polynomial({reg}, {S({1, 0})}, {S({0, 1})}),
                    Catch::Matchers::ContainsSubstring("not field-stable"));
}
