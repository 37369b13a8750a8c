#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "rootlie/proj_complex.hpp"

using namespace rootlie;

namespace {

Rep simple(std::shared_ptr<const Quiver> q, PrimeField f, int i) {
  DimVector d(q->n(), 0);
  d[i] = 1;
  return Rep::make(q, f, d);
}

Rep p12(std::shared_ptr<const Quiver> q, PrimeField f) {
  Rep r = Rep::make(q, f, {1, 1});
  r.mats[0].at(0, 0) = 1;
  return r;
}

/// deterministic random bounded complex over a quiver: pick dims, fill
/// differentials inside the hom space so that dd = 0 by composition fixes
GeneralComplex random_complex(std::shared_ptr<const Quiver> q, PrimeField f,
                              uint64_t seed, int max_len = 3,
                              int max_total = 8) {
  rootlie::detail::Rng rng(seed);
  int len = 1 + rng.below(max_len);
  GeneralComplex c;
  c.lo = -rng.below(2);
  int budget = max_total;
  for (int t = 0; t < len; ++t) {
    DimVector d(q->n(), 0);
    for (int i = 0; i < q->n(); ++i) {
      int v = rng.below(3) % (budget + 1);
      v = std::min(v, budget);
      d[i] = v;
      budget -= v;
    }
    c.terms.push_back(Rep::make(q, f, d));
    // random structure maps
    Rep& r = c.terms.back();
    for (FMatrix& m : r.mats)
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rng.below(f.p());
  }
  // differentials: random elements of Hom, then zero out failures of dd=0
  for (size_t t = 0; t + 1 < c.terms.size(); ++t) {
    std::vector<RepMorphism> basis = hom_space(c.terms[t], c.terms[t + 1]);
    RepMorphism d = RepMorphism::zero(c.terms[t], c.terms[t + 1]);
    for (const RepMorphism& b : basis)
      d = d + scaled(b, rng.below(f.p()));
    c.diffs.push_back(d);
    if (t >= 1 && !compose(c.diffs[t], c.diffs[t - 1]).is_zero()) {
      // retry with d = 0 to keep dd = 0 (cheap but sufficient variety)
      c.diffs[t] = RepMorphism::zero(c.terms[t], c.terms[t + 1]);
    }
  }
  return c;
}

ProjComplex random_proj_complex(std::shared_ptr<const Quiver> q,
                                PrimeField f, uint64_t seed) {
  rootlie::detail::Rng rng(seed);
  int len = 2;
  ProjComplex c;
  c.lo = 0;
  for (int t = 0; t < len; ++t) {
    std::vector<int> types;
    int count = 1 + rng.below(2);
    for (int s2 = 0; s2 < count; ++s2) types.push_back(rng.below(q->n()));
    c.terms.push_back(build_proj_sum(q, f, types));
  }
  for (size_t t = 0; t + 1 < c.terms.size(); ++t) {
    std::vector<RepMorphism> basis =
        hom_space(c.terms[t].rep, c.terms[t + 1].rep);
    RepMorphism d = RepMorphism::zero(c.terms[t].rep, c.terms[t + 1].rep);
    for (const RepMorphism& b : basis) d = d + scaled(b, rng.below(f.p()));
    c.diffs.push_back(d);
  }
  return c;
}

}  // namespace

TEST_CASE("homology of basic complexes") {
  auto q = testq::a2();
  PrimeField f2(2);
  Rep s1 = simple(q, f2, 0), s2 = simple(q, f2, 1), p = p12(q, f2);
  auto [p2rep, pb2] = projective_rep(q, f2, 1);

  // radical inclusion P2 -> P1 in degrees -1, 0 has H0 = S1, H-1 = 0
  GeneralComplex c;
  c.lo = -1;
  c.terms = {p2rep, p};
  std::vector<RepMorphism> hs = hom_space(p2rep, p);
  REQUIRE(hs.size() == 1);
  c.diffs = {hs[0]};
  REQUIRE(c.validate());
  std::vector<Rep> h = homology(c, q, f2);
  CHECK(h[0].total_dim() == 0);
  CHECK(is_isomorphic(h[1], s1));

  // zero differentials: homology = terms
  GeneralComplex z;
  z.lo = 0;
  z.terms = {s1, s2};
  z.diffs = {RepMorphism::zero(s1, s2)};
  std::vector<Rep> hz = homology(z, q, f2);
  CHECK(is_isomorphic(hz[0], s1));
  CHECK(is_isomorphic(hz[1], s2));

  // identity complex is exact
  GeneralComplex e;
  e.lo = 0;
  e.terms = {p, p};
  e.diffs = {RepMorphism::identity(p)};
  for (const Rep& hr : homology(e, q, f2)) CHECK(hr.total_dim() == 0);
}

TEST_CASE("cone and shift") {
  auto q = testq::a2();
  PrimeField f2(2);
  Rep s1 = simple(q, f2, 0), p = p12(q, f2);

  GeneralComplex x = stalk_complex(p), y = stalk_complex(s1);
  // cone of zero: X[1] + Y
  ChainMap zero{&x, &y, {RepMorphism::zero(p, s1)}};
  GeneralComplex cz = cone(zero, q, f2);
  std::vector<Rep> h = homology(cz, q, f2);
  REQUIRE(h.size() == 2);
  CHECK(is_isomorphic(h[0], p));   // degree -1: X[1]
  CHECK(is_isomorphic(h[1], s1));  // degree 0: Y

  // cone of the identity is contractible
  ChainMap idm{&x, &x, {RepMorphism::identity(p)}};
  for (const Rep& hr : homology(cone(idm, q, f2), q, f2))
    CHECK(hr.total_dim() == 0);

  // cone of the projection P12 -> S1 has homology S2 in one degree
  ChainMap pr{&x, &y, {hom_space(p, s1)[0]}};
  GeneralComplex cp = cone(pr, q, f2);
  std::vector<Rep> hp = homology(cp, q, f2);
  int nonzero = 0;
  for (const Rep& hr : hp)
    if (hr.total_dim() > 0) {
      ++nonzero;
      CHECK(is_isomorphic(hr, simple(q, f2, 1)));
    }
  CHECK(nonzero == 1);

  // shift: negates differentials on odd shifts, moves degrees
  GeneralComplex sh = shift(x, 1);
  CHECK(sh.lo == -1);
  CHECK(shift(shift(x, 1), -1).lo == x.lo);
}

TEST_CASE("strip contractibles") {
  auto q = testq::a2();
  PrimeField f2(2);

  // [P1 -> P1] with the identity: everything is contractible
  ProjComplex triv;
  triv.lo = 0;
  triv.terms = {build_proj_sum(q, f2, {0}), build_proj_sum(q, f2, {0})};
  triv.diffs = {RepMorphism::identity(triv.terms[0].rep)};
  StripResult sr = strip_contractibles(triv);
  CHECK(sr.minimal.empty());
  CHECK(sr.contractible.terms[0].types == std::vector<int>{0});
  CHECK(is_minimal(sr.minimal));

  // radical map P2 -> P1 is already minimal
  ProjComplex rad;
  rad.lo = 0;
  rad.terms = {build_proj_sum(q, f2, {1}), build_proj_sum(q, f2, {0})};
  rad.diffs = {hom_space(rad.terms[0].rep, rad.terms[1].rep)[0]};
  REQUIRE(!rad.diffs[0].is_zero());
  StripResult sr2 = strip_contractibles(rad);
  CHECK(sr2.minimal.terms[0].types == std::vector<int>{1});
  CHECK(sr2.contractible.empty());
  CHECK(is_minimal(sr2.minimal));

  // direct sum of both: splits exactly into the two previous answers
  ProjComplex both;
  both.lo = 0;
  both.terms = {build_proj_sum(q, f2, {1, 0}), build_proj_sum(q, f2, {0, 0})};
  RepMorphism d = RepMorphism::zero(both.terms[0].rep, both.terms[1].rep);
  // block: P2 -> P1 radical into first target, P1 -> P1 identity in second
  RepMorphism radmap = hom_space(rad.terms[0].rep, rad.terms[1].rep)[0];
  d = d + compose(both.terms[1].incl[0],
                  compose(radmap, both.terms[0].proj[0]));
  d = d + compose(both.terms[1].incl[1],
                  compose(RepMorphism::identity(sr.contractible.terms.empty()
                                                    ? both.terms[0].incl[1].src
                                                    : both.terms[0].incl[1].src),
                          both.terms[0].proj[1]));
  both.diffs = {d};
  REQUIRE(both.validate());
  StripResult sr3 = strip_contractibles(both);
  CHECK(sr3.minimal.terms[0].types == std::vector<int>{1});
  CHECK(sr3.minimal.terms[1].types == std::vector<int>{0});
  CHECK(sr3.contractible.terms[0].types == std::vector<int>{0});
  REQUIRE(sr3.minimal.validate());

  // homology preserved
  std::vector<Rep> hb = homology(both.general(), q, f2);
  std::vector<Rep> hm = homology(sr3.minimal.general(), q, f2);
  REQUIRE(hb.size() == hm.size());
  for (size_t i = 0; i < hb.size(); ++i)
    CHECK(is_isomorphic(hb[i], hm[i]));

  // idempotent
  StripResult sr4 = strip_contractibles(sr3.minimal);
  CHECK(sr4.contractible.empty());
}

TEST_CASE("quasi-isomorphism testing") {
  auto q = testq::a2();
  PrimeField f2(2);
  Rep p = p12(q, f2);
  GeneralComplex x = stalk_complex(p);

  ChainMap idm{&x, &x, {RepMorphism::identity(p)}};
  CHECK(is_quasi_iso(idm, q, f2));

  ChainMap zm{&x, &x, {RepMorphism::zero(p, p)}};
  CHECK_FALSE(is_quasi_iso(zm, q, f2));

  // projection [P2 -> P1] + [P = P] -> [P2 -> P1] is a quasi-iso
  ProjComplex rad;
  rad.lo = 0;
  rad.terms = {build_proj_sum(q, f2, {1}), build_proj_sum(q, f2, {0})};
  rad.diffs = {hom_space(rad.terms[0].rep, rad.terms[1].rep)[0]};
  ProjComplex big;
  big.lo = 0;
  big.terms = {build_proj_sum(q, f2, {1, 0}), build_proj_sum(q, f2, {0, 0})};
  RepMorphism d = RepMorphism::zero(big.terms[0].rep, big.terms[1].rep);
  d = d + compose(big.terms[1].incl[0],
                  compose(rad.diffs[0], big.terms[0].proj[0]));
  d = d + compose(big.terms[1].incl[1],
                  compose(RepMorphism::identity(big.terms[0].incl[1].src),
                          big.terms[0].proj[1]));
  big.diffs = {d};
  GeneralComplex gb = big.general(), gr = rad.general();
  ChainMap proj{&gb, &gr, {}};
  proj.comp.push_back(compose(RepMorphism::identity(rad.terms[0].rep),
                              big.terms[0].proj[0]));
  // degree 1 component must commute with differentials: use proj composed
  // with the V-corrections implicitly; here the naive projection works
  // because the extra summand maps into the identity block only.
  proj.comp.push_back(big.terms[1].proj[0]);
  bool chain_ok = true;
  RepMorphism lhs = compose(proj.comp[1], big.diffs[0]);
  RepMorphism rhs = compose(rad.diffs[0], proj.comp[0]);
  for (size_t i = 0; i < lhs.comp.size(); ++i)
    if (!(lhs.comp[i] == rhs.comp[i])) chain_ok = false;
  REQUIRE(chain_ok);
  CHECK(is_quasi_iso(proj, q, f2));
}

TEST_CASE("projective resolution") {
  auto q = testq::a2();
  PrimeField f2(2);
  Rep s1 = simple(q, f2, 0), p = p12(q, f2);

  // stalk S1 resolves to the minimal [P2 -> P1]
  ProjComplex r = projective_resolve(stalk_complex(s1), q, f2);
  REQUIRE(r.terms.size() == 2);
  CHECK(r.terms[0].types == std::vector<int>{1});
  CHECK(r.terms[1].types == std::vector<int>{0});
  CHECK(is_minimal(r));
  std::vector<Rep> h = homology(r.general(), q, f2);
  CHECK(is_isomorphic(h.back(), s1));

  // stalk P12 resolves to itself
  ProjComplex rp = projective_resolve(stalk_complex(p), q, f2);
  REQUIRE(rp.terms.size() == 1);
  CHECK(rp.terms[0].types == std::vector<int>{0});

  // zero complex resolves to zero
  CHECK(projective_resolve(zero_complex(), q, f2).terms.empty());
}

TEST_CASE("resolution is quasi-isomorphic to the input on random complexes") {
  PrimeField f2(2);
  int checked = 0;
  for (auto q : {testq::a2(), testq::a3()}) {
    for (uint64_t seed = 1; seed <= 25; ++seed) {
      GeneralComplex c = random_complex(q, f2, seed * 7919);
      if (!c.validate()) continue;
      ProjComplex r = projective_resolve(c, q, f2);
      REQUIRE(r.validate());
      CHECK(is_minimal(r));
      // same homology classes degree by degree
      std::vector<Rep> hc = homology(c, q, f2);
      std::vector<Rep> hr = homology(r.general(), q, f2);
      int lo = std::min(c.lo, r.lo), hi = std::max(c.hi(), r.hi());
      for (int deg = lo; deg <= hi; ++deg) {
        Rep zc = Rep::zero(q, f2);
        const Rep& a = (deg >= c.lo && deg <= c.hi())
                           ? hc[deg - c.lo] : zc;
        const Rep& b = (deg >= r.lo && deg <= r.hi())
                           ? hr[deg - r.lo] : zc;
        CHECK(a.dim == b.dim);
        if (a.total_dim() > 0) CHECK(is_isomorphic(a, b));
      }
      ++checked;
    }
  }
  CHECK(checked >= 40);
}

TEST_CASE("two-periodic folding") {
  auto q = testq::a2();
  PrimeField f2(2);
  Rep s1 = simple(q, f2, 0), s2 = simple(q, f2, 1), p = p12(q, f2);

  // degrees 0,1 with map d: folds to (C0 = X0, C1 = X1, d0 = d, d1 = 0)
  GeneralComplex c;
  c.lo = 0;
  c.terms = {s2, p};
  std::vector<RepMorphism> hs = hom_space(s2, p);
  REQUIRE(hs.size() == 1);
  c.diffs = {hs[0]};
  TwoPeriodicComplex t = to_two_periodic(c, q, f2);
  REQUIRE(t.validate());
  CHECK(t.c0.dim == s2.dim);
  CHECK(t.c1.dim == p.dim);
  CHECK(t.d1.is_zero());

  // [P2 -> P1] in degrees -1, 0: periodic homology H0 = S1, H1 = 0
  auto [p2rep, pb] = projective_rep(q, f2, 1);
  GeneralComplex res;
  res.lo = -1;
  res.terms = {p2rep, p};
  res.diffs = {hom_space(p2rep, p)[0]};
  TwoPeriodicComplex tp = to_two_periodic(res, q, f2);
  REQUIRE(tp.validate());
  auto [h0, h1] = periodic_homology(tp);
  CHECK(is_isomorphic(h0, s1));
  CHECK(h1.total_dim() == 0);

  // folding commutes with homology in the graded sense
  std::vector<Rep> hg = homology(res, q, f2);
  DimVector heven(q->n(), 0), hodd(q->n(), 0);
  for (int deg = res.lo; deg <= res.hi(); ++deg) {
    if (((deg % 2) + 2) % 2 == 0) heven = heven + hg[deg - res.lo].dim;
    else hodd = hodd + hg[deg - res.lo].dim;
  }
  CHECK(h0.dim == heven);
  CHECK(h1.dim == hodd);

  // zero folds to zero
  TwoPeriodicComplex tz = to_two_periodic(zero_complex(), q, f2);
  CHECK(tz.c0.total_dim() + tz.c1.total_dim() == 0);
}

TEST_CASE("minimal complexes: random chain maps, quasi-iso iff iso") {
  // randomly perturbed minimal complexes: every chain self-map that is a
  // quasi-isomorphism must already be an isomorphism (and conversely)
  PrimeField f2(2);
  for (auto q : {testq::a2(), testq::a3()}) {
    for (uint64_t seed = 1; seed <= 8; ++seed) {
      ProjComplex pc = random_proj_complex(q, f2, seed * 104729);
      if (!pc.validate()) continue;
      ProjComplex m = strip_contractibles(pc).minimal;
      if (m.terms.size() < 2 || m.general().terms[0].total_dim() == 0)
        continue;
      GeneralComplex g = m.general();
      std::vector<std::vector<RepMorphism>> bases;
      long long total = 1;
      bool small = true;
      for (size_t t = 0; t < g.terms.size(); ++t) {
        bases.push_back(hom_space(g.terms[t], g.terms[t]));
        for (size_t k = 0; k < bases.back().size(); ++k) total *= 2;
        if (total > 4096) small = false;
      }
      if (!small) continue;
      for (long long code = 0; code < total; ++code) {
        long long x = code;
        ChainMap cm{&g, &g, {}};
        for (size_t t = 0; t < g.terms.size(); ++t) {
          RepMorphism comp = RepMorphism::zero(g.terms[t], g.terms[t]);
          for (const RepMorphism& b : bases[t]) {
            if (x & 1) comp = comp + b;
            x >>= 1;
          }
          cm.comp.push_back(std::move(comp));
        }
        bool chain = true;
        for (size_t t = 0; t + 1 < g.terms.size() && chain; ++t) {
          RepMorphism l = compose(cm.comp[t + 1], g.diffs[t]);
          RepMorphism r = compose(g.diffs[t], cm.comp[t]);
          for (size_t i = 0; i < l.comp.size(); ++i)
            if (!(l.comp[i] == r.comp[i])) chain = false;
        }
        if (!chain) continue;
        bool iso = true;
        for (const RepMorphism& c : cm.comp)
          if (!c.is_invertible()) iso = false;
        CHECK(is_quasi_iso(cm, q, f2) == iso);
      }
    }
  }
}

TEST_CASE("minimal complexes: quasi-iso chain maps are isomorphisms") {
  auto q = testq::a2();
  PrimeField f3(3);
  // minimal complex [P2 -> P1]; random chain endomaps that are quasi-isos
  // must be isomorphisms (checked by exhausting small chain maps)
  ProjComplex rad;
  rad.lo = 0;
  rad.terms = {build_proj_sum(q, f3, {1}), build_proj_sum(q, f3, {0})};
  rad.diffs = {hom_space(rad.terms[0].rep, rad.terms[1].rep)[0]};
  GeneralComplex g = rad.general();
  // chain maps: pairs (a, b) in End(P2) x End(P1) with b d = d a
  std::vector<RepMorphism> e0 = hom_space(g.terms[0], g.terms[0]);
  std::vector<RepMorphism> e1 = hom_space(g.terms[1], g.terms[1]);
  REQUIRE(e0.size() == 1);
  REQUIRE(e1.size() == 1);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      RepMorphism fa = scaled(e0[0], a), fb = scaled(e1[0], b);
      RepMorphism l = compose(fb, g.diffs[0]), r = compose(g.diffs[0], fa);
      bool chain = true;
      for (size_t i = 0; i < l.comp.size(); ++i)
        if (!(l.comp[i] == r.comp[i])) chain = false;
      if (!chain) continue;
      ChainMap cm{&g, &g, {fa, fb}};
      bool qiso = is_quasi_iso(cm, q, f3);
      bool iso = fa.is_invertible() && fb.is_invertible();
      CHECK(qiso == iso);
    }
}
