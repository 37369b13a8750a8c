#pragma once

#include <vector>

#include "rootlie/rep.hpp"

namespace rootlie {

/// Bounded cochain complex of representations: terms in degrees
/// lo .. lo+terms.size()-1, differentials raising degree, dd = 0.
struct GeneralComplex {
  int lo = 0;
  std::vector<Rep> terms;
  std::vector<RepMorphism> diffs;  // diffs[i]: terms[i] -> terms[i+1]

  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }

  const Rep& term_at(int deg, const Rep& zero) const {
    if (deg < lo || deg > hi()) return zero;
    return terms[static_cast<size_t>(deg - lo)];
  }

  bool validate() const {
    for (size_t i = 0; i + 1 < diffs.size(); ++i)
      if (!compose(diffs[i + 1], diffs[i]).is_zero()) return false;
    for (const RepMorphism& d : diffs)
      if (!d.intertwines()) return false;
    return true;
  }
};

inline GeneralComplex stalk_complex(Rep m, int degree = 0) {
  GeneralComplex c;
  c.lo = degree;
  c.terms.push_back(std::move(m));
  return c;
}

inline GeneralComplex zero_complex() { return {}; }

/// X[k]: degree shift with differentials negated on odd k.
inline GeneralComplex shift(const GeneralComplex& c, int k) {
  GeneralComplex r = c;
  r.lo = c.lo - k;
  if (k % 2 != 0)
    for (RepMorphism& d : r.diffs)
      d = scaled(d, -1);
  return r;
}

/// Chain map between complexes (degreewise components).
struct ChainMap {
  const GeneralComplex* src = nullptr;
  const GeneralComplex* dst = nullptr;
  // comp[deg - src->lo] : src term -> dst term at the same degree; missing
  // degrees are zero.
  std::vector<RepMorphism> comp;
};

/// Homology H_n = ker d_n / im d_{n-1} with the induced module structure,
/// one Rep per degree of the window.
inline std::vector<Rep> homology(const GeneralComplex& c,
                                 std::shared_ptr<const Quiver> q,
                                 PrimeField f) {
  std::vector<Rep> out;
  Rep zero = Rep::zero(q, f);
  for (int deg = c.lo; deg <= c.hi(); ++deg) {
    const Rep& x = c.term_at(deg, zero);
    // kernel of the outgoing differential (identity-like if none)
    Rep ker = x;
    RepMorphism kincl = RepMorphism::identity(x);
    if (deg < c.hi()) {
      KernelCokernel kc = kernel_cokernel(c.diffs[deg - c.lo]);
      ker = kc.ker;
      kincl = kc.ker_incl;
    }
    if (deg > c.lo) {
      const RepMorphism& din = c.diffs[deg - 1 - c.lo];
      // factor the incoming differential through the kernel and take coker
      RepMorphism rho{din.src, ker, {}};
      for (int i = 0; i < q->n(); ++i) {
        auto sol = solve_affine(kincl.comp[i], din.comp[i]);
        if (!sol) throw std::logic_error("homology: image not inside kernel");
        rho.comp.push_back(sol->particular);
      }
      out.push_back(kernel_cokernel(rho).coker);
    } else {
      out.push_back(ker);
    }
  }
  return out;
}

/// Mapping cone of f: X -> Y: cone^n = X^{n+1} (+) Y^n.
inline GeneralComplex cone(const ChainMap& f, std::shared_ptr<const Quiver> q,
                           PrimeField field) {
  const GeneralComplex& x = *f.src;
  const GeneralComplex& y = *f.dst;
  Rep zero = Rep::zero(q, field);
  int lo = std::min(x.lo - 1, y.lo);
  int hi = std::max(x.hi() - 1, y.hi());
  GeneralComplex c;
  c.lo = lo;
  for (int deg = lo; deg <= hi; ++deg)
    c.terms.push_back(direct_sum(x.term_at(deg + 1, zero),
                                 y.term_at(deg, zero)));
  for (int deg = lo; deg < hi; ++deg) {
    const Rep& x1 = x.term_at(deg + 1, zero);
    const Rep& x2 = x.term_at(deg + 2, zero);
    const Rep& y1 = y.term_at(deg, zero);
    const Rep& y2 = y.term_at(deg + 1, zero);
    RepMorphism d = RepMorphism::zero(c.terms[deg - lo], c.terms[deg + 1 - lo]);
    for (int i = 0; i < q->n(); ++i) {
      // block structure: [ -d_X  0 ; f  d_Y ]
      for (int r = 0; r < x2.dim[i]; ++r)
        for (int cc = 0; cc < x1.dim[i]; ++cc) {
          int v = 0;
          if (deg + 1 >= x.lo && deg + 1 <= x.hi() - 1)
            v = field.neg(x.diffs[deg + 1 - x.lo].comp[i].at(r, cc));
          d.comp[i].at(r, cc) = v;
        }
      for (int r = 0; r < y2.dim[i]; ++r) {
        for (int cc = 0; cc < x1.dim[i]; ++cc) {
          int v = 0;
          int idx = deg + 1 - x.lo;
          if (idx >= 0 && idx < static_cast<int>(f.comp.size()))
            v = f.comp[idx].comp[i].at(r, cc);
          d.comp[i].at(x2.dim[i] + r, cc) = v;
        }
        for (int cc = 0; cc < y1.dim[i]; ++cc) {
          int v = 0;
          if (deg >= y.lo && deg <= y.hi() - 1)
            v = y.diffs[deg - y.lo].comp[i].at(r, cc);
          d.comp[i].at(x2.dim[i] + r, x1.dim[i] + cc) = v;
        }
      }
    }
    c.diffs.push_back(std::move(d));
  }
  return c;
}

/// Two-term periodic complex C0 <-> C1 with d0 d1 = d1 d0 = 0.
struct TwoPeriodicComplex {
  Rep c0, c1;
  RepMorphism d0;  // c0 -> c1
  RepMorphism d1;  // c1 -> c0

  bool validate() const {
    return d0.intertwines() && d1.intertwines() &&
           compose(d1, d0).is_zero() && compose(d0, d1).is_zero();
  }
};

inline TwoPeriodicComplex two_periodic_zero(std::shared_ptr<const Quiver> q,
                                            PrimeField f) {
  Rep z = Rep::zero(q, f);
  return {z, z, RepMorphism::zero(z, z), RepMorphism::zero(z, z)};
}

/// A module pair (M, N) as the periodic complex M (+) N[1] with zero
/// differentials.
inline TwoPeriodicComplex two_periodic_pair(const Rep& m, const Rep& n) {
  return {m, n, RepMorphism::zero(m, n), RepMorphism::zero(n, m)};
}

inline TwoPeriodicComplex shift_periodic(const TwoPeriodicComplex& c) {
  return {c.c1, c.c0, scaled(c.d1, -1), scaled(c.d0, -1)};
}

/// Fold a bounded complex into two periodic terms: C0 = even degrees,
/// C1 = odd degrees, block differentials from the original ones.
inline TwoPeriodicComplex to_two_periodic(const GeneralComplex& c,
                                          std::shared_ptr<const Quiver> q,
                                          PrimeField f) {
  Rep even = Rep::zero(q, f), odd = Rep::zero(q, f);
  std::vector<int> eoff, ooff;  // per-degree offsets into the folded parts
  DimVector ecur(q->n(), 0), ocur(q->n(), 0);
  std::vector<DimVector> offsets;  // offset vector per degree index
  for (int deg = c.lo; deg <= c.hi(); ++deg) {
    const Rep& t = c.terms[deg - c.lo];
    if (((deg % 2) + 2) % 2 == 0) {
      offsets.push_back(ecur);
      even = direct_sum(even, t);
      ecur = ecur + t.dim;
    } else {
      offsets.push_back(ocur);
      odd = direct_sum(odd, t);
      ocur = ocur + t.dim;
    }
  }
  TwoPeriodicComplex out{even, odd, RepMorphism::zero(even, odd),
                         RepMorphism::zero(odd, even)};
  for (int deg = c.lo; deg < c.hi(); ++deg) {
    const RepMorphism& d = c.diffs[deg - c.lo];
    bool from_even = ((deg % 2) + 2) % 2 == 0;
    RepMorphism& target = from_even ? out.d0 : out.d1;
    const DimVector& soff = offsets[deg - c.lo];
    const DimVector& toff = offsets[deg + 1 - c.lo];
    for (int i = 0; i < q->n(); ++i)
      for (int r = 0; r < d.dst.dim[i]; ++r)
        for (int cc = 0; cc < d.src.dim[i]; ++cc)
          target.comp[i].at(toff[i] + r, soff[i] + cc) = d.comp[i].at(r, cc);
  }
  return out;
}

/// H^0 and H^1 of a periodic complex.
inline std::pair<Rep, Rep> periodic_homology(const TwoPeriodicComplex& c) {
  auto homol = [](const RepMorphism& dout, const RepMorphism& din) {
    KernelCokernel kc = kernel_cokernel(dout);
    RepMorphism rho{din.src, kc.ker, {}};
    for (size_t i = 0; i < din.comp.size(); ++i) {
      auto sol = solve_affine(kc.ker_incl.comp[static_cast<int>(i)],
                              din.comp[static_cast<int>(i)]);
      if (!sol)
        throw std::logic_error("periodic_homology: image not inside kernel");
      rho.comp.push_back(sol->particular);
    }
    return kernel_cokernel(rho).coker;
  };
  return {homol(c.d0, c.d1), homol(c.d1, c.d0)};
}

}  // namespace rootlie
