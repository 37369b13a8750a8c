#pragma once

#include <map>
#include <vector>

#include "rootlie/complex.hpp"
#include "rootlie/rep.hpp"

namespace rootlie {

/// A finite direct sum of indecomposable projectives with its summand
/// inclusions and projections; `types[s]` is the vertex of the s-th
/// summand.
struct ProjSum {
  Rep rep;
  std::vector<int> types;
  std::vector<RepMorphism> incl, proj;
};

namespace detail {

inline const std::pair<Rep, PathBasis>& cached_projective(
    std::shared_ptr<const Quiver> q, PrimeField f, int j) {
  static thread_local std::map<std::tuple<const Quiver*, int, int>,
                               std::pair<Rep, PathBasis>>
      cache;
  auto key = std::make_tuple(q.get(), f.p(), j);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, projective_rep(q, f, j)).first;
  return it->second;
}

}  // namespace detail

inline ProjSum build_proj_sum(std::shared_ptr<const Quiver> q, PrimeField f,
                              const std::vector<int>& types) {
  ProjSum ps{Rep::zero(q, f), types, {}, {}};
  std::vector<Rep> pieces;
  for (int t : types) {
    pieces.push_back(detail::cached_projective(q, f, t).first);
    ps.rep = direct_sum(ps.rep, pieces.back());
  }
  DimVector off(q->n(), 0);
  for (const Rep& piece : pieces) {
    RepMorphism in = RepMorphism::zero(piece, ps.rep);
    RepMorphism pr = RepMorphism::zero(ps.rep, piece);
    for (int i = 0; i < q->n(); ++i)
      for (int r = 0; r < piece.dim[i]; ++r) {
        in.comp[i].at(off[i] + r, r) = 1;
        pr.comp[i].at(r, off[i] + r) = 1;
      }
    ps.incl.push_back(std::move(in));
    ps.proj.push_back(std::move(pr));
    off = off + piece.dim;
  }
  return ps;
}

/// Multiplicity vector over the indecomposable projectives P_1..P_l.
inline std::vector<int> multiplicity_vector(const ProjSum& ps, int nverts) {
  std::vector<int> e(nverts, 0);
  for (int t : ps.types) ++e[t];
  return e;
}

/// Bounded complex of projective sums; differentials raise degree and
/// satisfy dd = 0.
struct ProjComplex {
  int lo = 0;
  std::vector<ProjSum> terms;
  std::vector<RepMorphism> diffs;

  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
  bool empty() const {
    for (const ProjSum& t : terms)
      if (!t.types.empty()) return false;
    return true;
  }

  GeneralComplex general() const {
    GeneralComplex g;
    g.lo = lo;
    for (const ProjSum& t : terms) g.terms.push_back(t.rep);
    g.diffs = diffs;
    return g;
  }

  std::vector<std::vector<int>> dimension_sequence(int nverts) const {
    std::vector<std::vector<int>> e;
    for (const ProjSum& t : terms) e.push_back(multiplicity_vector(t, nverts));
    return e;
  }

  bool validate() const { return general().validate(); }
};

/// Scalar of the P_j -> P_j component of a morphism between projective
/// sums (End P_j = k for an acyclic quiver; the scalar sits at the trivial
/// path coordinate).
inline int top_scalar(const RepMorphism& component, int type) {
  return component.comp[type].at(0, 0);
}

/// Is every differential entry in the radical (no same-type component with
/// a nonzero scalar)?
inline bool is_minimal(const ProjComplex& c) {
  for (size_t n = 0; n < c.diffs.size(); ++n) {
    const ProjSum& src = c.terms[n];
    const ProjSum& dst = c.terms[n + 1];
    for (size_t s = 0; s < src.types.size(); ++s)
      for (size_t t = 0; t < dst.types.size(); ++t)
        if (src.types[s] == dst.types[t] &&
            top_scalar(compose(dst.proj[t], compose(c.diffs[n], src.incl[s])),
                       src.types[s]) != 0)
          return false;
  }
  return true;
}

struct StripResult {
  ProjComplex minimal;
  ProjComplex contractible;  // direct sum of [P -> P] pieces, same window
};

/// Split off contractible [P = P] summands by Gaussian elimination on the
/// differentials until every entry lands in the radical. Homology is
/// preserved; the deleted pairs are returned as the contractible summand.
inline StripResult strip_contractibles(const ProjComplex& input) {
  std::shared_ptr<const Quiver> q = input.terms.empty()
                                        ? nullptr
                                        : input.terms[0].rep.quiver;
  ProjComplex cur = input;
  ProjComplex contr;
  contr.lo = input.lo;
  if (q) {
    PrimeField f = input.terms[0].rep.field;
    contr.terms.assign(input.terms.size(), build_proj_sum(q, f, {}));
    for (size_t i = 0; i + 1 < input.terms.size(); ++i)
      contr.diffs.push_back(
          RepMorphism::zero(contr.terms[i].rep, contr.terms[i + 1].rep));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t n = 0; n < cur.diffs.size() && !changed; ++n) {
      ProjSum& src = cur.terms[n];
      ProjSum& dst = cur.terms[n + 1];
      for (size_t s = 0; s < src.types.size() && !changed; ++s)
        for (size_t t = 0; t < dst.types.size() && !changed; ++t) {
          if (src.types[s] != dst.types[t]) continue;
          RepMorphism comp =
              compose(dst.proj[t], compose(cur.diffs[n], src.incl[s]));
          int c = top_scalar(comp, src.types[s]);
          if (c == 0) continue;
          changed = true;
          PrimeField f = src.rep.field;
          int cinv = f.inv(c);
          // column clearing: V d iota_s = iota_t c
          RepMorphism u = compose(cur.diffs[n], src.incl[s]);
          RepMorphism delta = u - scaled(dst.incl[t], c);
          RepMorphism corr =
              compose(scaled(delta, cinv), dst.proj[t]);  // square-zero
          RepMorphism V = RepMorphism::identity(dst.rep) - corr;
          RepMorphism Vinv = RepMorphism::identity(dst.rep) + corr;
          cur.diffs[n] = compose(V, cur.diffs[n]);
          if (n + 1 < cur.diffs.size())
            cur.diffs[n + 1] = compose(cur.diffs[n + 1], Vinv);
          // row clearing: pi_t d W = c pi_s
          RepMorphism w = compose(dst.proj[t], cur.diffs[n]);
          RepMorphism delta2 = w - scaled(src.proj[s], c);
          RepMorphism corr2 = compose(scaled(src.incl[s], cinv), delta2);
          RepMorphism W = RepMorphism::identity(src.rep) - corr2;
          RepMorphism Winv = RepMorphism::identity(src.rep) + corr2;
          cur.diffs[n] = compose(cur.diffs[n], W);
          if (n >= 1) cur.diffs[n - 1] = compose(Winv, cur.diffs[n - 1]);
          // record the split pair, then delete summands s and t
          {
            std::vector<int> ct = contr.terms[n].types;
            ct.push_back(src.types[s]);
            std::vector<int> ct2 = contr.terms[n + 1].types;
            ct2.push_back(dst.types[t]);
            ProjSum ns = build_proj_sum(q, f, ct);
            ProjSum nd = build_proj_sum(q, f, ct2);
            // extend old contractible differentials, adding the c block
            auto rebuild = [&](size_t deg, const ProjSum& news) {
              contr.terms[deg] = news;
            };
            // new differential blocks
            std::vector<RepMorphism> nd_diffs;
            for (size_t i = 0; i + 1 < contr.terms.size(); ++i) {
              const ProjSum& a = (i == n) ? ns : (i == n + 1 ? nd
                                                             : contr.terms[i]);
              const ProjSum& b =
                  (i + 1 == n) ? ns : (i + 1 == n + 1 ? nd : contr.terms[i + 1]);
              RepMorphism m = RepMorphism::zero(a.rep, b.rep);
              // copy old blocks
              const ProjSum& olda = contr.terms[i];
              const ProjSum& oldb = contr.terms[i + 1];
              for (size_t ss = 0; ss < olda.types.size(); ++ss)
                for (size_t tt = 0; tt < oldb.types.size(); ++tt) {
                  RepMorphism blk = compose(
                      oldb.proj[tt], compose(contr.diffs[i], olda.incl[ss]));
                  m = m + compose(b.incl[tt], compose(blk, a.proj[ss]));
                }
              if (i == n) {
                // the freshly split [P ->c P] block sits in the new slots
                RepMorphism idblk =
                    scaled(RepMorphism::identity(
                               detail::cached_projective(q, f, src.types[s])
                                   .first),
                           c);
                m = m + compose(b.incl.back(),
                                compose(idblk, a.proj.back()));
              }
              nd_diffs.push_back(std::move(m));
            }
            rebuild(n, ns);
            rebuild(n + 1, nd);
            contr.diffs = std::move(nd_diffs);
          }
          // rebuild current terms without summands s (deg n) and t (deg n+1)
          std::vector<int> keep_src, keep_dst;
          for (size_t i = 0; i < src.types.size(); ++i)
            if (i != s) keep_src.push_back(static_cast<int>(i));
          for (size_t i = 0; i < dst.types.size(); ++i)
            if (i != t) keep_dst.push_back(static_cast<int>(i));
          auto shrink = [&](size_t deg, const std::vector<int>& keep) {
            const ProjSum& old = cur.terms[deg];
            std::vector<int> types;
            for (int i : keep) types.push_back(old.types[i]);
            ProjSum ns = build_proj_sum(q, old.rep.field, types);
            // conjugate adjacent differentials through keep maps
            if (deg < cur.diffs.size()) {
              RepMorphism nd2 =
                  RepMorphism::zero(ns.rep, cur.diffs[deg].dst);
              for (size_t ii = 0; ii < keep.size(); ++ii)
                nd2 = nd2 + compose(cur.diffs[deg],
                                    compose(old.incl[keep[ii]], ns.proj[ii]));
              cur.diffs[deg] = nd2;
            }
            if (deg >= 1) {
              RepMorphism nd2 =
                  RepMorphism::zero(cur.diffs[deg - 1].src, ns.rep);
              for (size_t ii = 0; ii < keep.size(); ++ii)
                nd2 = nd2 + compose(ns.incl[ii],
                                    compose(old.proj[keep[ii]],
                                            cur.diffs[deg - 1]));
              cur.diffs[deg - 1] = nd2;
            }
            cur.terms[deg] = ns;
          };
          shrink(n, keep_src);
          shrink(n + 1, keep_dst);
          // fix endpoint reps on the adjusted differentials
          for (size_t i = 0; i < cur.diffs.size(); ++i) {
            cur.diffs[i].src = cur.terms[i].rep;
            cur.diffs[i].dst = cur.terms[i + 1].rep;
          }
        }
    }
  }
  return {std::move(cur), std::move(contr)};
}

/// Chain map components between two complexes read as a quasi-iso test:
/// every induced homology map must be an isomorphism.
inline bool is_quasi_iso(const ChainMap& f, std::shared_ptr<const Quiver> q,
                         PrimeField field) {
  const GeneralComplex& x = *f.src;
  const GeneralComplex& y = *f.dst;
  Rep zero = Rep::zero(q, field);
  int lo = std::min(x.lo, y.lo), hi = std::max(x.hi(), y.hi());
  for (int deg = lo; deg <= hi; ++deg) {
    // kernel of outgoing differential on each side
    auto ker_of = [&](const GeneralComplex& c,
                      int d) -> std::pair<Rep, RepMorphism> {
      const Rep& t = c.term_at(d, zero);
      if (d >= c.lo && d < c.hi()) {
        KernelCokernel kc = kernel_cokernel(c.diffs[d - c.lo]);
        return {kc.ker, kc.ker_incl};
      }
      return {t, RepMorphism::identity(t)};
    };
    auto [kx, kxi] = ker_of(x, deg);
    auto [ky, kyi] = ker_of(y, deg);
    // component of f at this degree (zero when missing)
    RepMorphism fd = RepMorphism::zero(x.term_at(deg, zero),
                                       y.term_at(deg, zero));
    if (deg >= x.lo && deg - x.lo < static_cast<int>(f.comp.size()))
      fd = f.comp[deg - x.lo];
    // induced map on kernels
    RepMorphism fk{kx, ky, {}};
    for (int i = 0; i < q->n(); ++i) {
      auto sol = solve_affine(kyi.comp[i], fd.comp[i] * kxi.comp[i]);
      if (!sol) return false;  // f does not respect kernels: not a chain map
      fk.comp.push_back(sol->particular);
    }
    // quotient both sides by the incoming images and compare
    auto hom_of = [&](const GeneralComplex& c, int d, const Rep& ker,
                      const RepMorphism& kincl)
        -> std::pair<Rep, RepMorphism> {
      if (d > c.lo && d <= c.hi()) {
        const RepMorphism& din = c.diffs[d - 1 - c.lo];
        RepMorphism rho{din.src, ker, {}};
        for (int i = 0; i < q->n(); ++i) {
          auto sol = solve_affine(kincl.comp[i], din.comp[i]);
          if (!sol) throw std::logic_error("is_quasi_iso: bad complex");
          rho.comp.push_back(sol->particular);
        }
        KernelCokernel kc = kernel_cokernel(rho);
        return {kc.coker, kc.coker_proj};
      }
      return {ker, RepMorphism::identity(ker)};
    };
    auto [hx, hxp] = hom_of(x, deg, kx, kxi);
    auto [hy, hyp] = hom_of(y, deg, ky, kyi);
    if (hx.dim != hy.dim) return false;
    // induced map H(f): solve hxp-section and compose
    RepMorphism hf{hx, hy, {}};
    for (int i = 0; i < q->n(); ++i) {
      // section of hxp: columns mapping onto identity
      auto sec = solve_affine(hxp.comp[i],
                              FMatrix::identity(field, hx.dim[i]));
      if (!sec) throw std::logic_error("is_quasi_iso: projection not onto");
      hf.comp.push_back(hyp.comp[i] * (fk.comp[i] * sec->particular));
    }
    if (!hf.is_invertible()) return false;
  }
  return true;
}

/// The pullback-based projective resolution: cover the rightmost
/// non-projective term, pull back into its left neighbor, repeat; the
/// final left kernel is projective because the algebra is hereditary.
/// The result is stripped to minimal form.
inline ProjComplex projective_resolve(const GeneralComplex& input,
                                      std::shared_ptr<const Quiver> q,
                                      PrimeField f) {
  // trim zero ends
  GeneralComplex cur = input;
  while (!cur.terms.empty() && cur.terms.back().total_dim() == 0) {
    cur.terms.pop_back();
    if (!cur.diffs.empty()) cur.diffs.pop_back();
  }
  while (!cur.terms.empty() && cur.terms.front().total_dim() == 0) {
    cur.terms.erase(cur.terms.begin());
    if (!cur.diffs.empty()) cur.diffs.erase(cur.diffs.begin());
    ++cur.lo;
  }
  ProjComplex out;
  if (cur.terms.empty()) return out;

  std::vector<std::vector<int>> types_by_degree(cur.terms.size());
  // process right to left
  for (int idx = static_cast<int>(cur.terms.size()) - 1; idx >= 0; --idx) {
    Rep m = cur.terms[idx];
    ProjectiveCover pc = projective_cover(m);
    types_by_degree[idx] = pc.types;
    // outgoing differential through the cover
    if (idx + 1 < static_cast<int>(cur.terms.size()))
      cur.diffs[idx] = compose(cur.diffs[idx], pc.onto);
    cur.terms[idx] = pc.cover;
    // pull back into the left neighbor (or create the left kernel term)
    Rep left = (idx > 0) ? cur.terms[idx - 1] : Rep::zero(q, f);
    RepMorphism din = (idx > 0) ? cur.diffs[idx - 1]
                                : RepMorphism::zero(left, m);
    // X = ker( (din, -onto): left (+) cover -> m )
    Rep sum = direct_sum(left, pc.cover);
    RepMorphism phi = RepMorphism::zero(sum, m);
    for (int i = 0; i < q->n(); ++i) {
      for (int r = 0; r < m.dim[i]; ++r) {
        for (int c = 0; c < left.dim[i]; ++c)
          phi.comp[i].at(r, c) = din.comp[i].at(r, c);
        for (int c = 0; c < pc.cover.dim[i]; ++c)
          phi.comp[i].at(r, left.dim[i] + c) =
              f.neg(pc.onto.comp[i].at(r, c));
      }
    }
    KernelCokernel kc = kernel_cokernel(phi);
    Rep x = kc.ker;
    // new differential X -> cover: second block of the kernel inclusion
    RepMorphism dx = RepMorphism::zero(x, pc.cover);
    for (int i = 0; i < q->n(); ++i)
      for (int r = 0; r < pc.cover.dim[i]; ++r)
        for (int c = 0; c < x.dim[i]; ++c)
          dx.comp[i].at(r, c) = kc.ker_incl.comp[i].at(left.dim[i] + r, c);
    if (idx > 0) {
      cur.terms[idx - 1] = x;
      cur.diffs[idx - 1] = dx;
      // re-route the incoming differential of the old left term
      if (idx >= 2) {
        RepMorphism old = cur.diffs[idx - 2];
        RepMorphism lifted{old.src, x, {}};
        for (int i = 0; i < q->n(); ++i) {
          // factor (old, 0) through the kernel inclusion
          FMatrix stacked(f, sum.dim[i], old.src.dim[i]);
          for (int r = 0; r < left.dim[i]; ++r)
            for (int c = 0; c < old.src.dim[i]; ++c)
              stacked.at(r, c) = old.comp[i].at(r, c);
          auto sol = solve_affine(kc.ker_incl.comp[i], stacked);
          if (!sol)
            throw std::logic_error("projective_resolve: lift failed");
          lifted.comp.push_back(sol->particular);
        }
        cur.diffs[idx - 2] = lifted;
      }
    } else {
      // leftmost step: x = ker(onto) is projective; match it to a sum
      std::vector<int> ktypes;
      std::vector<RepMorphism> pieces;
      for (Summand& s : decompose_summands(x)) {
        int type = -1;
        std::optional<RepMorphism> iso;
        for (int j = 0; j < q->n(); ++j) {
          const Rep& pj = detail::cached_projective(q, f, j).first;
          if (pj.dim == s.piece.dim) {
            iso = find_isomorphism(pj, s.piece);
            if (iso) { type = j; break; }
          }
        }
        if (type < 0)
          throw std::logic_error(
              "projective_resolve: kernel is not projective");
        ktypes.push_back(type);
        pieces.push_back(compose(s.incl, *iso));  // P_type -> x
      }
      if (!ktypes.empty()) {
        ProjSum ks = build_proj_sum(q, f, ktypes);
        RepMorphism iso = RepMorphism::zero(ks.rep, x);
        for (size_t s = 0; s < pieces.size(); ++s)
          iso = iso + compose(pieces[s], ks.proj[s]);
        // prepend the kernel term
        types_by_degree.insert(types_by_degree.begin(), ktypes);
        cur.terms.insert(cur.terms.begin(), ks.rep);
        cur.diffs.insert(cur.diffs.begin(), compose(dx, iso));
        --cur.lo;
      }
    }
  }
  out.lo = cur.lo;
  for (size_t i = 0; i < cur.terms.size(); ++i) {
    out.terms.push_back(build_proj_sum(q, f, types_by_degree[i]));
    // terms built by projective covers are already in standard form
  }
  out.diffs = cur.diffs;
  for (size_t i = 0; i < out.diffs.size(); ++i) {
    out.diffs[i].src = out.terms[i].rep;
    out.diffs[i].dst = out.terms[i + 1].rep;
  }
  StripResult sr = strip_contractibles(out);
  return sr.minimal;
}

}  // namespace rootlie
