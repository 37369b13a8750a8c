#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rootlie/matrix.hpp"
#include "rootlie/quiver.hpp"

namespace rootlie {

/// A representation of a quiver over a prime field: one matrix per arrow,
/// of shape d_{t(h)} x d_{s(h)}.
struct Rep {
  std::shared_ptr<const Quiver> quiver;
  PrimeField field;
  DimVector dim;
  std::vector<FMatrix> mats;  // indexed like quiver->arrows()

  static Rep zero(std::shared_ptr<const Quiver> q, PrimeField f) {
    return make(std::move(q), f, DimVector(static_cast<size_t>(0), 0));
  }

  static Rep make(std::shared_ptr<const Quiver> q, PrimeField f, DimVector d) {
    if (static_cast<int>(d.size()) != q->n()) d.resize(q->n(), 0);
    Rep r{q, f, std::move(d), {}};
    for (const Arrow& a : q->arrows())
      r.mats.emplace_back(f, r.dim[a.dst], r.dim[a.src]);
    return r;
  }

  int total_dim() const { return height(dim); }
  bool is_zero_rep() const { return total_dim() == 0; }

  /// Matrix of the path word (arrow indices in application order).
  FMatrix path_matrix(const std::vector<int>& word) const {
    if (word.empty())
      throw std::invalid_argument("path_matrix: empty word");
    FMatrix m = mats[word[0]];
    for (size_t i = 1; i < word.size(); ++i) m = mats[word[i]] * m;
    return m;
  }

  /// Shape consistency plus all relation equations sum lambda_i x_{p_i} = 0.
  bool validate() const {
    for (size_t h = 0; h < mats.size(); ++h) {
      const Arrow& a = quiver->arrows()[h];
      if (mats[h].rows() != dim[a.dst] || mats[h].cols() != dim[a.src])
        return false;
    }
    for (const Relation& rel : quiver->relations()) {
      if (rel.empty()) continue;
      int src = quiver->arrows()[rel[0].arrows.front()].src;
      int dst = quiver->arrows()[rel[0].arrows.back()].dst;
      FMatrix acc(field, dim[dst], dim[src]);
      for (const RelationTerm& t : rel)
        acc = acc + path_matrix(t.arrows).scaled(t.coeff);
      if (!acc.is_zero()) return false;
    }
    return true;
  }
};

inline Rep direct_sum(const Rep& a, const Rep& b) {
  Rep r = Rep::make(a.quiver, a.field, a.dim + b.dim);
  for (size_t h = 0; h < r.mats.size(); ++h) {
    const Arrow& ar = a.quiver->arrows()[h];
    for (int i = 0; i < a.dim[ar.dst]; ++i)
      for (int j = 0; j < a.dim[ar.src]; ++j)
        r.mats[h].at(i, j) = a.mats[h].at(i, j);
    for (int i = 0; i < b.dim[ar.dst]; ++i)
      for (int j = 0; j < b.dim[ar.src]; ++j)
        r.mats[h].at(a.dim[ar.dst] + i, a.dim[ar.src] + j) = b.mats[h].at(i, j);
  }
  return r;
}

/// Morphism of representations: per-vertex matrices with commuting squares
/// phi_{t(h)} x_h = x'_h phi_{s(h)}.
struct RepMorphism {
  Rep src, dst;
  std::vector<FMatrix> comp;  // comp[i]: dim dst[i] x dim src[i]

  static RepMorphism zero(const Rep& a, const Rep& b) {
    RepMorphism m{a, b, {}};
    for (int i = 0; i < a.quiver->n(); ++i)
      m.comp.emplace_back(a.field, b.dim[i], a.dim[i]);
    return m;
  }

  static RepMorphism identity(const Rep& a) {
    RepMorphism m{a, a, {}};
    for (int i = 0; i < a.quiver->n(); ++i)
      m.comp.push_back(FMatrix::identity(a.field, a.dim[i]));
    return m;
  }

  bool is_zero() const {
    for (const FMatrix& c : comp)
      if (!c.is_zero()) return false;
    return true;
  }

  bool intertwines() const {
    for (size_t h = 0; h < src.mats.size(); ++h) {
      const Arrow& a = src.quiver->arrows()[h];
      if (!(comp[a.dst] * src.mats[h] == dst.mats[h] * comp[a.src]))
        return false;
    }
    return true;
  }

  bool is_invertible() const {
    for (const FMatrix& c : comp)
      if (!c.is_invertible()) return false;
    return true;
  }

  RepMorphism inverse() const {
    RepMorphism m{dst, src, {}};
    for (const FMatrix& c : comp) m.comp.push_back(*c.inverse());
    return m;
  }
};

inline RepMorphism compose(const RepMorphism& g, const RepMorphism& f) {
  // g after f
  RepMorphism m{f.src, g.dst, {}};
  for (size_t i = 0; i < f.comp.size(); ++i)
    m.comp.push_back(g.comp[i] * f.comp[i]);
  return m;
}

inline RepMorphism operator+(const RepMorphism& a, const RepMorphism& b) {
  RepMorphism m{a.src, a.dst, {}};
  for (size_t i = 0; i < a.comp.size(); ++i)
    m.comp.push_back(a.comp[i] + b.comp[i]);
  return m;
}

inline RepMorphism operator-(const RepMorphism& a, const RepMorphism& b) {
  RepMorphism m{a.src, a.dst, {}};
  for (size_t i = 0; i < a.comp.size(); ++i)
    m.comp.push_back(a.comp[i] - b.comp[i]);
  return m;
}

inline RepMorphism scaled(const RepMorphism& a, int c) {
  RepMorphism m{a.src, a.dst, {}};
  for (const FMatrix& x : a.comp) m.comp.push_back(x.scaled(c));
  return m;
}

/// Basis of Hom(X, Y): kernel of the intertwiner system, one unknown per
/// entry of each vertex component.
inline std::vector<RepMorphism> hom_space(const Rep& x, const Rep& y) {
  if (x.quiver.get() != y.quiver.get() || x.field != y.field)
    throw std::invalid_argument("hom_space: mismatched quiver or field");
  const Quiver& q = *x.quiver;
  // unknown layout: per vertex i, the entries of phi_i row-major
  std::vector<int> offset(q.n() + 1, 0);
  for (int i = 0; i < q.n(); ++i)
    offset[i + 1] = offset[i] + y.dim[i] * x.dim[i];
  int nvars = offset[q.n()];
  int neqs = 0;
  for (const Arrow& a : q.arrows()) neqs += y.dim[a.dst] * x.dim[a.src];
  FMatrix sys(x.field, std::max(neqs, 1), nvars);
  int row = 0;
  for (size_t h = 0; h < q.arrows().size(); ++h) {
    const Arrow& a = q.arrows()[h];
    // phi_dst * x_h - y_h * phi_src = 0, one equation per (r, c)
    for (int r = 0; r < y.dim[a.dst]; ++r)
      for (int c = 0; c < x.dim[a.src]; ++c) {
        for (int k = 0; k < x.dim[a.dst]; ++k)
          sys.at(row, offset[a.dst] + r * x.dim[a.dst] + k) = x.field.add(
              sys.at(row, offset[a.dst] + r * x.dim[a.dst] + k),
              x.mats[h].at(k, c));
        for (int k = 0; k < y.dim[a.src]; ++k)
          sys.at(row, offset[a.src] + k * x.dim[a.src] + c) = x.field.sub(
              sys.at(row, offset[a.src] + k * x.dim[a.src] + c),
              y.mats[h].at(r, k));
        ++row;
      }
  }
  FMatrix ker = rank_kernel(sys).kernel;
  std::vector<RepMorphism> basis;
  for (int b = 0; b < ker.cols(); ++b) {
    RepMorphism m = RepMorphism::zero(x, y);
    for (int i = 0; i < q.n(); ++i)
      for (int r = 0; r < y.dim[i]; ++r)
        for (int c = 0; c < x.dim[i]; ++c)
          m.comp[i].at(r, c) = ker.at(offset[i] + r * x.dim[i] + c, b);
    basis.push_back(std::move(m));
  }
  return basis;
}

inline int dim_hom(const Rep& x, const Rep& y) {
  return static_cast<int>(hom_space(x, y).size());
}

/// dim Ext^1(X, Y) for a relation-free quiver, via the homological identity
/// dim Hom - dim Ext^1 = <dim X, dim Y>.
inline int dim_ext1(const Rep& x, const Rep& y) {
  long long e = euler_form(*x.quiver, x.dim, y.dim);
  return static_cast<int>(dim_hom(x, y) - e);
}

struct KernelCokernel {
  Rep ker;
  RepMorphism ker_incl;    // ker -> X
  Rep coker;
  RepMorphism coker_proj;  // Y -> coker
};

/// Kernel and cokernel of a morphism with induced representation structure:
/// 0 -> ker -> X -> Y -> coker -> 0 exact at every vertex.
inline KernelCokernel kernel_cokernel(const RepMorphism& f) {
  const Quiver& q = *f.src.quiver;
  PrimeField F = f.src.field;

  // kernel spaces per vertex
  std::vector<FMatrix> kbasis;
  DimVector kdim(q.n());
  for (int i = 0; i < q.n(); ++i) {
    kbasis.push_back(rank_kernel(f.comp[i]).kernel);
    kdim[i] = kbasis[i].cols();
  }
  Rep ker = Rep::make(f.src.quiver, F, kdim);
  for (size_t h = 0; h < q.arrows().size(); ++h) {
    const Arrow& a = q.arrows()[h];
    // x_h maps ker_s into ker_t; solve K_t * A = x_h * K_s
    FMatrix rhs = f.src.mats[h] * kbasis[a.src];
    auto sol = solve_affine(kbasis[a.dst], rhs);
    if (!sol)
      throw std::logic_error("kernel_cokernel: kernel not invariant");
    ker.mats[h] = sol->particular;
  }
  RepMorphism kincl{ker, f.src, {}};
  for (int i = 0; i < q.n(); ++i) kincl.comp.push_back(kbasis[i]);

  // cokernel: pick a complement of im f_i inside Y_i
  std::vector<FMatrix> proj, section;
  DimVector cdim(q.n());
  for (int i = 0; i < q.n(); ++i) {
    int dy = f.dst.dim[i];
    // image basis: pivot columns of f_i
    FMatrix fi = f.comp[i];
    FMatrix red = fi;
    std::vector<int> piv = red.rref();
    FMatrix basis(F, dy, dy);
    int col = 0;
    for (int c : piv) {
      for (int r = 0; r < dy; ++r) basis.at(r, col) = fi.at(r, c);
      ++col;
    }
    int im_rank = col;
    // extend by standard vectors to a full basis
    for (int e = 0; e < dy && col < dy; ++e) {
      FMatrix trial = basis;
      trial.at(e, col) = 1;
      FMatrix lead(F, dy, col + 1);
      for (int r = 0; r < dy; ++r)
        for (int c = 0; c <= col; ++c) lead.at(r, c) = trial.at(r, c);
      if (lead.rank() == col + 1) {
        basis = trial;
        ++col;
      }
    }
    cdim[i] = dy - im_rank;
    FMatrix binv = *basis.inverse();
    FMatrix pr(F, cdim[i], dy);
    for (int r = 0; r < cdim[i]; ++r)
      for (int c = 0; c < dy; ++c) pr.at(r, c) = binv.at(im_rank + r, c);
    FMatrix sec(F, dy, cdim[i]);
    for (int r = 0; r < dy; ++r)
      for (int c = 0; c < cdim[i]; ++c) sec.at(r, c) = basis.at(r, im_rank + c);
    proj.push_back(std::move(pr));
    section.push_back(std::move(sec));
  }
  Rep coker = Rep::make(f.src.quiver, F, cdim);
  for (size_t h = 0; h < q.arrows().size(); ++h) {
    const Arrow& a = q.arrows()[h];
    coker.mats[h] = proj[a.dst] * (f.dst.mats[h] * section[a.src]);
  }
  RepMorphism cproj{f.dst, coker, {}};
  for (int i = 0; i < q.n(); ++i) cproj.comp.push_back(proj[i]);

  return {std::move(ker), std::move(kincl), std::move(coker), std::move(cproj)};
}

namespace detail {

/// Deterministic xorshift for representative sampling and iso search.
struct Rng {
  uint64_t s;
  explicit Rng(uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
};

inline uint64_t seed_of(const DimVector& d, int p, uint64_t salt) {
  uint64_t h = 1469598103934665603ull ^ salt;
  for (int x : d) h = (h ^ static_cast<uint64_t>(x + 7)) * 1099511628211ull;
  return (h ^ static_cast<uint64_t>(p)) * 1099511628211ull;
}

}  // namespace detail

/// Search for an invertible element in the span of a Hom basis: random
/// linear combinations first, exhaustive enumeration as the exact fallback.
inline std::optional<RepMorphism> find_invertible(
    const std::vector<RepMorphism>& basis, long long budget = 1 << 21) {
  if (basis.empty()) return std::nullopt;
  int p = basis[0].src.field.p();
  int k = static_cast<int>(basis.size());
  detail::Rng rng(detail::seed_of(basis[0].src.dim, p, 0xabcdef));
  for (int trial = 0; trial < 40; ++trial) {
    RepMorphism m = RepMorphism::zero(basis[0].src, basis[0].dst);
    for (int i = 0; i < k; ++i) m = m + scaled(basis[i], rng.below(p));
    if (m.is_invertible()) return m;
  }
  // exhaustive over all p^k combinations
  long long total = 1;
  for (int i = 0; i < k; ++i) {
    total *= p;
    if (total > budget)
      throw std::runtime_error("find_invertible: budget exceeded (|Hom| = p^" +
                               std::to_string(k) + ")");
  }
  std::vector<int> c(k, 0);
  for (long long code = 1; code < total; ++code) {
    long long t = code;
    for (int i = 0; i < k; ++i) {
      c[i] = static_cast<int>(t % p);
      t /= p;
    }
    RepMorphism m = RepMorphism::zero(basis[0].src, basis[0].dst);
    for (int i = 0; i < k; ++i)
      if (c[i]) m = m + scaled(basis[i], c[i]);
    if (m.is_invertible()) return m;
  }
  return std::nullopt;
}

inline std::optional<RepMorphism> find_isomorphism(const Rep& x, const Rep& y) {
  if (x.dim != y.dim) return std::nullopt;
  if (x.total_dim() == 0) return RepMorphism::identity(x);
  return find_invertible(hom_space(x, y));
}

inline bool is_isomorphic(const Rep& x, const Rep& y) {
  return find_isomorphism(x, y).has_value();
}

/// All elements of the span of a morphism basis (used for End enumeration).
/// Throws when p^k exceeds the budget.
inline std::vector<RepMorphism> span_elements(
    const std::vector<RepMorphism>& basis, const Rep& src, const Rep& dst,
    long long budget = 1 << 20) {
  int p = src.field.p();
  int k = static_cast<int>(basis.size());
  long long total = 1;
  for (int i = 0; i < k; ++i) {
    total *= p;
    if (total > budget)
      throw std::runtime_error("span_elements: budget exceeded (p^" +
                               std::to_string(k) + ")");
  }
  std::vector<RepMorphism> out;
  out.reserve(static_cast<size_t>(total));
  std::vector<int> c(k, 0);
  for (long long code = 0; code < total; ++code) {
    long long t = code;
    RepMorphism m = RepMorphism::zero(src, dst);
    for (int i = 0; i < k; ++i) {
      c[i] = static_cast<int>(t % p);
      t /= p;
      if (c[i]) m = m + scaled(basis[i], c[i]);
    }
    out.push_back(std::move(m));
  }
  return out;
}

/// Exact order of Aut(X) by enumerating End(X).
inline long long aut_order(const Rep& x, long long budget = 1 << 20) {
  if (x.total_dim() == 0) return 1;
  std::vector<RepMorphism> end_basis = hom_space(x, x);
  long long count = 0;
  for (const RepMorphism& m : span_elements(end_basis, x, x, budget))
    if (m.is_invertible()) ++count;
  return count;
}

inline bool is_nilpotent(const RepMorphism& f) {
  int n = f.src.total_dim();
  RepMorphism g = f;
  int steps = 1;
  while (steps < 2 * n + 2) {
    bool zero = g.is_zero();
    if (zero) return true;
    g = compose(g, g);
    steps *= 2;
  }
  return g.is_zero();
}

/// An endomorphism that is neither invertible nor nilpotent (a Fitting
/// witness for decomposability), or nullopt if none exists. Scans the
/// basis and random combinations first, then the whole End space.
inline std::optional<RepMorphism> fitting_witness(
    const std::vector<RepMorphism>& end_basis, const Rep& x,
    long long budget = 1 << 20) {
  if (end_basis.size() <= 1) return std::nullopt;
  for (const RepMorphism& m : end_basis)
    if (!m.is_invertible() && !is_nilpotent(m)) return m;
  int p = x.field.p();
  detail::Rng rng(detail::seed_of(x.dim, p, 0x9d2c));
  for (int t = 0; t < 32; ++t) {
    RepMorphism m = RepMorphism::zero(x, x);
    for (const RepMorphism& b : end_basis) m = m + scaled(b, rng.below(p));
    if (!m.is_invertible() && !is_nilpotent(m)) return m;
  }
  for (const RepMorphism& m : span_elements(end_basis, x, x, budget))
    if (!m.is_invertible() && !is_nilpotent(m)) return m;
  return std::nullopt;
}

/// End(X) is local iff every endomorphism is invertible or nilpotent;
/// decided exactly (witness scan plus exhaustive fallback).
inline bool is_indecomposable(const Rep& x, long long budget = 1 << 20) {
  if (x.total_dim() == 0) return false;
  std::vector<RepMorphism> end_basis = hom_space(x, x);
  if (end_basis.size() == 1) return true;  // End = F_p, a brick
  return !fitting_witness(end_basis, x, budget).has_value();
}

struct Summand {
  Rep piece;
  RepMorphism incl;  // piece -> X
  RepMorphism proj;  // X -> piece, with proj * incl = id
};

namespace detail {

/// Split X along the Fitting decomposition of a non-invertible,
/// non-nilpotent endomorphism: X = ker f^N (+) im f^N.
inline std::pair<Summand, Summand> fitting_split(const Rep& x,
                                                 const RepMorphism& f) {
  int n = x.total_dim();
  RepMorphism g = f;
  for (int i = 0; i < n; ++i) g = compose(g, f);  // f^{n+1}, safely stable
  PrimeField F = x.field;
  const Quiver& q = *x.quiver;

  KernelCokernel kc = kernel_cokernel(g);
  // image of g as a subrepresentation
  DimVector idim(q.n());
  std::vector<FMatrix> ibasis;
  for (int i = 0; i < q.n(); ++i) {
    FMatrix gi = g.comp[i];
    FMatrix red = gi;
    std::vector<int> piv = red.rref();
    FMatrix bas(F, x.dim[i], static_cast<int>(piv.size()));
    for (size_t c = 0; c < piv.size(); ++c)
      for (int r = 0; r < x.dim[i]; ++r)
        bas.at(r, static_cast<int>(c)) = gi.at(r, piv[c]);
    idim[i] = bas.cols();
    ibasis.push_back(std::move(bas));
  }
  Rep im = Rep::make(x.quiver, F, idim);
  for (size_t h = 0; h < q.arrows().size(); ++h) {
    const Arrow& a = q.arrows()[h];
    auto sol = solve_affine(ibasis[a.dst], x.mats[h] * ibasis[a.src]);
    if (!sol) throw std::logic_error("fitting_split: image not invariant");
    im.mats[h] = sol->particular;
  }
  RepMorphism iincl{im, x, {}};
  for (int i = 0; i < q.n(); ++i) iincl.comp.push_back(ibasis[i]);

  // projections from the combined basis [ker | im]
  RepMorphism kproj{x, kc.ker, {}}, iproj{x, im, {}};
  for (int i = 0; i < q.n(); ++i) {
    FMatrix both = kc.ker_incl.comp[i].hstack(ibasis[i]);
    auto binv = both.inverse();
    if (!binv) throw std::logic_error("fitting_split: ker + im is not all of X");
    FMatrix kp(F, kc.ker.dim[i], x.dim[i]);
    FMatrix ip(F, idim[i], x.dim[i]);
    for (int r = 0; r < kc.ker.dim[i]; ++r)
      for (int c = 0; c < x.dim[i]; ++c) kp.at(r, c) = binv->at(r, c);
    for (int r = 0; r < idim[i]; ++r)
      for (int c = 0; c < x.dim[i]; ++c)
        ip.at(r, c) = binv->at(kc.ker.dim[i] + r, c);
    kproj.comp.push_back(std::move(kp));
    iproj.comp.push_back(std::move(ip));
  }
  return {Summand{kc.ker, kc.ker_incl, kproj}, Summand{im, iincl, iproj}};
}

}  // namespace detail

/// Krull-Schmidt decomposition into indecomposable summands, each with an
/// inclusion and a projection relative to X.
inline std::vector<Summand> decompose_summands(const Rep& x,
                                               long long budget = 1 << 20) {
  std::vector<Summand> out;
  if (x.total_dim() == 0) return out;
  std::vector<Summand> work{Summand{x, RepMorphism::identity(x),
                                    RepMorphism::identity(x)}};
  while (!work.empty()) {
    Summand s = work.back();
    work.pop_back();
    std::vector<RepMorphism> end_basis = hom_space(s.piece, s.piece);
    std::optional<RepMorphism> splitter =
        fitting_witness(end_basis, s.piece, budget);
    if (!splitter) {
      out.push_back(std::move(s));
      continue;
    }
    auto [a, b] = detail::fitting_split(s.piece, *splitter);
    work.push_back(Summand{a.piece, compose(s.incl, a.incl),
                           compose(a.proj, s.proj)});
    work.push_back(Summand{b.piece, compose(s.incl, b.incl),
                           compose(b.proj, s.proj)});
  }
  return out;
}

/// Decomposition grouped into isomorphism classes with multiplicities.
inline std::vector<std::pair<Rep, int>> decompose(const Rep& x,
                                                  long long budget = 1 << 20) {
  std::vector<std::pair<Rep, int>> out;
  for (Summand& s : decompose_summands(x, budget)) {
    bool found = false;
    for (auto& [rep, mult] : out)
      if (is_isomorphic(rep, s.piece)) {
        ++mult;
        found = true;
        break;
      }
    if (!found) out.emplace_back(std::move(s.piece), 1);
  }
  return out;
}

/// Exhaustive enumeration of indecomposables with dimension vector d, one
/// representative per iso class, lexicographically minimal matrix tuple.
inline std::vector<Rep> enumerate_indecomposables(
    std::shared_ptr<const Quiver> q, const DimVector& d, PrimeField f,
    long long budget = 1 << 19) {
  int cells = 0;
  for (const Arrow& a : q->arrows()) cells += d[a.src] * d[a.dst];
  long long total = 1;
  for (int i = 0; i < cells; ++i) {
    total *= f.p();
    if (total > budget)
      throw std::runtime_error(
          "enumerate_indecomposables: budget exceeded (search size p^" +
          std::to_string(cells) + ")");
  }
  std::vector<Rep> classes;
  for (long long code = 0; code < total; ++code) {
    Rep r = Rep::make(q, f, d);
    long long t = code;
    for (FMatrix& m : r.mats)
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
          m.at(i, j) = static_cast<int>(t % f.p());
          t /= f.p();
        }
    if (!q->relations().empty() && !r.validate()) continue;
    if (!is_indecomposable(r, budget)) continue;
    bool known = false;
    for (const Rep& c : classes)
      if (is_isomorphic(c, r)) {
        known = true;
        break;
      }
    if (!known) classes.push_back(std::move(r));
  }
  return classes;
}

/// Paths out of a fixed source vertex, grouped by endpoint; the basis of
/// the indecomposable projective at that vertex.
struct PathBasis {
  int source = 0;
  std::vector<std::vector<std::vector<int>>> at;  // per vertex: arrow words
};

inline PathBasis paths_from(const Quiver& q, int j) {
  if (!q.is_acyclic())
    throw std::invalid_argument("paths_from: quiver must be acyclic");
  PathBasis pb;
  pb.source = j;
  pb.at.assign(q.n(), {});
  std::vector<std::pair<int, std::vector<int>>> queue{{j, {}}};
  while (!queue.empty()) {
    auto [v, word] = queue.back();
    queue.pop_back();
    pb.at[v].push_back(word);
    for (size_t h = 0; h < q.arrows().size(); ++h)
      if (q.arrows()[h].src == v) {
        std::vector<int> w = word;
        w.push_back(static_cast<int>(h));
        queue.emplace_back(q.arrows()[h].dst, std::move(w));
      }
  }
  for (auto& words : pb.at)
    std::sort(words.begin(), words.end());
  return pb;
}

/// The indecomposable projective P_j with its path basis: arrow h acts by
/// appending h to a path.
inline std::pair<Rep, PathBasis> projective_rep(std::shared_ptr<const Quiver> q,
                                                PrimeField f, int j) {
  PathBasis pb = paths_from(*q, j);
  DimVector d(q->n());
  for (int i = 0; i < q->n(); ++i) d[i] = static_cast<int>(pb.at[i].size());
  Rep p = Rep::make(q, f, d);
  for (size_t h = 0; h < q->arrows().size(); ++h) {
    const Arrow& a = q->arrows()[h];
    for (size_t c = 0; c < pb.at[a.src].size(); ++c) {
      std::vector<int> w = pb.at[a.src][c];
      w.push_back(static_cast<int>(h));
      auto it = std::find(pb.at[a.dst].begin(), pb.at[a.dst].end(), w);
      p.mats[h].at(static_cast<int>(it - pb.at[a.dst].begin()),
                   static_cast<int>(c)) = 1;
    }
  }
  return {std::move(p), std::move(pb)};
}

/// Hom(P_j, M) ~ M_j: the morphism sending the trivial path to the vector m.
inline RepMorphism yoneda_hom(const Rep& pj, const PathBasis& pb, const Rep& m,
                              const std::vector<int>& mvec) {
  RepMorphism phi = RepMorphism::zero(pj, m);
  for (int i = 0; i < m.quiver->n(); ++i)
    for (size_t c = 0; c < pb.at[i].size(); ++c) {
      // image of the path basis vector: x_w applied to mvec
      std::vector<int> cur = mvec;
      int at_vertex = pb.source;
      for (int h : pb.at[i][c]) {
        const Arrow& a = m.quiver->arrows()[h];
        std::vector<int> nxt(m.dim[a.dst], 0);
        for (int r = 0; r < m.dim[a.dst]; ++r)
          for (int k = 0; k < m.dim[a.src]; ++k)
            nxt[r] = m.field.add(nxt[r],
                                 m.field.mul(m.mats[h].at(r, k), cur[k]));
        cur = std::move(nxt);
        at_vertex = a.dst;
      }
      (void)at_vertex;
      for (int r = 0; r < m.dim[i]; ++r)
        phi.comp[i].at(r, static_cast<int>(c)) = cur[r];
    }
  return phi;
}

/// Per-vertex basis of rad M = sum of arrow images.
inline std::vector<FMatrix> radical_basis(const Rep& m) {
  std::vector<FMatrix> rad;
  for (int i = 0; i < m.quiver->n(); ++i) {
    FMatrix stack(m.field, m.dim[i], 0);
    for (size_t h = 0; h < m.quiver->arrows().size(); ++h)
      if (m.quiver->arrows()[h].dst == i) stack = stack.hstack(m.mats[h]);
    rad.push_back(column_space(stack));
  }
  return rad;
}

struct ProjectiveCover {
  Rep cover;              // direct sum of indecomposable projectives
  std::vector<int> types; // projective type of each summand
  RepMorphism onto;       // cover ->> M
};

/// Projective cover P(top M) ->> M built from lifts of a basis of M/rad M.
inline ProjectiveCover projective_cover(const Rep& m) {
  const Quiver& q = *m.quiver;
  PrimeField F = m.field;
  ProjectiveCover pc{Rep::zero(m.quiver, F), {}, RepMorphism::zero(
      Rep::zero(m.quiver, F), m)};
  std::vector<RepMorphism> pieces;
  for (int i = 0; i < q.n(); ++i) {
    FMatrix rad = radical_basis(m)[i];
    // extend rad basis by standard vectors; the added ones span the top
    FMatrix basis = rad;
    for (int e = 0; e < m.dim[i]; ++e) {
      FMatrix trial(F, m.dim[i], 1);
      trial.at(e, 0) = 1;
      FMatrix ext = basis.hstack(trial);
      if (ext.rank() == basis.cols() + 1) {
        basis = ext;
        std::vector<int> v(m.dim[i], 0);
        v[e] = 1;
        auto [pj, pb] = projective_rep(m.quiver, F, i);
        pieces.push_back(yoneda_hom(pj, pb, m, v));
        pc.types.push_back(i);
      }
    }
  }
  Rep cover = Rep::zero(m.quiver, F);
  for (const RepMorphism& p : pieces) cover = direct_sum(cover, p.src);
  RepMorphism onto = RepMorphism::zero(cover, m);
  DimVector off(q.n(), 0);
  for (const RepMorphism& p : pieces) {
    for (int i = 0; i < q.n(); ++i)
      for (int r = 0; r < m.dim[i]; ++r)
        for (int c = 0; c < p.src.dim[i]; ++c)
          onto.comp[i].at(r, off[i] + c) = p.comp[i].at(r, c);
    for (int i = 0; i < q.n(); ++i) off[i] += p.src.dim[i];
  }
  pc.cover = std::move(cover);
  pc.onto = std::move(onto);
  return pc;
}

/// Representative of the unique indecomposable class for a rigid class
/// (real root with Ext^1(X,X) = 0): dense-orbit sampling with an exact
/// indecomposability certificate, exhaustive fallback for tiny spaces.
inline Rep rigid_indecomposable(std::shared_ptr<const Quiver> q,
                                const DimVector& d, PrimeField f) {
  int cells = 0;
  for (const Arrow& a : q->arrows()) cells += d[a.src] * d[a.dst];
  long long space = 1;
  bool small = true;
  for (int i = 0; i < cells; ++i) {
    space *= f.p();
    if (space > 4096) {
      small = false;
      break;
    }
  }
  if (small) {
    auto cls = enumerate_indecomposables(q, d, f);
    for (const Rep& r : cls)
      if (dim_ext1(r, r) == 0) return r;
    throw std::runtime_error("rigid_indecomposable: no rigid class at " +
                             dim_str(d));
  }
  detail::Rng rng(detail::seed_of(d, f.p(), 0x51a9));
  for (int trial = 0; trial < 4096; ++trial) {
    Rep r = Rep::make(q, f, d);
    for (FMatrix& m : r.mats)
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rng.below(f.p());
    // the rigid indecomposable orbit is dense, so this terminates quickly
    if (dim_hom(r, r) == 1 && dim_ext1(r, r) == 0) return r;
  }
  throw std::runtime_error("rigid_indecomposable: sampling failed at " +
                           dim_str(d));
}

}  // namespace rootlie
