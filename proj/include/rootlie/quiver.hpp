#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace rootlie {

/// Dimension vectors and root-lattice elements, indexed by the quiver's
/// vertex order. Signed entries are allowed (root lattice); representation
/// dimensions are the nonnegative ones.
using DimVector = std::vector<int>;

inline DimVector operator+(const DimVector& a, const DimVector& b) {
  DimVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
inline DimVector operator-(const DimVector& a, const DimVector& b) {
  DimVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
inline DimVector operator-(const DimVector& a) {
  DimVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}
inline DimVector operator*(int c, const DimVector& a) {
  DimVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}
inline bool is_zero(const DimVector& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}
inline bool is_nonneg(const DimVector& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; });
}
inline int height(const DimVector& a) {
  return std::accumulate(a.begin(), a.end(), 0);
}
inline std::string dim_str(const DimVector& d) {
  std::string s = "(";
  for (size_t i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  return s + ")";
}

struct Arrow {
  std::string label;
  int src = 0;
  int dst = 0;
};

/// One signed path in a relation: coefficient and the arrow index word,
/// listed in composition order (first arrow applied first).
struct RelationTerm {
  int coeff = 1;
  std::vector<int> arrows;
};
using Relation = std::vector<RelationTerm>;

/// A quiver: ordered vertex labels, arrows, optional relations. The Lie
/// pipeline requires the relation-free acyclic case; relations are kept so
/// representation validation can honor them.
class Quiver {
public:
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows,
         std::vector<Relation> relations = {})
      : vertices_(std::move(vertices)), arrows_(std::move(arrows)),
        relations_(std::move(relations)) {
    for (const Arrow& a : arrows_)
      if (a.src < 0 || a.src >= n() || a.dst < 0 || a.dst >= n())
        throw std::invalid_argument("Quiver: arrow endpoint out of range");
  }

  int n() const { return static_cast<int>(vertices_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<Relation>& relations() const { return relations_; }
  bool has_relations() const { return !relations_.empty(); }

  int vertex_index(const std::string& label) const {
    for (int i = 0; i < n(); ++i)
      if (vertices_[i] == label) return i;
    throw std::invalid_argument("Quiver: unknown vertex '" + label + "'");
  }

  bool is_acyclic() const {
    // Kahn's algorithm on the arrow multigraph.
    std::vector<int> indeg(n(), 0);
    for (const Arrow& a : arrows_) ++indeg[a.dst];
    std::vector<int> stack;
    for (int i = 0; i < n(); ++i)
      if (indeg[i] == 0) stack.push_back(i);
    int seen = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++seen;
      for (const Arrow& a : arrows_)
        if (a.src == v && --indeg[a.dst] == 0) stack.push_back(a.dst);
    }
    return seen == n();
  }

  bool is_connected() const {
    if (n() == 0) return true;
    std::vector<bool> vis(n(), false);
    std::vector<int> stack{0};
    vis[0] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const Arrow& a : arrows_) {
        int w = -1;
        if (a.src == v) w = a.dst;
        else if (a.dst == v) w = a.src;
        if (w >= 0 && !vis[w]) {
          vis[w] = true;
          stack.push_back(w);
        }
      }
    }
    return std::all_of(vis.begin(), vis.end(), [](bool b) { return b; });
  }

  bool is_source(int v) const {
    for (const Arrow& a : arrows_)
      if (a.dst == v) return false;
    return true;
  }
  bool is_sink(int v) const {
    for (const Arrow& a : arrows_)
      if (a.src == v) return false;
    return true;
  }

  /// Quiver with every arrow at `v` reversed (BGP reflection of the quiver).
  Quiver reflect_at(int v) const {
    std::vector<Arrow> as = arrows_;
    for (Arrow& a : as)
      if (a.src == v || a.dst == v) std::swap(a.src, a.dst);
    return Quiver(vertices_, std::move(as));
  }

  DimVector simple(int i) const {
    DimVector d(n(), 0);
    d[i] = 1;
    return d;
  }

  /// Canonical content string: sorted vertex labels and arrows. Hashing this
  /// makes the cache key orientation- and order-insensitive in the file,
  /// but sensitive to actual quiver content.
  std::string canonical_content() const {
    std::vector<std::string> lines;
    for (const std::string& v : vertices_) lines.push_back("v " + v);
    for (const Arrow& a : arrows_)
      lines.push_back("a " + vertices_[a.src] + ">" + vertices_[a.dst]);
    for (const Relation& r : relations_) {
      std::string s = "r";
      for (const RelationTerm& t : r) {
        s += " " + std::to_string(t.coeff) + ":";
        for (int ai : t.arrows) s += arrows_[ai].label + ".";
      }
      lines.push_back(s);
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const std::string& l : lines) out += l + "\n";
    return out;
  }

private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<Relation> relations_;
};

/// Euler form of a relation-free quiver:
/// <d,e> = sum_i d_i e_i - sum_{h} d_{s(h)} e_{t(h)}.
inline long long euler_form(const Quiver& q, const DimVector& d,
                            const DimVector& e) {
  if (q.has_relations())
    throw std::invalid_argument("euler_form: relations present");
  long long s = 0;
  for (int i = 0; i < q.n(); ++i) s += static_cast<long long>(d[i]) * e[i];
  for (const Arrow& a : q.arrows())
    s -= static_cast<long long>(d[a.src]) * e[a.dst];
  return s;
}

/// Symmetrized Euler form (d,e) = <d,e> + <e,d>.
inline long long symmetric_form(const Quiver& q, const DimVector& d,
                                const DimVector& e) {
  return euler_form(q, d, e) + euler_form(q, e, d);
}

/// Cartan datum (I, (-,-)) = symmetrized Euler form on simples.
struct CartanDatum {
  std::vector<std::vector<long long>> a;  // a[i][j] = (alpha_i, alpha_j)

  static CartanDatum of(const Quiver& q) {
    CartanDatum c;
    c.a.assign(q.n(), std::vector<long long>(q.n(), 0));
    for (int i = 0; i < q.n(); ++i)
      for (int j = 0; j < q.n(); ++j)
        c.a[i][j] = symmetric_form(q, q.simple(i), q.simple(j));
    return c;
  }
};

/// Simple reflection s_i(d) = d - (d, alpha_i) alpha_i.
inline DimVector reflect(const Quiver& q, int i, const DimVector& d) {
  long long pairing = symmetric_form(q, d, q.simple(i));
  DimVector r = d;
  r[i] -= static_cast<int>(pairing);
  return r;
}

enum class QuiverType { Finite, Affine, Wild };

inline const char* type_name(QuiverType t) {
  switch (t) {
    case QuiverType::Finite: return "finite";
    case QuiverType::Affine: return "affine";
    default: return "wild";
  }
}

struct RootSystem {
  QuiverType type = QuiverType::Wild;
  std::vector<DimVector> positive_reals;  // up to the height bound, by height
  std::optional<DimVector> delta;         // minimal imaginary root, affine only
  bool complete = false;                  // true when the real list is exhaustive
};

namespace detail {

/// Determinant of an integer matrix (Bareiss-free: plain fraction-free
/// expansion is fine at these sizes).
inline long long int_det(std::vector<std::vector<long long>> m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  // fraction-free Gaussian elimination (Bareiss)
  long long prev = 1;
  long long sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) { swap_row = i; break; }
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

inline std::vector<std::vector<long long>> principal_minor_matrix(
    const std::vector<std::vector<long long>>& a, const std::vector<int>& keep) {
  std::vector<std::vector<long long>> m(keep.size(),
                                        std::vector<long long>(keep.size()));
  for (size_t i = 0; i < keep.size(); ++i)
    for (size_t j = 0; j < keep.size(); ++j) m[i][j] = a[keep[i]][keep[j]];
  return m;
}

}  // namespace detail

/// Classify the symmetrized form: positive definite (finite type), positive
/// semidefinite with 1-dim radical (affine), anything else wild. Exact
/// integer minor tests; fine at rank <= ~8.
inline QuiverType quiver_type(const Quiver& q) {
  CartanDatum c = CartanDatum::of(q);
  int n = q.n();
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  bool pos_def = true;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> keep(all.begin(), all.begin() + k);
    if (detail::int_det(detail::principal_minor_matrix(c.a, keep)) <= 0)
      pos_def = false;
  }
  if (pos_def) return QuiverType::Finite;
  // affine: det = 0 and every proper principal minor positive definite
  if (detail::int_det(c.a) != 0) return QuiverType::Wild;
  for (int omit = 0; omit < n; ++omit) {
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
      if (i != omit) keep.push_back(i);
    for (size_t k = 1; k <= keep.size(); ++k) {
      std::vector<int> sub(keep.begin(), keep.begin() + static_cast<long>(k));
      if (detail::int_det(detail::principal_minor_matrix(c.a, sub)) <= 0)
        return QuiverType::Wild;
    }
  }
  return QuiverType::Affine;
}

/// Primitive positive generator of the radical of the symmetrized form
/// (the minimal imaginary root delta) for an affine quiver.
inline DimVector affine_delta(const Quiver& q) {
  CartanDatum c = CartanDatum::of(q);
  int n = q.n();
  // entries of delta are tiny for every affine type; search small vectors
  for (int bound = 1; bound <= 6; ++bound) {
    std::vector<int> x(n, 0);
    // enumerate vectors with entries in [0, bound], not all zero
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= (bound + 1);
    for (long long code = 1; code < total; ++code) {
      long long t = code;
      for (int i = 0; i < n; ++i) {
        x[i] = static_cast<int>(t % (bound + 1));
        t /= (bound + 1);
      }
      int g = 0;
      for (int v : x) g = std::gcd(g, v);
      if (g != 1) continue;
      bool in_radical = true;
      for (int i = 0; i < n && in_radical; ++i) {
        long long s = 0;
        for (int j = 0; j < n; ++j) s += c.a[i][j] * x[j];
        if (s != 0) in_radical = false;
      }
      if (in_radical) return x;
    }
  }
  throw std::runtime_error("affine_delta: radical generator not found");
}

/// Positive roots by closing the simples under simple reflections, up to a
/// coordinate-sum bound. Complete for finite type (bound big enough);
/// real roots only otherwise.
inline RootSystem enumerate_roots(const Quiver& q, int height_bound) {
  if (!q.is_connected())
    throw std::invalid_argument("enumerate_roots: disconnected quiver");
  RootSystem rs;
  rs.type = quiver_type(q);
  int bound = height_bound;
  if (rs.type == QuiverType::Finite) {
    // closure is finite; lift the bound high enough for any Dynkin rank here
    bound = std::max(bound, 64);
  }
  std::set<DimVector> seen;
  std::vector<DimVector> queue;
  for (int i = 0; i < q.n(); ++i) {
    seen.insert(q.simple(i));
    queue.push_back(q.simple(i));
  }
  bool escaped = false;  // a reflection crossed the bound
  while (!queue.empty()) {
    DimVector d = queue.back();
    queue.pop_back();
    for (int i = 0; i < q.n(); ++i) {
      DimVector r = reflect(q, i, d);
      if (!is_nonneg(r) || is_zero(r)) continue;
      if (height(r) > bound) {
        escaped = true;
        continue;
      }
      if (seen.insert(r).second) queue.push_back(r);
    }
  }
  rs.positive_reals.assign(seen.begin(), seen.end());
  std::sort(rs.positive_reals.begin(), rs.positive_reals.end(),
            [](const DimVector& a, const DimVector& b) {
              if (height(a) != height(b)) return height(a) < height(b);
              return a < b;
            });
  rs.complete = (rs.type == QuiverType::Finite) && !escaped;
  if (rs.type == QuiverType::Affine) rs.delta = affine_delta(q);
  return rs;
}

inline bool is_positive_root(const RootSystem& rs, const DimVector& d) {
  if (std::find(rs.positive_reals.begin(), rs.positive_reals.end(), d) !=
      rs.positive_reals.end())
    return true;
  if (rs.delta) {
    // imaginary roots n*delta, n >= 1
    const DimVector& del = *rs.delta;
    int n = 0;
    for (size_t i = 0; i < d.size(); ++i)
      if (del[i] != 0) { n = d[i] / del[i]; break; }
    if (n >= 1 && d == n * del) return true;
  }
  return false;
}

}  // namespace rootlie
