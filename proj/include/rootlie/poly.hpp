#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace rootlie {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Integer polynomial in q, coefficients ascending by degree, trailing
/// coefficient nonzero unless the polynomial is zero.
class IntPoly {
public:
  IntPoly() = default;
  IntPoly(std::initializer_list<Int> cs) : c_(cs) { trim(); }
  explicit IntPoly(std::vector<Int> cs) : c_(std::move(cs)) { trim(); }
  static IntPoly constant(Int v) { return IntPoly{std::move(v)}; }

  const std::vector<Int>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero

  Int eval(const Int& q) const {
    Int r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + *it;
    return r;
  }

  IntPoly operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
  }

  IntPoly operator-(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPoly(std::move(r));
  }

  IntPoly operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Int> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
  }

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (int d = degree(); d >= 0; --d) {
      const Int& c = c_[d];
      if (c == 0) continue;
      if (!s.empty()) s += c > 0 ? " + " : " - ";
      else if (c < 0) s += "-";
      Int a = abs(c);
      if (a != 1 || d == 0) s += a.str();
      if (d > 0) {
        if (a != 1) s += "*";
        s += "q";
        if (d > 1) s += "^" + std::to_string(d);
      }
    }
    return s;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

/// Fit an integer polynomial of degree <= degree_bound through the given
/// (q, value) points. The first degree_bound+1 points determine the
/// polynomial (Newton divided differences over exact rationals); any extra
/// points are verification points. Throws on a non-integral fit or when a
/// verification point disagrees.
inline IntPoly interpolate(const std::vector<std::pair<Int, Int>>& points,
                           int degree_bound) {
  if (static_cast<int>(points.size()) < degree_bound + 1)
    throw std::invalid_argument("interpolate: need at least degree_bound+1 points");
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("interpolate: duplicate q value");

  size_t n = static_cast<size_t>(degree_bound) + 1;
  // Newton coefficients over Q.
  std::vector<Rat> coef(n);
  for (size_t i = 0; i < n; ++i) coef[i] = Rat(points[i].second);
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) {
      coef[i] = (coef[i] - coef[i - 1]) /
                Rat(points[i].first - points[i - j].first);
      if (i == j) break;
    }
  // Expand to monomial basis.
  std::vector<Rat> c(n, 0);
  for (size_t i = n; i-- > 0;) {
    // c <- c * (q - x_i) + coef[i]
    for (size_t k = n - 1; k >= 1; --k)
      c[k] = c[k - 1] - Rat(points[i].first) * c[k];
    c[0] = coef[i] - Rat(points[i].first) * c[0];
  }
  std::vector<Int> ic(n);
  for (size_t k = 0; k < n; ++k) {
    if (denominator(c[k]) != 1)
      throw std::runtime_error("interpolate: non-integral fit");
    ic[k] = numerator(c[k]);
  }
  IntPoly poly(std::move(ic));
  for (const auto& [q, v] : points)
    if (poly.eval(q) != v)
      throw std::runtime_error("interpolate: over-determined mismatch at q=" +
                               q.str());
  return poly;
}

/// Fit over Q (same Newton scheme and verification points as interpolate)
/// and evaluate at `at`. Counting functions of constructible quotients can
/// carry non-integral coefficients, so this is the evaluation path for
/// them; the value itself stays exact.
inline Rat interpolate_eval(const std::vector<std::pair<Int, Int>>& points,
                            int degree_bound, const Rat& at) {
  if (static_cast<int>(points.size()) < degree_bound + 1)
    throw std::invalid_argument(
        "interpolate_eval: need at least degree_bound+1 points");
  size_t n = static_cast<size_t>(degree_bound) + 1;
  std::vector<Rat> coef(n);
  for (size_t i = 0; i < n; ++i) coef[i] = Rat(points[i].second);
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) {
      coef[i] = (coef[i] - coef[i - 1]) /
                Rat(points[i].first - points[i - j].first);
      if (i == j) break;
    }
  // verify the held-out points through the Newton form
  for (const auto& [q, v] : points) {
    Rat acc = 0;
    for (size_t i = n; i-- > 0;)
      acc = acc * Rat(q - points[i].first) + coef[i];
    if (acc != Rat(v))
      throw std::runtime_error("interpolate_eval: over-determined mismatch");
  }
  Rat acc = 0;
  for (size_t i = n; i-- > 0;)
    acc = acc * (at - Rat(points[i].first)) + coef[i];
  return acc;
}

/// Laurent polynomial in v with exact integer coefficients, stored as a
/// coefficient vector plus the minimum exponent. Canonical form keeps no
/// leading or trailing zeros.
class Laurent {
public:
  Laurent() = default;
  Laurent(std::vector<Int> cs, int min_exp) : c_(std::move(cs)), min_(min_exp) {
    trim();
  }
  static Laurent constant(Int v) {
    return v == 0 ? Laurent() : Laurent({std::move(v)}, 0);
  }
  static Laurent v_power(int k) { return Laurent({1}, k); }

  /// q |-> v^2 substitution of an integer polynomial.
  static Laurent from_q_poly(const IntPoly& p) {
    if (p.is_zero()) return {};
    std::vector<Int> c(2 * p.coeffs().size() - 1, 0);
    for (size_t i = 0; i < p.coeffs().size(); ++i) c[2 * i] = p.coeffs()[i];
    return Laurent(std::move(c), 0);
  }

  bool is_zero() const { return c_.empty(); }
  int min_exp() const { return min_; }
  int max_exp() const { return min_ + static_cast<int>(c_.size()) - 1; }

  Int coeff(int e) const {
    if (c_.empty() || e < min_ || e > max_exp()) return 0;
    return c_[static_cast<size_t>(e - min_)];
  }

  Laurent operator+(const Laurent& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    int lo = std::min(min_, o.min_), hi = std::max(max_exp(), o.max_exp());
    std::vector<Int> r(static_cast<size_t>(hi - lo + 1), 0);
    for (int e = lo; e <= hi; ++e) r[e - lo] = coeff(e) + o.coeff(e);
    return Laurent(std::move(r), lo);
  }

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  Laurent operator-(const Laurent& o) const { return *this + (-o); }

  Laurent operator*(const Laurent& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Int> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Laurent(std::move(r), min_ + o.min_);
  }

  Laurent operator*(const Int& s) const {
    if (s == 0) return {};
    Laurent r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
  }

  bool operator==(const Laurent& o) const { return min_ == o.min_ && c_ == o.c_; }

  /// Value in Z[v]/(v^2 - q) as a pair (a, b) meaning a + b v, exact
  /// rationals since v^{-1} = v/q.
  std::pair<Rat, Rat> reduce_v2(const Int& q) const {
    Rat a = 0, b = 0;
    for (int e = min_; e <= max_exp(); ++e) {
      Int c = coeff(e);
      if (c == 0) continue;
      // v^e = q^{floor(e/2)} v^{e mod 2} with e mod 2 in {0,1}
      int half = (e >= 0) ? e / 2 : -((-e + 1) / 2);
      int rem = e - 2 * half;  // 0 or 1
      Rat qs = half >= 0 ? Rat(boost::multiprecision::pow(q, half))
                         : Rat(1) / Rat(boost::multiprecision::pow(q, -half));
      if (rem == 0) a += Rat(c) * qs;
      else b += Rat(c) * qs;
    }
    return {a, b};
  }

  /// Evaluate at v = 1 (so q = 1 on the q-side).
  Int eval_one() const {
    Int s = 0;
    for (const auto& c : c_) s += c;
    return s;
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (int e = max_exp(); e >= min_; --e) {
      Int c = coeff(e);
      if (c == 0) continue;
      if (!s.empty()) s += c > 0 ? " + " : " - ";
      else if (c < 0) s += "-";
      Int a = abs(c);
      if (a != 1 || e == 0) s += a.str();
      if (e != 0) {
        if (a != 1) s += "*";
        s += "v";
        if (e != 1) s += "^" + std::to_string(e);
      }
    }
    return s;
  }

private:
  void trim() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) {
      c_.clear();
      min_ = 0;
      return;
    }
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    min_ += static_cast<int>(lead);
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;  // ascending exponents from min_
  int min_ = 0;
};

/// Balanced quantum integer [n]_v = v^{n-1} + v^{n-3} + ... + v^{1-n}.
inline Laurent quantum_int(int n) {
  if (n == 0) return {};
  std::vector<Int> c(static_cast<size_t>(2 * n - 1), 0);
  for (int i = 0; i < n; ++i) c[static_cast<size_t>(2 * i)] = 1;
  return Laurent(std::move(c), 1 - n);
}

inline Laurent quantum_factorial(int n) {
  Laurent r = Laurent::constant(1);
  for (int i = 2; i <= n; ++i) r = r * quantum_int(i);
  return r;
}

/// Gaussian binomial [n choose k]_v via the v-Pascal recurrence
/// [n,k] = v^{n-k} [n-1,k-1] + v^{-k} [n-1,k]; avoids any division.
inline Laurent quantum_binomial(int n, int k) {
  if (k < 0 || k > n) return {};
  std::vector<Laurent> row(static_cast<size_t>(k) + 1);
  row[0] = Laurent::constant(1);
  for (int m = 1; m <= n; ++m)
    for (int j = std::min(m, k); j >= 1; --j)
      row[j] = Laurent::v_power(m - j) * row[j - 1] +
               Laurent::v_power(-j) * (j <= m - 1 ? row[j] : Laurent());
  return row[k];
}

}  // namespace rootlie
