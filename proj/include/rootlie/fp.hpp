#pragma once

#include <stdexcept>
#include <string>

namespace rootlie {

/// Prime field F_p for a small prime modulus. Elements are plain ints
/// reduced to [0, p); the field object carries the modulus and the
/// arithmetic. All operations are exact.
class PrimeField {
public:
  explicit PrimeField(int p) : p_(p) {
    if (p < 2 || p > 251 || !is_prime(p))
      throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) +
                                  " is not a prime <= 251");
  }

  int p() const { return p_; }

  int reduce(long long x) const {
    long long r = x % p_;
    return static_cast<int>(r < 0 ? r + p_ : r);
  }

  int add(int a, int b) const { return (a + b) % p_; }
  int sub(int a, int b) const { return (a - b + p_) % p_; }
  int mul(int a, int b) const {
    return static_cast<int>((static_cast<long long>(a) * b) % p_);
  }
  int neg(int a) const { return a == 0 ? 0 : p_ - a; }

  int pow(int a, long long e) const {
    int r = 1, base = reduce(a);
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  /// Multiplicative inverse; p is prime so a^(p-2) works for a != 0.
  int inv(int a) const {
    if (a % p_ == 0) throw std::domain_error("PrimeField: inverse of zero");
    return pow(a, p_ - 2);
  }

  /// A generator of the cyclic group F_p^*.
  int primitive_root() const {
    for (int g = 2; g < p_; ++g) {
      bool ok = true;
      for (int q = 2; q <= p_ - 1 && ok; ++q) {
        if ((p_ - 1) % q == 0 && is_prime(q) && pow(g, (p_ - 1) / q) == 1)
          ok = false;
      }
      if (ok) return g;
    }
    return 1;  // p == 2
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

  static bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

private:
  int p_;
};

}  // namespace rootlie
