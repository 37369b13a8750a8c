#include <catch2/catch_amalgamated.hpp>

#include "rootlie/fp.hpp"
#include "rootlie/matrix.hpp"
#include "rootlie/poly.hpp"

using namespace rootlie;

TEST_CASE("prime field arithmetic") {
  PrimeField f5(5);
  CHECK(f5.add(3, 4) == 2);
  CHECK(f5.mul(3, 4) == 2);
  CHECK(f5.inv(2) == 3);
  CHECK(f5.pow(2, 4) == 1);
  CHECK(f5.reduce(-1) == 4);
  CHECK_THROWS(PrimeField(4));
  CHECK_THROWS(PrimeField(257));
  CHECK_THROWS(f5.inv(0));
  CHECK(PrimeField(7).primitive_root() == 3);
}

TEST_CASE("rank and kernel") {
  PrimeField f2(2);
  FMatrix m(f2, 2, 2);
  m.at(0, 0) = m.at(0, 1) = m.at(1, 0) = m.at(1, 1) = 1;
  auto rk = rank_kernel(m);
  CHECK(rk.rank == 1);
  CHECK(rk.kernel.cols() == 1);
  CHECK((m * rk.kernel).is_zero());

  PrimeField f5(5);
  auto id3 = FMatrix::identity(f5, 3);
  CHECK(rank_kernel(id3).rank == 3);
  CHECK(rank_kernel(id3).kernel.cols() == 0);

  PrimeField f3(3);
  FMatrix z(f3, 2, 3);
  auto zk = rank_kernel(z);
  CHECK(zk.rank == 0);
  CHECK(zk.kernel.cols() == 3);
}

TEST_CASE("rank equals rank of transpose on random small matrices") {
  for (int p : {2, 3}) {
    PrimeField f(p);
    uint64_t s = 12345;
    for (int t = 0; t < 50; ++t) {
      FMatrix m(f, 3, 4);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) {
          s = s * 6364136223846793005ull + 1442695040888963407ull;
          m.at(i, j) = static_cast<int>((s >> 33) % p);
        }
      CHECK(m.rank() == m.transpose().rank());
      auto rk = rank_kernel(m);
      CHECK(rk.rank + rk.kernel.cols() == 4);
    }
  }
}

TEST_CASE("affine solve") {
  PrimeField f2(2);
  auto id = FMatrix::identity(f2, 2);
  FMatrix b(f2, 2, 1);
  b.at(0, 0) = 1;
  auto sol = solve_affine(id, b);
  REQUIRE(sol);
  CHECK(sol->particular == b);

  FMatrix zero(f2, 2, 2);
  CHECK_FALSE(solve_affine(zero, b).has_value());

  FMatrix row(f2, 1, 2);
  row.at(0, 0) = row.at(0, 1) = 1;
  FMatrix b1(f2, 1, 1);
  b1.at(0, 0) = 1;
  auto s1 = solve_affine(row, b1);
  REQUIRE(s1);
  CHECK(s1->kernel.cols() == 1);
  CHECK(row * s1->particular == b1);
}

TEST_CASE("affine solve reproduces rhs on random consistent systems") {
  PrimeField f3(3);
  uint64_t s = 99;
  for (int t = 0; t < 40; ++t) {
    FMatrix a(f3, 3, 3);
    FMatrix x(f3, 3, 1);
    for (int i = 0; i < 3; ++i) {
      s = s * 6364136223846793005ull + 1;
      x.at(i, 0) = static_cast<int>((s >> 30) % 3);
      for (int j = 0; j < 3; ++j) {
        s = s * 6364136223846793005ull + 1;
        a.at(i, j) = static_cast<int>((s >> 30) % 3);
      }
    }
    FMatrix b = a * x;
    auto sol = solve_affine(a, b);
    REQUIRE(sol);
    CHECK(a * sol->particular == b);
  }
}

TEST_CASE("interpolation") {
  using P = std::pair<Int, Int>;
  CHECK(interpolate({P{2, 1}, P{3, 1}, P{5, 1}}, 2) == IntPoly{1});
  CHECK(interpolate({P{2, 3}, P{3, 4}, P{5, 6}}, 1) == IntPoly({1, 1}));
  CHECK(interpolate({P{2, 2}, P{3, 6}, P{5, 20}}, 2) == IntPoly({0, -1, 1}));

  // known polynomial recovered from extra points, no mismatch flagged
  IntPoly q2q({0, 1, 1});  // q + q^2
  std::vector<P> pts;
  for (Int q : {2, 3, 5, 7, 11})
    pts.emplace_back(q, q2q.eval(q));
  CHECK(interpolate(pts, 2) == q2q);
  CHECK(interpolate(pts, 3) == q2q);

  // corrupted verification point must throw
  pts.back().second += 1;
  CHECK_THROWS_WITH(interpolate(pts, 2),
                    Catch::Matchers::ContainsSubstring("mismatch"));
  // non-integral fit: f(0)=0, f(2)=1 forces a half coefficient
  CHECK_THROWS_WITH(interpolate({P{0, 0}, P{2, 1}}, 1),
                    Catch::Matchers::ContainsSubstring("non-integral"));
  CHECK_THROWS(interpolate({P{2, 1}}, 1));
}

TEST_CASE("laurent polynomials") {
  Laurent v = Laurent::v_power(1);
  Laurent vinv = Laurent::v_power(-1);
  CHECK((v * vinv) == Laurent::constant(1));
  CHECK((v + vinv).str() == "v + v^-1");
  CHECK(quantum_int(2) == v + vinv);
  CHECK(quantum_int(3).coeff(0) == 1);
  CHECK(quantum_int(1) == Laurent::constant(1));
  CHECK((v - v).is_zero());

  // [2]! = [2], [3]! = [3][2]
  CHECK(quantum_factorial(2) == quantum_int(2));
  CHECK(quantum_factorial(3) == quantum_int(3) * quantum_int(2));

  // Gaussian binomials: [2 1] = [2], [3 1] = [3], [4 2] = [2]^2 [3] / [2] ...
  CHECK(quantum_binomial(2, 1) == quantum_int(2));
  CHECK(quantum_binomial(3, 1) == quantum_int(3));
  CHECK(quantum_binomial(3, 2) == quantum_int(3));
  CHECK(quantum_binomial(4, 2) * quantum_factorial(2) * quantum_factorial(2) ==
        quantum_factorial(4));
  CHECK(quantum_binomial(3, 0) == Laurent::constant(1));

  // reduction modulo v^2 = q
  Laurent expr = Laurent::v_power(-1) * Int(3) + Laurent::v_power(2);
  auto [a, b] = expr.reduce_v2(2);  // 3 v^{-1} + v^2 = q + (3/q) v at q=2
  CHECK(a == Rat(2));
  CHECK(b == Rat(3, 2));

  // q |-> v^2
  Laurent sub = Laurent::from_q_poly(IntPoly({1, 1}));  // 1 + q
  CHECK(sub == Laurent::constant(1) + Laurent::v_power(2));
  CHECK(sub.eval_one() == 2);
}
