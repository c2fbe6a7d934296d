#include <doctest.h>

#include "kc/corpus.hpp"
#include "kc/snf.hpp"
#include "oracles.hpp"

using namespace kc;

namespace {

LaurentPoly t(long e = 1) { return LaurentPoly::t(e); }
const LaurentPoly one(1);

}  // namespace

TEST_SUITE("rings") {

TEST_CASE("laurent products") {
  CHECK((t() - one) * (t(-1) - one) == LaurentPoly(2) - t() - t(-1));
  LaurentPoly a = poly({3, 0, -1}, -2);
  CHECK(a * one == a);
  CHECK(poly({1, -1, 1}) * t(-1) == t() - one + t(-1));
}

TEST_CASE("laurent involution") {
  CHECK(poly({0, -1, 3}).involute() == poly({3, -1}, -2));
  LaurentPoly d = poly({1, -1, 1});
  CHECK(d.involute() == t(-2) - t(-1) + one);
  CHECK(t(2) * d.involute() == d);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    LaurentPoly x = oracle::random_poly(rng);
    CHECK(x.involute().involute() == x);
  }
}

TEST_CASE("laurent arithmetic agrees with evaluation") {
  std::mt19937_64 rng(2);
  const Rat pts[] = {Rat(2), Rat(-3), Rat(1, 2), Rat(5, 3)};
  for (int i = 0; i < 100; ++i) {
    LaurentPoly a = oracle::random_poly(rng), b = oracle::random_poly(rng);
    for (const Rat& x : pts) {
      CHECK(oracle::eval(a * b, x) == oracle::eval(a, x) * oracle::eval(b, x));
      CHECK(oracle::eval(a + b, x) == oracle::eval(a, x) + oracle::eval(b, x));
      CHECK(oracle::eval(a.involute(), x) == oracle::eval(a, 1 / x));
    }
    if (!b.is_zero()) {
      auto [q, r] = divmod(a, b);
      CHECK(q * b + r == a);
      CHECK((r.is_zero() || r.span() < b.span()));
    }
  }
}

TEST_CASE("gcd and bezout") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    LaurentPoly a = oracle::random_poly(rng, 0, 2), b = oracle::random_poly(rng, 0, 2), c = oracle::random_poly(rng, 0, 1);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    LaurentPoly g = gcd(a * c, b * c);
    CHECK(divides(c, g));
    CHECK(divides(g, a * c));
    CHECK(divides(g, b * c));
    Bezout e = xgcd(a, b);
    CHECK(e.u * a + e.v * b == e.g);
  }
}

TEST_CASE("proper part") {
  // t^2 + 1 = (t + 1)(t - 1) + 2
  RationalFunction q(t(2) + one, t() - one);
  CHECK(rf_proper_part(q) == TorsionClass(RationalFunction(LaurentPoly(2), t() - one)));
  CHECK(rf_proper_part(RationalFunction(t() - one)).is_zero());
  RationalFunction p(one, t() - one);
  CHECK(rf_proper_part(p) == TorsionClass(p));
}

TEST_CASE("smith normal form examples") {
  const LaurentPoly z;
  Matrix<LaurentPoly> D = Matrix<LaurentPoly>::diagonal({t() - one, (t() - one) * (t() - one)}, z);
  auto s = snf(D);
  REQUIRE(s.factors.size() == 2);
  CHECK(associates(s.factors[0], t() - one));
  CHECK(associates(s.factors[1], (t() - one) * (t() - one)));

  Matrix<LaurentPoly> A(2, 2, z);
  A(0, 0) = t();
  A(0, 1) = one;
  A(1, 1) = t() - one;
  auto s2 = snf(A);
  REQUIRE(s2.factors.size() == 2);
  CHECK(s2.factors[0].is_unit());
  CHECK(associates(s2.factors[1], t() * (t() - one)));
  CHECK(s2.U * A * s2.V == s2.D);

  auto s3 = snf(Matrix<LaurentPoly>(3, 2, z));
  CHECK(s3.rank == 0);
  CHECK(s3.factors.empty());
}

TEST_CASE("integer smith form matches determinantal divisors") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 60; ++i) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    Matrix<Int> A = oracle::random_int_matrix(rng, r, c);
    if (i % 3 == 0 && r > 1)
      for (std::size_t j = 0; j < c; ++j) A(r - 1, j) = 2 * A(0, j);
    auto s = snf(A);
    CHECK(s.U * A * s.V == s.D);
    auto inv = oracle::invariant_factors(A);
    REQUIRE(s.factors.size() == inv.size());
    for (std::size_t k = 0; k < inv.size(); ++k) CHECK(abs(s.factors[k]) == abs(inv[k]));
  }
}

TEST_CASE("solve_linear") {
  const LaurentPoly z;
  Matrix<LaurentPoly> A = Matrix<LaurentPoly>::diagonal({t() - one}, z);
  auto r = solve_linear(A, {one});
  REQUIRE(r);
  CHECK(r->first == std::vector<LaurentPoly>{one});
  CHECK(associates(r->second, t() - one));

  Matrix<LaurentPoly> I = Matrix<LaurentPoly>::identity(2, z);
  std::vector<LaurentPoly> b = {poly({1, 2}), t(-3)};
  auto r2 = solve_linear(I, b);
  REQUIRE(r2);
  CHECK(r2->second == one);
  CHECK(r2->first == b);

  Matrix<LaurentPoly> T = Matrix<LaurentPoly>::diagonal({t(), t()}, z);
  auto r3 = solve_linear(T, {one, t()});
  REQUIRE(r3);
  // substitute back: A x = s b
  for (std::size_t i = 0; i < 2; ++i) {
    LaurentPoly lhs;
    for (std::size_t j = 0; j < 2; ++j) lhs += T(i, j) * r3->first[j];
    CHECK(lhs == r3->second * std::vector<LaurentPoly>{one, t()}[i]);
  }
  CHECK(r3->second.is_unit());
}

}  // TEST_SUITE
