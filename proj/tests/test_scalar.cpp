#include <random>

#include "bozec/linalg.hpp"
#include "bozec/scalar.hpp"
#include "doctest.h"

using namespace bozec;

namespace {

LaurentPoly q(int e = 1) { return LaurentPoly::monomial(e); }

LaurentPoly random_poly(std::mt19937& rng, int lo, int hi) {
  std::uniform_int_distribution<int> coef(-3, 3);
  LaurentPoly p;
  for (int e = lo; e <= hi; ++e) p += LaurentPoly::monomial(e, coef(rng));
  return p;
}

// Polynomials in q^0..q^hi with constant term 1.
LaurentPoly random_den(std::mt19937& rng, int hi) {
  LaurentPoly p = random_poly(rng, 1, hi);
  return p + LaurentPoly(1);
}

// Number of partitions with at most m parts, each at most n - m, weighted by size.
LaurentPoly partitions_in_box(int rows, int cols) {
  LaurentPoly total;
  std::vector<int> parts(rows, 0);
  auto rec = [&](auto&& self, int idx, int bound, int size) -> void {
    if (idx == rows) {
      total += q(size);
      return;
    }
    for (int v = 0; v <= bound; ++v) self(self, idx + 1, v, size + v);
  };
  rec(rec, 0, cols, 0);
  return total;
}

}  // namespace

TEST_CASE("laurent arithmetic") {
  CHECK((LaurentPoly(1) - q(2)) + q(2) == LaurentPoly(1));
  CHECK((LaurentPoly(1) - q(2)) * (LaurentPoly(1) + q(2)) == LaurentPoly(1) - q(4));
  LaurentPoly s = q(-1) + q(1);
  CHECK(s == s.bar());
  CHECK(q(2).bar() == q(-2));
  CHECK((q(3) - q(3)).is_zero());
  CHECK(q(2).to_string() == "q^2");
  CHECK((LaurentPoly(1) + q(2) + q(4)).to_string() == "1 + q^2 + q^4");
  CHECK((LaurentPoly(1) - LaurentPoly::monomial(-3, Rational(1, 2))).to_string() == "-1/2 q^-3 + 1");
}

TEST_CASE("ratfunc canonical form") {
  RatFunc f(LaurentPoly(1), LaurentPoly(1) - q(2));
  RatFunc fb = f.bar();
  CHECK(fb == RatFunc(-q(2), LaurentPoly(1) - q(2)));
  CHECK(fb.den() == LaurentPoly(1) - q(2));
  CHECK(fb.num() == -q(2));
  CHECK(fb.bar() == f);

  RatFunc one(LaurentPoly(1) - q(2), LaurentPoly(1) - q(2));
  CHECK(one == RatFunc(1));
  CHECK(one.is_laurent());

  // (1 - q^4) / (1 - q^2) reduces to 1 + q^2
  CHECK(RatFunc(LaurentPoly(1) - q(4), LaurentPoly(1) - q(2)) == RatFunc(LaurentPoly(1) + q(2)));
  // q^-3 pulled into the numerator
  RatFunc g(LaurentPoly(2), q(3) - q(5));
  CHECK(g.den() == LaurentPoly(1) - q(2));
  CHECK(g.num() == LaurentPoly::monomial(-3, 2));
  // nontrivial constant normalization
  RatFunc h(q(1), LaurentPoly(3) + LaurentPoly::monomial(1, 6));
  CHECK(h.den() == LaurentPoly(1) + LaurentPoly::monomial(1, 2));
  CHECK(h.num() == LaurentPoly::monomial(1, Rational(1, 3)));
  CHECK_THROWS_AS(RatFunc(LaurentPoly(1), LaurentPoly()), Error);
}

TEST_CASE("ratfunc field laws on random inputs") {
  std::mt19937 rng(7);
  for (int t = 0; t < 60; ++t) {
    RatFunc a(random_poly(rng, -2, 3), random_den(rng, 3));
    RatFunc b(random_poly(rng, -1, 2), random_den(rng, 2));
    RatFunc c(random_poly(rng, 0, 2), random_den(rng, 2));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK(a.bar().bar() == a);
    CHECK((a - a).is_zero());
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("series expansion") {
  RatFunc f(LaurentPoly(1), LaurentPoly(1) - q(2));
  TruncSeries s = series_expand(f, 6);
  CHECK(s == TruncSeries({1, 0, 1, 0, 1, 0, 1}));
  CHECK(series_expand(RatFunc(LaurentPoly(1) - q(2), LaurentPoly(1) - q(2)), 3) == TruncSeries({1, 0, 0, 0}));
  CHECK(series_expand(RatFunc(0), 5) == TruncSeries(5));
  CHECK(TruncSeries().bound() == 24);
  CHECK_THROWS_AS(series_expand(RatFunc(q(-1)), 4), Error);
  try {
    series_expand(RatFunc(q(-1)), 4);
  } catch (const Error& e) {
    CHECK(e.code() == "NotExpandable");
  }

  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    RatFunc a(random_poly(rng, 0, 3), random_den(rng, 3));
    RatFunc b(random_poly(rng, 0, 3), random_den(rng, 2));
    CHECK(series_expand(a * b, 12) == series_expand(a, 12) * series_expand(b, 12));
    CHECK(series_expand(a + b, 12) == series_expand(a, 12) + series_expand(b, 12));
  }
}

TEST_CASE("q-combinatorics") {
  CHECK(qint(2, 1) == q(1) + q(-1));
  CHECK(qint(3, 2) == q(4) + LaurentPoly(1) + q(-4));
  CHECK(qint(0) == LaurentPoly());
  CHECK(qfact(3) == qint(2) * qint(3));
  CHECK(qbinom(3, 1) == LaurentPoly(1) + q(1) + q(2));
  CHECK(pochhammer(1, 2) == (LaurentPoly(1) - q(1)) * (LaurentPoly(1) - q(2)));
  CHECK_THROWS_AS(qint(-1), Error);
  CHECK_THROWS_AS(qbinom(2, 3), Error);
  CHECK_THROWS_AS(pochhammer(0, -1), Error);

  for (int n = 1; n <= 12; ++n)
    for (int m = 1; m < n; ++m)
      CHECK(qbinom(n, m) == qbinom(n - 1, m - 1) + q(m) * qbinom(n - 1, m));
  for (int n = 0; n <= 8; ++n)
    for (int m = 0; m <= n; ++m) CHECK(qbinom(n, m) == partitions_in_box(m, n - m));
}

TEST_CASE("gaussian elimination") {
  Matrix<Rational> a{{1, 2}, {3, 4}};
  CHECK(determinant(a) == -2);
  CHECK(rank(a) == 2);
  auto x = solve(a, std::vector<Rational>{5, 6});
  REQUIRE(x);
  CHECK((*x)[0] == -4);
  CHECK((*x)[1] == Rational(9, 2));
  Matrix<Rational> s{{1, 2}, {2, 4}};
  CHECK(rank(s) == 1);
  CHECK(!inverse(s));
  CHECK(!solve(s, std::vector<Rational>{1, 1}));

  RatFunc t(q(1));
  Matrix<RatFunc> m{{RatFunc(1), t}, {t, RatFunc(1)}};
  CHECK(determinant(m) == RatFunc(LaurentPoly(1) - q(2)));
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(multiply(m, *inv) == Matrix<RatFunc>{{RatFunc(1), RatFunc(0)}, {RatFunc(0), RatFunc(1)}});
}
