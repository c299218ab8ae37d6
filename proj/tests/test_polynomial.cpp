#include <random>

#include "bozec/polynomial.hpp"
#include "doctest.h"

using namespace bozec;

TEST_CASE("arithmetic and printing") {
  Poly x1 = Poly::var(2, 0), x2 = Poly::var(2, 1);
  Poly f = x1 * x1 * x2 + x2 * Rational(3);
  CHECK(f.to_string() == "3 x2 + x1^2 x2");
  CHECK(f.total_degree() == 3);
  CHECK((f - f).is_zero());
  CHECK(Poly(2).total_degree() == -1);
  CHECK(f.swap(0) == x2 * x2 * x1 + x1 * Rational(3));
  CHECK(monomials_of_degree(3, 2).size() == 6);
  CHECK(monomials_of_degree(2, 0).size() == 1);
}

TEST_CASE("divided differences") {
  Poly x1 = Poly::var(3, 0), x2 = Poly::var(3, 1), x3 = Poly::var(3, 2);
  CHECK(Poly::constant(3, 5).divided_difference(0).is_zero());
  CHECK(x1.divided_difference(0) == Poly::constant(3, 1));
  CHECK(x2.divided_difference(0) == Poly::constant(3, -1));
  CHECK((x1 * x1).divided_difference(0) == x1 + x2);
  CHECK(x3.divided_difference(0).is_zero());
  // (x_k - x_{k+1}) d_k f = f - s_k f on random polynomials
  std::mt19937 rng(3);
  for (int t = 0; t < 40; ++t) {
    Poly f(3);
    for (int s = 0; s < 4; ++s) {
      Exponents e{static_cast<int>(rng() % 4), static_cast<int>(rng() % 4), static_cast<int>(rng() % 3)};
      f.add(e, Rational(static_cast<int>(rng() % 7) - 3));
    }
    for (int k = 0; k < 2; ++k) {
      Poly lhs = (Poly::var(3, k) - Poly::var(3, k + 1)) * f.divided_difference(k);
      CHECK(lhs == f - f.swap(k));
      // Leibniz rule
      Poly g = x1 * x3 + x2;
      CHECK((f * g).divided_difference(k) == f.divided_difference(k) * g + f.swap(k) * g.divided_difference(k));
    }
  }
}
