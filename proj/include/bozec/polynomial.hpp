#pragma once

// Polynomials in x_1..x_n over Q, used by the polynomial representation.

#include <map>
#include <string>
#include <vector>

#include "bozec/scalar.hpp"

namespace bozec {

using Exponents = std::vector<int>;

class Poly {
 public:
  Poly() = default;
  explicit Poly(int nvars) : n_(nvars) {}
  static Poly constant(int nvars, const Rational& c);
  static Poly monomial(const Exponents& e, const Rational& c = 1);
  /// x_k^p, 0-based k.
  static Poly var(int nvars, int k, int p = 1);

  int nvars() const { return n_; }
  const std::map<Exponents, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int total_degree() const;  // -1 for zero

  void add(const Exponents& e, const Rational& c);
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator*(const Rational& c) const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }

  /// Swaps x_k and x_{k+1} (0-based k).
  Poly swap(int k) const;
  /// (f - s_k f) / (x_k - x_{k+1}), exact.
  Poly divided_difference(int k) const;

  std::string to_string() const;

 private:
  int n_ = 0;
  std::map<Exponents, Rational> t_;
};

/// All exponent vectors in n variables with total degree exactly d.
std::vector<Exponents> monomials_of_degree(int n, int d);

}  // namespace bozec
