#pragma once

// Exact scalars in one variable q: Laurent polynomials over Q, rational
// functions in canonical form, truncated power series, and the usual
// q-combinatorial functions.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "bozec/error.hpp"

namespace bozec {

using Rational = mpq_class;

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: constants convert implicitly
  LaurentPoly(const Rational& c);  // NOLINT

  /// c * q^e
  static LaurentPoly monomial(int e, const Rational& c = 1);

  const std::map<int, Rational>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int e) const;
  // Both require a nonzero polynomial.
  int min_exp() const;
  int max_exp() const;

  LaurentPoly bar() const;
  LaurentPoly shifted(int k) const;          // q^k * f
  LaurentPoly substitute_power(int r) const; // f(q^r)

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }

  LaurentPoly pow(unsigned n) const;

  /// Human readable, e.g. "1 + q^2 - 1/2 q^-3".
  std::string to_string() const;

 private:
  void add_term(int e, const Rational& c);
  std::map<int, Rational> c_;
};

/// Quotient of Laurent polynomials, kept canonical: the denominator is an
/// ordinary polynomial with constant term 1, coprime to the numerator, and
/// every power of q lives in the numerator.  Equality is structural.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(long c);                  // NOLINT
  RatFunc(const Rational& c);       // NOLINT
  RatFunc(const LaurentPoly& num);  // NOLINT
  RatFunc(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const;

  RatFunc bar() const;
  RatFunc inverse() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const;
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFunc pow(int n) const;
  std::string to_string() const;

 private:
  void canonicalize();
  LaurentPoly num_;
  LaurentPoly den_ = LaurentPoly(1);
};

/// Coefficients of q^0 .. q^D.
class TruncSeries {
 public:
  explicit TruncSeries(int bound = kDefaultBound);
  TruncSeries(std::vector<Rational> coeffs);

  static constexpr int kDefaultBound = 24;

  int bound() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](std::size_t k) const { return c_[k]; }
  Rational& operator[](std::size_t k) { return c_[k]; }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  std::vector<Rational> c_;
};

/// Power series of f to order D.  Throws Error{"NotExpandable"} if f has a
/// pole at q = 0.
TruncSeries series_expand(const RatFunc& f, int bound = TruncSeries::kDefaultBound);

// q-combinatorics.  All throw Error{"DomainError"} on negative arguments.

/// Balanced q-integer in q^r: (q^{rn} - q^{-rn}) / (q^r - q^{-r}).
LaurentPoly qint(int n, int r = 1);
LaurentPoly qfact(int n, int r = 1);
/// Gaussian binomial [n choose m] as a polynomial in q.
LaurentPoly qbinom(int n, int m);
/// (q^a; q)_n = (1 - q^a)(1 - q^{a+1}) ... (1 - q^{a+n-1}).
LaurentPoly pochhammer(int a, int n);

/// 1 / ((1 - q^{2r})(1 - q^{4r}) ... (1 - q^{2rn})); the graded dimension of
/// the ring of symmetric polynomials in n variables of degree 2r.
RatFunc sym_poly_dim(int n, int r = 1);

}  // namespace bozec
