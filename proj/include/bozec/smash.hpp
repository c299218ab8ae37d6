#pragma once
// The smash product K[x_1..x_n] # S_n with (x^u s)(x^v t) = x^u s(x^v) st.
// For the Jordan quiver this is R(n i), so it serves as an independent
// model for symmetrizer pairings and cyclotomic quotients.
#include <map>
#include <vector>

#include "bozec/polynomial.hpp"
#include "bozec/scalar.hpp"

namespace bozec {

struct SmashKey {
  Exponents u;
  std::vector<int> sigma;  // sigma[k] is the image of position k
  auto operator<=>(const SmashKey&) const = default;
};

class SmashElement {
 public:
  const std::map<SmashKey, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const SmashKey& k, const Rational& c);
  SmashElement& operator+=(const SmashElement& o);
  SmashElement operator*(const Rational& c) const;
  friend SmashElement operator+(SmashElement a, const SmashElement& b) { return a += b; }
  friend bool operator==(const SmashElement& a, const SmashElement& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const SmashElement& a, const SmashElement& b) { return a.terms_ < b.terms_; }

 private:
  std::map<SmashKey, Rational> terms_;
};

class SmashProduct {
 public:
  explicit SmashProduct(int n);
  int n() const { return n_; }

  SmashElement element(const Exponents& u, const std::vector<int>& sigma, const Rational& c = 1) const;
  SmashElement one() const;
  SmashElement multiply(const SmashElement& a, const SmashElement& b) const;
  /// (1/n!) sum of all permutations.
  SmashElement symmetrizer() const;
  std::vector<std::vector<int>> permutations() const;

  /// Dimension of span{left x^u s right} in each polynomial degree
  /// 0..max_degree of the middle factor.
  std::vector<long> sandwich_dims(const SmashElement& left, const SmashElement& right,
                                  int max_degree) const;

  /// Dimension of the quotient by the two-sided ideal generated by x_1^a in
  /// each polynomial degree 0..max_degree.  Brute force, so n <= 3 and
  /// a <= 3; larger inputs throw Error{"BoundExceeded"}.
  std::vector<long> cyclotomic_quotient_dims(int a, int max_degree) const;

 private:
  int n_;
};

/// n! ((1 - q^{2ra}) / (1 - q^{2r}))^n, the graded dimension predicted by the
/// basis x^u tau_w with every exponent below a.
RatFunc predicted_cyclotomic_dim(int n, int a, int r);

}  // namespace bozec
