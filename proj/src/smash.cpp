#include "bozec/smash.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "bozec/error.hpp"
#include "bozec/linalg.hpp"

namespace bozec {

void SmashElement::add(const SmashKey& k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SmashElement& SmashElement::operator+=(const SmashElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

SmashElement SmashElement::operator*(const Rational& c) const {
  SmashElement r;
  for (const auto& [k, v] : terms_) r.add(k, v * c);
  return r;
}

SmashProduct::SmashProduct(int n) : n_(n) {
  if (n < 0) throw Error("DomainError", "negative strand count");
}

SmashElement SmashProduct::element(const Exponents& u, const std::vector<int>& sigma,
                                   const Rational& c) const {
  SmashElement e;
  e.add(SmashKey{u, sigma}, c);
  return e;
}

SmashElement SmashProduct::one() const {
  std::vector<int> id(n_);
  std::iota(id.begin(), id.end(), 0);
  return element(Exponents(n_, 0), id);
}

SmashElement SmashProduct::multiply(const SmashElement& a, const SmashElement& b) const {
  SmashElement out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      SmashKey k{ka.u, std::vector<int>(n_)};
      for (int p = 0; p < n_; ++p) {
        k.u[ka.sigma[p]] += kb.u[p];
        k.sigma[p] = ka.sigma[kb.sigma[p]];
      }
      out.add(k, ca * cb);
    }
  }
  return out;
}

std::vector<std::vector<int>> SmashProduct::permutations() const {
  std::vector<std::vector<int>> out;
  std::vector<int> s(n_);
  std::iota(s.begin(), s.end(), 0);
  do {
    out.push_back(s);
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

SmashElement SmashProduct::symmetrizer() const {
  auto perms = permutations();
  SmashElement e;
  const Rational w(1, static_cast<long>(perms.size()));
  for (const auto& s : perms) e.add(SmashKey{Exponents(n_, 0), s}, w);
  return e;
}

std::vector<long> SmashProduct::sandwich_dims(const SmashElement& left, const SmashElement& right,
                                              int max_degree) const {
  const auto perms = permutations();
  std::vector<long> dims;
  for (int d = 0; d <= max_degree; ++d) {
    std::set<SmashElement> rows;
    for (const auto& u : monomials_of_degree(n_, d))
      for (const auto& s : perms) {
        SmashElement v = multiply(left, multiply(element(u, s), right));
        if (!v.is_zero()) rows.insert(std::move(v));
      }
    std::map<SmashKey, std::size_t> cols;
    for (const auto& r : rows)
      for (const auto& [k, c] : r.terms()) cols.emplace(k, cols.size());
    Matrix<Rational> m(rows.size(), std::vector<Rational>(cols.size()));
    std::size_t i = 0;
    for (const auto& r : rows) {
      for (const auto& [k, c] : r.terms()) m[i][cols[k]] = c;
      ++i;
    }
    dims.push_back(static_cast<long>(rank(m)));
  }
  return dims;
}

std::vector<long> SmashProduct::cyclotomic_quotient_dims(int a, int max_degree) const {
  if (n_ > 3 || a > 3) throw Error("BoundExceeded", "cyclotomic oracle supports n <= 3 and a <= 3");
  if (a < 0) throw Error("DomainError", "negative level");
  const auto perms = permutations();
  Exponents xa(n_, 0);
  if (n_ > 0) xa[0] = a;
  const SmashElement gen = element(xa, perms.front());
  std::vector<long> dims;
  for (int d = 0; d <= max_degree; ++d) {
    // the degree-d part of the ideal is spanned by b1 x_1^a b2 with b1, b2
    // basis elements whose degrees add up to d - a
    std::set<SmashElement> rows;
    for (int d1 = 0; d1 <= d - a; ++d1) {
      for (const auto& u1 : monomials_of_degree(n_, d1))
        for (const auto& s1 : perms) {
          SmashElement left = multiply(element(u1, s1), gen);
          for (const auto& u2 : monomials_of_degree(n_, d - a - d1))
            for (const auto& s2 : perms) rows.insert(multiply(left, element(u2, s2)));
        }
    }
    std::map<SmashKey, std::size_t> cols;
    for (const auto& r : rows)
      for (const auto& [k, c] : r.terms()) cols.emplace(k, cols.size());
    Matrix<Rational> m(rows.size(), std::vector<Rational>(cols.size()));
    std::size_t i = 0;
    for (const auto& r : rows) {
      for (const auto& [k, c] : r.terms()) m[i][cols[k]] = c;
      ++i;
    }
    const long total = static_cast<long>(monomials_of_degree(n_, d).size() * perms.size());
    dims.push_back(total - static_cast<long>(rank(m)));
  }
  return dims;
}

RatFunc predicted_cyclotomic_dim(int n, int a, int r) {
  long fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  RatFunc base(LaurentPoly(1) - LaurentPoly::monomial(2 * r * a), LaurentPoly(1) - LaurentPoly::monomial(2 * r));
  return RatFunc(Rational(fact)) * base.pow(n);
}

}  // namespace bozec
