#include "bozec/cyclotomic.hpp"

#include <algorithm>

#include "bozec/error.hpp"

namespace bozec {

namespace {

RatFunc qpow(int e) { return RatFunc(LaurentPoly::monomial(e)); }

void check_p(int p) {
  if (p < 0) throw Error("DomainError", "negative p");
}

}  // namespace

void check_config(const JordanConfig& c) {
  if (c.r < 1) throw Error("InvalidConfig", "r must be positive");
  if (c.a < 0) throw Error("InvalidConfig", "a must be nonnegative");
}

RatFunc nu(int k, int r) { return sym_poly_dim(k, r); }

RatFunc beta(int p, const JordanConfig& c) {
  check_config(c);
  check_p(p);
  LaurentPoly num(1), den(1);
  for (int j = 0; j < p; ++j) num *= LaurentPoly(1) - LaurentPoly::monomial(2 * c.r * (c.a + j));
  for (int k = 1; k <= p; ++k) den *= LaurentPoly(1) - LaurentPoly::monomial(2 * c.r * k);
  return RatFunc(num, den);
}

RatFunc beta_recursive(int p, const JordanConfig& c) {
  check_config(c);
  check_p(p);
  if (p == 0) return RatFunc(1);
  RatFunc b = nu(p, c.r) * RatFunc(LaurentPoly(1) - LaurentPoly::monomial(2 * c.r * p * c.a));
  for (int k = 1; k < p; ++k) b = b - nu(k, c.r) * qpow(2 * c.r * k * c.a) * beta_recursive(p - k, c);
  return b;
}

RatFunc alpha_closed(int p, const JordanConfig& c) { return qpow(-p * c.r * c.a) * beta(p, c); }

RatFunc alpha_recursive(int p, const JordanConfig& c) {
  check_config(c);
  check_p(p);
  if (p == 0) return RatFunc(1);
  std::vector<RatFunc> al(p + 1, RatFunc(0));
  const int K = c.r * c.a;  // K = q^K
  for (int s = 1; s <= p; ++s) {
    RatFunc v = nu(s, c.r) * (qpow(-s * K) - qpow(s * K));
    for (int k = 1; k < s; ++k) v = v - nu(k, c.r) * qpow(k * K) * al[s - k];
    al[s] = v;
  }
  return al[p];
}

bool gauss_identity(int p, int a) {
  if (p < 1 || a < 1) throw Error("DomainError", "gauss identity needs p, a >= 1");
  LaurentPoly rhs;
  for (int k = 0; k < p; ++k) rhs += LaurentPoly::monomial(k * a) * qbinom(p, k) * pochhammer(a, p - k);
  return rhs == LaurentPoly(1) - LaurentPoly::monomial(p * a);
}

void add_to(VVector& v, const Partition& lambda, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = v.try_emplace(lambda, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) v.erase(it);
  }
}

bool is_zero(const VVector& v) { return v.empty(); }

JordanModule::JordanModule(JordanConfig c) : c_(c) { check_config(c_); }

RatFunc JordanModule::alpha(int p) const {
  while (static_cast<int>(alpha_.size()) <= p) alpha_.push_back(alpha_closed(static_cast<int>(alpha_.size()), c_));
  return alpha_[p];
}

VVector JordanModule::basis(const Partition& lambda) const {
  check_partition(lambda);
  VVector v;
  if (c_.a == 0 && !lambda.empty()) return v;
  v.emplace(lambda, RatFunc(1));
  return v;
}

std::vector<Partition> JordanModule::level(int n) const {
  if (c_.a == 0 && n > 0) return {};
  return partitions(n);
}

VVector JordanModule::apply_F(int t, const VVector& v) const {
  if (t < 0) throw Error("DomainError", "negative generator index");
  if (t == 0) return v;
  VVector out;
  if (c_.a == 0) return out;
  for (const auto& [lambda, coef] : v) {
    Partition mu = lambda;
    mu.insert(std::upper_bound(mu.begin(), mu.end(), t, std::greater<>()), t);
    add_to(out, mu, coef);
  }
  return out;
}

VVector JordanModule::apply_K(const VVector& v) const {
  VVector out;
  for (const auto& [lambda, coef] : v) add_to(out, lambda, coef * qpow(c_.r * c_.a));
  return out;
}

VVector JordanModule::apply_E_peeling(int l, const Partition& lambda, std::size_t peel) const {
  if (l == 0) return basis(lambda);
  if (lambda.empty()) return {};
  Partition rest = lambda;
  const int t = rest.at(peel);
  rest.erase(rest.begin() + static_cast<long>(peel));
  // E_l F_t w = F_t E_l w + sum_{p>=1} alpha_p F_{t-p} E_{l-p} w
  VVector out = apply_F(t, E_basis(l, rest));
  for (int p = 1; p <= std::min(l, t); ++p) {
    VVector term = apply_F(t - p, E_basis(l - p, rest));
    for (const auto& [mu, coef] : term) add_to(out, mu, alpha(p) * coef);
  }
  return out;
}

VVector JordanModule::E_basis(int l, const Partition& lambda) const {
  auto key = std::make_pair(l, lambda);
  if (auto it = e_cache_.find(key); it != e_cache_.end()) return it->second;
  VVector r = apply_E_peeling(l, lambda, 0);
  e_cache_.emplace(std::move(key), r);
  return r;
}

VVector JordanModule::apply_E(int l, const VVector& v) const {
  if (l < 0) throw Error("DomainError", "negative generator index");
  VVector out;
  for (const auto& [lambda, coef] : v)
    for (const auto& [mu, c] : E_basis(l, lambda)) add_to(out, mu, coef * c);
  return out;
}

VVector JordanModule::commutator_defect(int l, int t, const VVector& v) const {
  VVector out = apply_E(l, apply_F(t, v));
  for (const auto& [mu, c] : apply_F(t, apply_E(l, v))) add_to(out, mu, RatFunc(0) - c);
  for (int p = 1; p <= std::min(l, t); ++p)
    for (const auto& [mu, c] : apply_F(t - p, apply_E(l - p, v))) add_to(out, mu, RatFunc(0) - alpha(p) * c);
  return out;
}

std::vector<std::vector<RatFunc>> JordanModule::contravariant_matrix(int n) const {
  const auto cols = level(n);
  const auto rows = compositions(n);
  std::vector<std::vector<RatFunc>> m(rows.size(), std::vector<RatFunc>(cols.size(), RatFunc(0)));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      VVector v = basis(cols[j]);
      for (int part : rows[i]) v = apply_E(part, v);
      auto it = v.find(Partition{});
      if (it != v.end()) m[i][j] = it->second;
    }
  }
  return m;
}

}  // namespace bozec
