#pragma once
// The Jordan quiver I = I^0 = {i} at level a = Lambda(h_i): the series
// beta_p and alpha_p, the Gauss identity, the module V(Lambda) with its
// E, F, K operators, and the cyclotomic quotient dimensions.
#include <map>
#include <vector>

#include "bozec/scalar.hpp"
#include "bozec/symgrp.hpp"

namespace bozec {

struct JordanConfig {
  int r = 1;  // symmetrizer r_i
  int a = 1;  // level Lambda(h_i)
};

void check_config(const JordanConfig& c);

/// nu_k = 1 / ((1 - q_i^2)(1 - q_i^4) ... (1 - q_i^{2k})), nu_0 = 1.
RatFunc nu(int k, int r);
/// Dim Z_p^Lambda = prod_{j<p} (1 - q_i^{2(a+j)}) / prod_{k<=p} (1 - q_i^{2k}).
RatFunc beta(int p, const JordanConfig& c);
/// beta_p from the recursion beta_p = nu_p (1 - q_i^{2pa}) - sum_k nu_k q_i^{2ka} beta_{p-k}.
RatFunc beta_recursive(int p, const JordanConfig& c);
/// q_i^{-pa} beta_p.
RatFunc alpha_closed(int p, const JordanConfig& c);
/// alpha_p = nu_p (K^{-p} - K^p) - sum_{k<p} nu_k K^k alpha_{p-k}, K = q_i^a,
/// starting from alpha_1 = nu_1 (K^{-1} - K).
RatFunc alpha_recursive(int p, const JordanConfig& c);
/// (1 - q^{pa}) == sum_{k<p} q^{ka} [p choose k] (q^a; q)_{p-k} in plain q.
bool gauss_identity(int p, int a);

/// Vectors of V(Lambda) in the basis F_{i,lambda} v_Lambda.
using VVector = std::map<Partition, RatFunc>;

class JordanModule {
 public:
  explicit JordanModule(JordanConfig c);
  const JordanConfig& config() const { return c_; }

  VVector basis(const Partition& lambda) const;
  /// Basis partitions of level n (none above level 0 when a = 0).
  std::vector<Partition> level(int n) const;

  VVector apply_F(int t, const VVector& v) const;
  VVector apply_E(int l, const VVector& v) const;
  VVector apply_K(const VVector& v) const;
  /// E_l on a basis vector, peeling the part at position peel first.
  VVector apply_E_peeling(int l, const Partition& lambda, std::size_t peel) const;

  /// E_l F_t - F_t E_l - sum_{p>=1} alpha_p F_{t-p} E_{l-p} on v.
  VVector commutator_defect(int l, int t, const VVector& v) const;
  /// Matrix of coefficients of v_Lambda in E_c F_lambda v_Lambda, rows over
  /// compositions c of n, columns over partitions lambda of n.
  std::vector<std::vector<RatFunc>> contravariant_matrix(int n) const;

 private:
  VVector E_basis(int l, const Partition& lambda) const;
  RatFunc alpha(int p) const;

  JordanConfig c_;
  mutable std::map<std::pair<int, Partition>, VVector> e_cache_;
  mutable std::vector<RatFunc> alpha_;
};

void add_to(VVector& v, const Partition& lambda, const RatFunc& c);
bool is_zero(const VVector& v);

}  // namespace bozec
