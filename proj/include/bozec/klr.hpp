#pragma once

// KLR algebras R(nu): the diagram basis x^u tau_w 1_i, exact multiplication
// by normal-form rewriting, the polynomial representation, graded
// dimensions, symmetrizers and the Khovanov-Lauda pairing.
//
// Conventions: products compose like operators, so (ab)f = a(bf) and "a
// sits on top of b".  Strand positions are 0-based internally; the public
// generator constructors take 1-based k.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bozec/cartan.hpp"
#include "bozec/polynomial.hpp"
#include "bozec/scalar.hpp"

namespace bozec {

/// w[a] is the target position of the strand starting at source position a.
using Perm = std::vector<int>;

struct BasisKey {
  Sequence src;
  Perm w;
  Exponents dots;  // on target positions
  auto operator<=>(const BasisKey&) const = default;
};

class KLRElement {
 public:
  const std::map<BasisKey, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const BasisKey& k) const;
  void add(const BasisKey& k, const Rational& c);
  KLRElement& operator+=(const KLRElement& o);
  KLRElement& operator-=(const KLRElement& o);
  KLRElement operator*(const Rational& c) const;
  friend KLRElement operator+(KLRElement a, const KLRElement& b) { return a += b; }
  friend KLRElement operator-(KLRElement a, const KLRElement& b) { return a -= b; }
  friend bool operator==(const KLRElement& a, const KLRElement& b) { return a.terms_ == b.terms_; }
  /// Multiplies every term by the dot monomial on its target positions.
  KLRElement times_dots(const Exponents& e) const;

 private:
  std::map<BasisKey, Rational> terms_;
};

enum class BlockKind { Plain, Divided, Symmetric };

/// n strands of one label; Divided is the nil-Hecke idempotent of a real
/// index, Symmetric the averaging idempotent of an isotropic index.
struct Block {
  Label label;
  int n = 1;
  BlockKind kind = BlockKind::Plain;
};
using Decorated = std::vector<Block>;

/// Outcome of checking the local relations on monomials of P_seq.
struct RelationReport {
  std::map<std::string, long> checked;  // relation name -> instances
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Coefficients of q^low, q^{low+1}, ..., kept with a nonzero leading
/// coefficient (an all-zero series has low = high + 1 and no coefficients).
struct GradedSeries {
  int low = 0;
  std::vector<Rational> coeffs;
  void normalize();
  friend bool operator==(const GradedSeries& a, const GradedSeries& b) {
    return a.low == b.low && a.coeffs == b.coeffs;
  }
  std::string to_string() const;
};

/// Coefficients of q^low..q^high of f (f may have a pole of order <= -low).
GradedSeries to_series(const RatFunc& f, int low, int high);

class KLR {
 public:
  explicit KLR(CartanDatum datum, AlphabetMode mode = AlphabetMode::Full);

  const CartanDatum& datum() const { return datum_; }
  AlphabetMode mode() const { return mode_; }

  // generators
  KLRElement idempotent(const Sequence& seq) const;
  KLRElement dot(const Sequence& seq, int k) const;
  KLRElement crossing(const Sequence& seq, int k) const;
  KLRElement basis(const Sequence& src, const Perm& w, const Exponents& dots) const;
  KLRElement basis(const BasisKey& key) const;

  Sequence target(const Sequence& src, const Perm& w) const;
  int degree(const BasisKey& key) const;
  int crossing_degree(const Sequence& src, const Perm& w) const;
  /// Degree of a homogeneous nonzero element; nullopt otherwise.
  std::optional<int> degree(const KLRElement& x) const;

  /// Canonical (lexicographically smallest) reduced word, 0-based letters,
  /// leftmost letter on top.
  static std::vector<int> reduced_word(const Perm& w);

  KLRElement multiply(const KLRElement& a, const KLRElement& b) const;
  /// Left multiplication by tau_k (0-based).
  KLRElement lmul_tau(int k, const KLRElement& x) const;
  KLRElement psi(const KLRElement& x) const;

  // polynomial representation
  /// tau_k (0-based) applied to f in P_seq; the result lies in P_{s_k seq}.
  Poly act_tau(const Sequence& seq, int k, const Poly& f) const;
  /// x applied to f in P_seq, grouped by target sequence.
  std::map<Sequence, Poly> act(const KLRElement& x, const Sequence& seq, const Poly& f) const;

  /// tau_k^2 1_seq as a polynomial.
  Poly tau_squared(const Sequence& seq, int k) const;
  /// (tau_p tau_{p+1} tau_p - tau_{p+1} tau_p tau_{p+1}) 1_seq as a polynomial.
  Poly braid_correction(const Sequence& seq, int p) const;
  /// Checks the quadratic, dot-slide, far-commutation and braid relations on
  /// every monomial of total degree <= max_degree in P_i, for every ordering
  /// i of nu.
  RelationReport verify_relations(const Sequence& nu, int max_degree) const;

  // dimensions
  /// Dim 1_tgt R 1_src in closed form.
  RatFunc graded_dim(const Sequence& src, const Sequence& tgt) const;
  static RatFunc center_graded_dim(const CartanDatum& d, const Sequence& nu);
  int min_degree(const Sequence& src, const Sequence& tgt) const;
  std::vector<BasisKey> basis_of_degree(const Sequence& src, const Sequence& tgt, int d) const;
  /// Graded dimension of span{left * b * right} for b in 1_tgt R 1_src,
  /// degrees low..high of the product.  left and right must be homogeneous.
  GradedSeries sandwich_dims(const KLRElement& left, const KLRElement& right, const Sequence& src,
                             const Sequence& tgt, int high) const;

  // symmetrizers and decorated idempotents
  KLRElement symmetrizer(const Label& l, int n, BlockKind kind) const;
  Sequence expand(const Decorated& d) const;
  KLRElement idempotent(const Decorated& d) const;
  /// <i>: sum over divided blocks of n(n-1)/2 r_i.
  int shift(const Decorated& d) const;
  /// Dim 1_k P_i for the projective P_i = R psi(1_i){-<i>}, closed form.
  RatFunc projective_dim(const Sequence& k, const Decorated& i) const;
  /// Dim 1_k P_i by linear algebra, up to degree high.
  GradedSeries projective_dim_series(const Sequence& k, const Decorated& i, int high) const;
  struct DimComparison {
    Sequence k;
    RatFunc lhs, rhs;
  };
  /// Dim 1_k of the two direct sums of projectives, for every k in the class.
  std::vector<DimComparison> compare_projectives(const std::vector<Decorated>& lhs,
                                                 const std::vector<Decorated>& rhs) const;
  /// The two sides of the Serre isomorphism for real i, j != i and n >= 1
  /// with m = 1 - n a_ij: sum over even c of P_{i^(c) J i^(m-c)} against the
  /// sum over odd c, where J is j^n, (j,n) or the symmetrizer e_{j,n}
  /// according to the type of j.
  std::pair<std::vector<Decorated>, std::vector<Decorated>> serre_projectives(int i, int j, int n) const;
  /// (P_a, P_b) = q^{-<a>-<b>} Dim(1_a R psi(1_b)) to degree high.  Plain
  /// shapes of any nu and pure one-label shapes are supported; anything else
  /// throws Error{"UnsupportedShape"}.
  GradedSeries kl_pairing(const Decorated& a, const Decorated& b, int high) const;
  /// Closed form for plain shapes.
  std::optional<RatFunc> kl_pairing_exact(const Decorated& a, const Decorated& b) const;

  /// All distinct orderings of the multiset nu, sorted.
  static std::vector<Sequence> orderings(Sequence nu);

  void clear_cache() const { tau_cache_.clear(); }

 private:
  KLRElement tau_canonical(int k, const Sequence& src, const Perm& w) const;
  void check_sequence(const Sequence& s) const;
  bool equal_real(const Label& a, const Label& b) const;

  CartanDatum datum_;
  AlphabetMode mode_;
  mutable std::map<std::pair<int, std::pair<Sequence, Perm>>, KLRElement> tau_cache_;
};

Perm identity_perm(int n);
Perm apply_s(int k, const Perm& w);  // s_k w
Perm inverse(const Perm& w);

}  // namespace bozec
