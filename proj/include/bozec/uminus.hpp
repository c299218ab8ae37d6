#pragma once

// The negative half as a free algebra on the generator alphabet, with the
// twisted coproduct and the bilinear form.  Equality in the quotient is
// decided by the radical test.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bozec/cartan.hpp"
#include "bozec/linalg.hpp"
#include "bozec/scalar.hpp"
#include "bozec/symgrp.hpp"

namespace bozec {

/// Primitive: letters of imaginary indices stand for the primitive
/// generators b_il.  Geometric: they stand for F_il with the equivariant
/// cohomology norms.
enum class NormMode { Primitive, Geometric };

using Word = std::vector<GenIndex>;

class UElement {
 public:
  UElement() = default;
  UElement(const Word& w, const RatFunc& c = RatFunc(1));
  static UElement one() { return UElement(Word{}); }

  const std::map<Word, RatFunc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFunc coeff(const Word& w) const;

  void add(const Word& w, const RatFunc& c);
  UElement& operator+=(const UElement& o);
  UElement& operator-=(const UElement& o);
  UElement& operator*=(const RatFunc& c);
  friend UElement operator+(UElement a, const UElement& b) { return a += b; }
  friend UElement operator-(UElement a, const UElement& b) { return a -= b; }
  friend UElement operator*(UElement a, const RatFunc& c) { return a *= c; }
  friend UElement operator*(const RatFunc& c, UElement a) { return a *= c; }
  friend UElement operator*(const UElement& a, const UElement& b);
  friend bool operator==(const UElement& a, const UElement& b) { return a.terms_ == b.terms_; }

  UElement bar() const;
  UElement star() const;

 private:
  std::map<Word, RatFunc> terms_;
};

class TensorElement {
 public:
  using Key = std::pair<Word, Word>;
  const std::map<Key, RatFunc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFunc coeff(const Word& a, const Word& b) const;
  void add(const Word& a, const Word& b, const RatFunc& c);
  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend bool operator==(const TensorElement& a, const TensorElement& b) { return a.terms_ == b.terms_; }

  /// x (x) 1 + 1 (x) x
  static TensorElement primitive(const UElement& x);

 private:
  std::map<Key, RatFunc> terms_;
};

class UMinus {
 public:
  explicit UMinus(CartanDatum datum, NormMode mode = NormMode::Primitive,
                  std::map<GenIndex, RatFunc> norm_overrides = {});

  const CartanDatum& datum() const { return datum_; }
  NormMode mode() const { return mode_; }

  /// Whether the letter has primitive coproduct (b-letters).
  bool primitive_letter(const GenIndex& g) const;
  void check_letter(const GenIndex& g) const;
  RatFunc norm(const GenIndex& g) const;

  std::vector<int> weight(const Word& w) const;
  /// (|u|, |v|) for weights in N[I].
  int pairing(const std::vector<int>& u, const std::vector<int>& v) const;

  /// All words of the given weight: by length, then lexicographic.
  std::vector<Word> words_of_weight(const std::vector<int>& wt) const;
  /// Weights of height at most h with a nonempty weight space, by height.
  std::vector<std::vector<int>> weights_up_to(int height) const;

  TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b) const;
  TensorElement coproduct(const UElement& x) const;
  TensorElement coproduct(const GenIndex& g) const;

  RatFunc form(const Word& u, const Word& w) const;
  RatFunc form(const UElement& x, const UElement& y) const;
  /// Same form, computed by splitting the left argument through the full
  /// coproduct of the right one.  Slow; used for cross-checks.
  RatFunc form_left_split(const Word& u, const Word& w) const;
  RatFunc tensor_form(const TensorElement& a, const TensorElement& b) const;
  Matrix<RatFunc> gram_matrix(const std::vector<Word>& words) const;

  bool equal_mod_radical(const UElement& x, const UElement& y) const;
  bool in_radical(const UElement& x) const;
  bool tensor_in_radical(const TensorElement& t) const;

  /// F_i^(n) = F_i^n / [n]_i!
  UElement divided_power(int i, int n) const;
  /// sum_{r+s=1-l a_ij} (-1)^r F_i^(r) F_jl F_i^(s)
  UElement serre_element(int i, const GenIndex& jl) const;

  struct Relation {
    std::string name;
    UElement element;
  };
  /// The defining relations with -l a_ij <= max_exponent (Serre, i real) and
  /// the commutators of non-real letters with a_ij = 0 and l, k <= max_l.
  std::vector<Relation> defining_relations(int max_exponent = 3, int max_l = 3) const;
  /// Expansion of b_il in F-words (geometric mode, imaginary i).  Throws
  /// Error{"SingularGram"} if the lower-monomial Gram matrix is singular.
  UElement primitive_generator(int i, int l) const;
  /// F_il written in the b_ik, with b_ik stored as the letter (i,k).
  UElement inverse_primitive(int i, int l) const;

  enum class PsiDirection { BToF, FToB };
  /// BToF applies the automorphism sending b_il to F_il; FToB its inverse.
  UElement psi(const UElement& x, PsiDirection dir) const;

  /// Algebra substitution of letters by elements (letters missing from the
  /// map are kept).
  UElement substitute(const UElement& x, const std::map<GenIndex, UElement>& images) const;

  void clear_cache() const {
    cache_.clear();
    left_cache_.clear();
  }

 private:
  struct Split {
    Word left, right;
    RatFunc coeff;
  };
  // Terms of rho(u) whose left factor has the given weight.
  std::vector<Split> splits(const Word& u, const std::vector<int>& left_weight) const;

  CartanDatum datum_;
  NormMode mode_;
  std::map<GenIndex, RatFunc> overrides_;
  mutable std::map<std::pair<Word, Word>, RatFunc> cache_;
  mutable std::map<std::pair<Word, Word>, RatFunc> left_cache_;
  mutable std::map<std::pair<int, int>, UElement> primitive_cache_;
};

}  // namespace bozec
