#pragma once

#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bozec/error.hpp"

namespace bozec {

enum class IndexType { Real, Isotropic, Imaginary };  // a_ii = 2, 0, < 0
enum class AlphabetMode { Full, Appendix };

const char* to_string(IndexType t);

/// A strand label or generator index (i, l).  l is 1 unless i is imaginary
/// (strand labels) or non-real (generator indices).
struct Label {
  int index = 0;
  int mult = 1;
  auto operator<=>(const Label&) const = default;
};

using GenIndex = Label;
using Sequence = std::vector<Label>;

class CartanDatum {
 public:
  CartanDatum() = default;

  /// Validates and builds.  An empty orientation means "lower id to higher
  /// id" on every edge.  Throws Error{"InvalidDatum"} listing every problem.
  CartanDatum(std::vector<std::string> names, std::vector<std::vector<int>> a,
              std::vector<int> d, std::vector<std::pair<int, int>> orientation = {});

  /// Every violated condition, empty when the datum is valid.
  static std::vector<std::string> violations(const std::vector<std::string>& names,
                                             const std::vector<std::vector<int>>& a,
                                             const std::vector<int>& d,
                                             const std::vector<std::pair<int, int>>& orientation);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_.at(i); }
  int index_of(const std::string& name) const;

  int a(int i, int j) const { return a_[i][j]; }
  int r(int i) const { return d_[i]; }
  /// i.j = r_i a_ij
  int dot(int i, int j) const { return d_[i] * a_[i][j]; }
  IndexType type(int i) const;
  const std::vector<std::vector<int>>& matrix() const { return a_; }
  const std::vector<int>& symmetrizers() const { return d_; }
  std::vector<std::pair<int, int>> orientation() const;
  std::vector<int> indices_of(IndexType t) const;

  /// True if the edge between distinct vertices a and b of the label graph
  /// points a -> b.  Labels of one imaginary index point toward larger l.
  bool arrow(const Label& a, const Label& b) const;

  bool valid_label(const Label& l, AlphabetMode mode) const;
  void check_label(const Label& l, AlphabetMode mode) const;

  int dot_degree(const Label& a) const { return 2 * r(a.index); }
  int crossing_degree(const Label& a, const Label& b) const {
    return -a.mult * b.mult * dot(a.index, b.index);
  }

  /// Weight in N[I]: sum of l_k i_k.
  std::vector<int> weight(const Sequence& seq) const;

  std::string label_name(const Label& l) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> a_;
  std::vector<int> d_;
  std::set<std::pair<int, int>> arrows_;
};

}  // namespace bozec
