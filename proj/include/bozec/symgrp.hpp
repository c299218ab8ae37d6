#pragma once
// Characteristic-zero combinatorics of the symmetric groups: partitions,
// compositions, Kostka numbers, Specht dimensions, skew restriction and the
// one-vertex transition matrices.
#include <vector>

namespace bozec {

using Partition = std::vector<int>;    // weakly decreasing, positive parts
using Composition = std::vector<int>;  // positive parts
using IntMatrix = std::vector<std::vector<long>>;

/// Partitions of n, lexicographically decreasing.
std::vector<Partition> partitions(int n);
/// Compositions of n with at least min_parts parts, reverse-lexicographic.
std::vector<Composition> compositions(int n, int min_parts = 1);

int size(const std::vector<int>& parts);
Partition transpose(const Partition& lambda);
/// lambda_c: the parts of c sorted decreasingly.
Partition sorted_partition(const Composition& c);
/// a > b in lexicographic order.
bool lex_greater(const Partition& a, const Partition& b);
bool contains(const Partition& lambda, const Partition& mu);
/// Throws Error{"InvalidPartition"} unless parts are positive and decreasing.
void check_partition(const Partition& lambda);

/// Semistandard tableaux of shape lambda/mu and content c, counted by
/// filling cells one at a time.
long skew_kostka(const Partition& lambda, const Partition& mu, const Composition& content);
/// K_{lambda,c}.  Throws Error{"SizeMismatch"} if |lambda| != |c|.
long kostka(const Partition& lambda, const Composition& content);

/// Hook-length formula.
long specht_dim(const Partition& lambda);
/// Standard tableaux of shape lambda/mu, counted directly.
long standard_tableaux(const Partition& lambda, const Partition& mu = {});

/// Multiplicity of the trivial module in S^{lambda/mu}: 1 if no column of
/// lambda/mu holds two cells, else 0.  Throws Error{"NotContained"}.
int skew_trivial_multiplicity(const Partition& lambda, const Partition& mu);

struct Chain {
  std::vector<Partition> shapes;  // lambda^(1) < ... < lambda^(l) = lambda
  long dim = 1;                   // product of skew Specht dimensions
};
/// Chains with |lambda^(j)/lambda^(j-1)| = b_j.
std::vector<Chain> restriction_chains(const Partition& lambda, const Composition& b);

/// Coefficients K_{lambda,c} for c over compositions(n).
std::vector<long> character_vector(const Partition& lambda);
/// Rows over partitions(n), columns over compositions(n).
IntMatrix character_table(int n);

/// M[c][l] = K_{lambda_l, lambda_c} over partitions(n).
IntMatrix unitriangularity_matrix(int n);
/// T[l][m]: h_{lambda_l} = sum_m T[l][m] s_{lambda_m}; with inverse = true,
/// the integer inverse matrix.
IntMatrix transition_one_vertex(int n, bool inverse = false);

/// Matrices with entries in N (or in {0,1}) with the given row and column
/// sums, counted directly.
long count_matrices(const std::vector<int>& rows, const std::vector<int>& cols, bool zero_one);

}  // namespace bozec
