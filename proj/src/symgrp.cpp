#include "bozec/symgrp.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "bozec/error.hpp"
#include "bozec/linalg.hpp"
#include "bozec/scalar.hpp"

namespace bozec {

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  if (n < 0) throw Error("DomainError", "negative size");
  rec(n, n);
  return out;
}

std::vector<Composition> compositions(int n, int min_parts) {
  std::vector<Composition> out;
  Composition cur;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0) {
      if (static_cast<int>(cur.size()) >= min_parts) out.push_back(cur);
      return;
    }
    for (int p = rest; p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p);
      cur.pop_back();
    }
  };
  if (n > 0) rec(n);
  else if (min_parts <= 0) out.push_back({});
  return out;
}

int size(const std::vector<int>& parts) { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition transpose(const Partition& lambda) {
  Partition t;
  for (int c = 0; !lambda.empty() && c < lambda.front(); ++c) {
    int len = 0;
    while (len < static_cast<int>(lambda.size()) && lambda[len] > c) ++len;
    t.push_back(len);
  }
  return t;
}

Partition sorted_partition(const Composition& c) {
  Partition p = c;
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

bool lex_greater(const Partition& a, const Partition& b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

void check_partition(const Partition& lambda) {
  for (std::size_t k = 0; k < lambda.size(); ++k)
    if (lambda[k] <= 0 || (k > 0 && lambda[k] > lambda[k - 1]))
      throw Error("InvalidPartition", "parts must be positive and weakly decreasing");
}

bool contains(const Partition& lambda, const Partition& mu) {
  if (mu.size() > lambda.size()) return false;
  for (std::size_t k = 0; k < mu.size(); ++k)
    if (mu[k] > lambda[k]) return false;
  return true;
}

namespace {

void check_contains(const Partition& lambda, const Partition& mu) {
  check_partition(lambda);
  check_partition(mu);
  if (!contains(lambda, mu)) throw Error("NotContained", "inner shape is not contained in the outer shape");
}

}  // namespace

long skew_kostka(const Partition& lambda, const Partition& mu, const Composition& content) {
  check_contains(lambda, mu);
  if (size(lambda) - size(mu) != size(content))
    throw Error("SizeMismatch", "content size differs from the skew shape size");
  for (int c : content)
    if (c < 0) throw Error("DomainError", "negative content");
  const int rows = static_cast<int>(lambda.size());
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < rows; ++r)
    for (int c = r < static_cast<int>(mu.size()) ? mu[r] : 0; c < lambda[r]; ++c) cells.emplace_back(r, c);
  std::vector<std::vector<int>> t(rows);
  for (int r = 0; r < rows; ++r) t[r].assign(lambda[r], 0);  // 0 marks a cell of mu
  std::vector<int> left = content;
  long count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      ++count;
      return;
    }
    auto [r, c] = cells[k];
    int lo = 1;
    if (c > 0 && t[r][c - 1] > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0 && t[r - 1][c] > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= static_cast<int>(left.size()); ++v) {
      if (left[v - 1] == 0) continue;
      --left[v - 1];
      t[r][c] = v;
      rec(k + 1);
      t[r][c] = 0;
      ++left[v - 1];
    }
  };
  rec(0);
  return count;
}

long kostka(const Partition& lambda, const Composition& content) {
  check_partition(lambda);
  if (size(lambda) != size(content))
    throw Error("SizeMismatch", "|lambda| = " + std::to_string(size(lambda)) + " but |c| = " +
                                    std::to_string(size(content)));
  return skew_kostka(lambda, {}, content);
}

long specht_dim(const Partition& lambda) {
  check_partition(lambda);
  const Partition t = transpose(lambda);
  Rational num = 1, den = 1;
  for (int k = 2; k <= size(lambda); ++k) num *= k;
  for (std::size_t r = 0; r < lambda.size(); ++r)
    for (int c = 0; c < lambda[r]; ++c) den *= (lambda[r] - c - 1) + (t[c] - static_cast<int>(r) - 1) + 1;
  Rational q = num / den;
  return q.get_num().get_si();
}

long standard_tableaux(const Partition& lambda, const Partition& mu) {
  check_contains(lambda, mu);
  return skew_kostka(lambda, mu, Composition(size(lambda) - size(mu), 1));
}

int skew_trivial_multiplicity(const Partition& lambda, const Partition& mu) {
  check_contains(lambda, mu);
  // row r of lambda/mu spans columns [mu_r, lambda_r); a column holds two
  // cells exactly when lambda_{r+1} > mu_r for some r
  for (std::size_t r = 0; r + 1 < lambda.size(); ++r) {
    const int m = r < mu.size() ? mu[r] : 0;
    if (lambda[r + 1] > m) return 0;
  }
  return 1;
}

std::vector<Chain> restriction_chains(const Partition& lambda, const Composition& b) {
  check_partition(lambda);
  if (size(lambda) != size(b)) throw Error("SizeMismatch", "composition size differs from |lambda|");
  std::vector<Chain> out;
  Chain cur;
  // peel from the outside: shapes[j] has size b_1 + ... + b_{j+1}
  std::function<void(const Partition&, int)> rec = [&](const Partition& outer, int j) {
    if (j < 0) {
      Chain c = cur;
      std::reverse(c.shapes.begin(), c.shapes.end());
      out.push_back(std::move(c));
      return;
    }
    const int target = size(outer) - b[j];
    for (const Partition& inner : partitions(target)) {
      if (!contains(outer, inner)) continue;
      const long d = standard_tableaux(outer, inner);
      cur.shapes.push_back(outer);
      const long saved = cur.dim;
      cur.dim *= d;
      rec(inner, j - 1);
      cur.dim = saved;
      cur.shapes.pop_back();
    }
  };
  rec(lambda, static_cast<int>(b.size()) - 1);
  return out;
}

std::vector<long> character_vector(const Partition& lambda) {
  std::vector<long> v;
  for (const auto& c : compositions(size(lambda))) v.push_back(kostka(lambda, c));
  return v;
}

IntMatrix character_table(int n) {
  IntMatrix m;
  for (const auto& l : partitions(n)) m.push_back(character_vector(l));
  return m;
}

IntMatrix unitriangularity_matrix(int n) {
  const auto ps = partitions(n);
  IntMatrix m(ps.size(), std::vector<long>(ps.size()));
  for (std::size_t c = 0; c < ps.size(); ++c)
    for (std::size_t l = 0; l < ps.size(); ++l) m[c][l] = kostka(ps[l], ps[c]);
  return m;
}

IntMatrix transition_one_vertex(int n, bool inverse) {
  const auto ps = partitions(n);
  IntMatrix t(ps.size(), std::vector<long>(ps.size()));
  for (std::size_t l = 0; l < ps.size(); ++l)
    for (std::size_t m = 0; m < ps.size(); ++m) t[l][m] = kostka(ps[m], ps[l]);
  if (!inverse) return t;
  Matrix<Rational> q(ps.size(), std::vector<Rational>(ps.size()));
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = 0; j < ps.size(); ++j) q[i][j] = t[i][j];
  auto inv = bozec::inverse(q);
  if (!inv) throw Error("SingularMatrix", "transition matrix is singular");
  IntMatrix out(ps.size(), std::vector<long>(ps.size()));
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = 0; j < ps.size(); ++j) {
      const Rational& x = (*inv)[i][j];
      if (x.get_den() != 1) throw Error("NonIntegral", "inverse transition matrix is not integral");
      out[i][j] = x.get_num().get_si();
    }
  return out;
}

long count_matrices(const std::vector<int>& rows, const std::vector<int>& cols, bool zero_one) {
  std::vector<int> left = cols;
  const int nc = static_cast<int>(cols.size());
  std::function<long(std::size_t, int, int)> rec = [&](std::size_t r, int c, int rest) -> long {
    if (r == rows.size()) return std::all_of(left.begin(), left.end(), [](int x) { return x == 0; }) ? 1 : 0;
    if (c == nc) return rest == 0 ? rec(r + 1, 0, r + 1 < rows.size() ? rows[r + 1] : 0) : 0;
    long total = 0;
    const int hi = std::min({rest, left[c], zero_one ? 1 : rest});
    for (int v = 0; v <= hi; ++v) {
      left[c] -= v;
      total += rec(r, c + 1, rest - v);
      left[c] += v;
    }
    return total;
  };
  return rows.empty() ? (std::all_of(cols.begin(), cols.end(), [](int x) { return x == 0; }) ? 1 : 0)
                      : rec(0, 0, rows[0]);
}

}  // namespace bozec
