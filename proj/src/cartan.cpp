#include "bozec/cartan.hpp"

#include <algorithm>
#include <sstream>

namespace bozec {

const char* to_string(IndexType t) {
  switch (t) {
    case IndexType::Real: return "real";
    case IndexType::Isotropic: return "isotropic";
    case IndexType::Imaginary: return "imaginary";
  }
  return "?";
}

std::vector<std::string> CartanDatum::violations(
    const std::vector<std::string>& names, const std::vector<std::vector<int>>& a,
    const std::vector<int>& d, const std::vector<std::pair<int, int>>& orientation) {
  std::vector<std::string> out;
  const int n = static_cast<int>(names.size());
  auto nm = [&](int i) { return names[i]; };
  if (n == 0) out.push_back("index set is empty");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (names[i] == names[j]) out.push_back("duplicate index name " + nm(i));
  if (static_cast<int>(a.size()) != n) {
    out.push_back("A has " + std::to_string(a.size()) + " rows, expected " + std::to_string(n));
    return out;
  }
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(a[i].size()) != n) {
      out.push_back("row " + nm(i) + " of A has wrong length");
      return out;
    }
  if (static_cast<int>(d.size()) != n) {
    out.push_back("D has " + std::to_string(d.size()) + " entries, expected " + std::to_string(n));
    return out;
  }
  for (int i = 0; i < n; ++i) {
    if (d[i] <= 0) out.push_back("r_" + nm(i) + " = " + std::to_string(d[i]) + " is not positive");
    int aii = a[i][i];
    if (aii != 2 && (aii > 0 || aii % 2 != 0))
      out.push_back("a_" + nm(i) + nm(i) + " = " + std::to_string(aii) + " is not 2 or a nonpositive even integer");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0)
        out.push_back("a_" + nm(i) + nm(j) + " = " + std::to_string(a[i][j]) + " is positive");
      if (j > i && d[i] * a[i][j] != d[j] * a[j][i])
        out.push_back("symmetrizability fails at (" + nm(i) + "," + nm(j) + "): r_i a_ij = " +
                      std::to_string(d[i] * a[i][j]) + " but r_j a_ji = " + std::to_string(d[j] * a[j][i]));
    }
  }
  std::set<std::pair<int, int>> seen;
  for (auto [i, j] : orientation) {
    if (i < 0 || j < 0 || i >= n || j >= n || i == j) {
      out.push_back("orientation entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not an edge");
      continue;
    }
    if (a[i][j] == 0)
      out.push_back("orientation entry " + nm(i) + "->" + nm(j) + " is not an edge (a_ij = 0)");
    if (seen.count({i, j}) || seen.count({j, i}))
      out.push_back("edge " + nm(i) + "-" + nm(j) + " oriented twice");
    seen.insert({i, j});
  }
  if (!orientation.empty())
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (a[i][j] != 0 && !seen.count({i, j}) && !seen.count({j, i}))
          out.push_back("edge " + nm(i) + "-" + nm(j) + " has no orientation");
  return out;
}

CartanDatum::CartanDatum(std::vector<std::string> names, std::vector<std::vector<int>> a,
                         std::vector<int> d, std::vector<std::pair<int, int>> orientation)
    : names_(std::move(names)), a_(std::move(a)), d_(std::move(d)) {
  auto errs = violations(names_, a_, d_, orientation);
  if (!errs.empty()) {
    std::string msg = "invalid Borcherds-Cartan datum:";
    for (const auto& e : errs) msg += "\n  " + e;
    throw Error("InvalidDatum", msg);
  }
  if (orientation.empty()) {
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j)
        if (a_[i][j] != 0) arrows_.insert({i, j});
  } else {
    arrows_.insert(orientation.begin(), orientation.end());
  }
}

int CartanDatum::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw Error("UnknownIndex", "unknown index '" + name + "'");
  return static_cast<int>(it - names_.begin());
}

IndexType CartanDatum::type(int i) const {
  int aii = a_[i][i];
  if (aii == 2) return IndexType::Real;
  if (aii == 0) return IndexType::Isotropic;
  return IndexType::Imaginary;
}

std::vector<std::pair<int, int>> CartanDatum::orientation() const {
  return {arrows_.begin(), arrows_.end()};
}

std::vector<int> CartanDatum::indices_of(IndexType t) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (type(i) == t) out.push_back(i);
  return out;
}

bool CartanDatum::arrow(const Label& a, const Label& b) const {
  if (a.index == b.index) return a.mult < b.mult;
  return arrows_.count({a.index, b.index}) > 0;
}

bool CartanDatum::valid_label(const Label& l, AlphabetMode mode) const {
  if (l.index < 0 || l.index >= size() || l.mult < 1) return false;
  if (mode == AlphabetMode::Appendix) return l.mult == 1;
  return type(l.index) == IndexType::Imaginary || l.mult == 1;
}

void CartanDatum::check_label(const Label& l, AlphabetMode mode) const {
  if (!valid_label(l, mode))
    throw Error("InvalidLabel", "label (" + std::to_string(l.index) + "," + std::to_string(l.mult) +
                                    ") is not in the " +
                                    (mode == AlphabetMode::Full ? "full" : "appendix") + " alphabet");
}

std::vector<int> CartanDatum::weight(const Sequence& seq) const {
  std::vector<int> w(size(), 0);
  for (const auto& l : seq) w.at(l.index) += l.mult;
  return w;
}

std::string CartanDatum::label_name(const Label& l) const {
  if (l.mult == 1) return names_[l.index];
  return "(" + names_[l.index] + "," + std::to_string(l.mult) + ")";
}

}  // namespace bozec
