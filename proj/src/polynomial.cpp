#include "bozec/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace bozec {

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  p.add(Exponents(nvars, 0), c);
  return p;
}

Poly Poly::monomial(const Exponents& e, const Rational& c) {
  Poly p(static_cast<int>(e.size()));
  p.add(e, c);
  return p;
}

Poly Poly::var(int nvars, int k, int pw) {
  Exponents e(nvars, 0);
  e.at(k) = pw;
  return monomial(e);
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : t_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

void Poly::add(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = t_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [e, c] : o.t_) add(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [e, c] : o.t_) add(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(std::max(a.n_, b.n_));
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) {
      Exponents e = ea;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      r.add(e, ca * cb);
    }
  return r;
}

Poly Poly::operator*(const Rational& c) const {
  Poly r(n_);
  if (c == 0) return r;
  r.t_ = t_;
  for (auto& [e, v] : r.t_) v *= c;
  return r;
}

Poly Poly::swap(int k) const {
  Poly r(n_);
  for (const auto& [e, c] : t_) {
    Exponents f = e;
    std::swap(f[k], f[k + 1]);
    r.t_.emplace(std::move(f), c);
  }
  return r;
}

Poly Poly::divided_difference(int k) const {
  // x_k^a x_{k+1}^b with a > b goes to x_k^b x_{k+1}^b * h_{a-b-1}(x_k, x_{k+1}).
  Poly r(n_);
  for (const auto& [e, c] : t_) {
    const int a = e[k], b = e[k + 1];
    if (a == b) continue;
    const int lo = std::min(a, b), span = std::abs(a - b) - 1;
    const Rational sign = a > b ? c : Rational(-c);
    for (int j = 0; j <= span; ++j) {
      Exponents f = e;
      f[k] = lo + j;
      f[k + 1] = lo + span - j;
      r.add(f, sign);
    }
  }
  return r;
}

std::string Poly::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : t_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Rational a = abs(c);
    bool constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    if (a != 1 || constant) os << a.get_str();
    bool need_space = a != 1 || constant;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (!e[k]) continue;
      if (need_space) os << " ";
      need_space = true;
      os << "x" << k + 1;
      if (e[k] != 1) os << "^" << e[k];
    }
  }
  return os.str();
}

std::vector<Exponents> monomials_of_degree(int n, int d) {
  std::vector<Exponents> out;
  Exponents cur(n, 0);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == n - 1) {
      cur[k] = left;
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[k] = v;
      rec(k + 1, left - v);
    }
  };
  if (n == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(0, d);
  return out;
}

}  // namespace bozec
