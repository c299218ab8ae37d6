#include "bozec/scalar.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace bozec {

// ---- LaurentPoly ---------------------------------------------------------

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) c_[0] = c;
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) c_[0] = c;
}

LaurentPoly LaurentPoly::monomial(int e, const Rational& c) {
  LaurentPoly p;
  p.add_term(e, c);
  return p;
}

Rational LaurentPoly::coeff(int e) const {
  auto it = c_.find(e);
  return it == c_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_exp() const {
  if (c_.empty()) throw Error("DomainError", "min_exp of zero polynomial");
  return c_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (c_.empty()) throw Error("DomainError", "max_exp of zero polynomial");
  return c_.rbegin()->first;
}

void LaurentPoly::add_term(int e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = c_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (const auto& [e, c] : c_) r.c_.emplace(-e, c);
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : c_) r.c_.emplace_hint(r.c_.end(), e + k, c);
  return r;
}

LaurentPoly LaurentPoly::substitute_power(int r) const {
  if (r == 0) {
    Rational s = 0;
    for (const auto& [e, c] : c_) s += c;
    return LaurentPoly(s);
  }
  LaurentPoly p;
  for (const auto& [e, c] : c_) p.c_.emplace(e * r, c);
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.c_)
    for (const auto& [eb, cb] : b.c_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.c_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly r(1), b = *this;
  while (n) {
    if (n & 1u) r *= b;
    n >>= 1;
    if (n) b *= b;
  }
  return r;
}

std::string LaurentPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : c_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << " ";
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

// ---- polynomial helpers over Q[q] -----------------------------------------

namespace {

// Ordinary polynomial division; a and b have nonnegative exponents.
std::pair<LaurentPoly, LaurentPoly> poly_divmod(LaurentPoly a, const LaurentPoly& b) {
  LaurentPoly quo;
  const int db = b.max_exp();
  const Rational lb = b.coeff(db);
  while (!a.is_zero() && a.max_exp() >= db) {
    const int da = a.max_exp();
    LaurentPoly t = LaurentPoly::monomial(da - db, a.coeff(da) / lb);
    quo += t;
    a -= t * b;
  }
  return {quo, a};
}

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
  while (!b.is_zero()) {
    LaurentPoly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  auto [quo, rem] = poly_divmod(a, b);
  if (!rem.is_zero()) throw Error("InternalError", "inexact polynomial division");
  return quo;
}

}  // namespace

// ---- RatFunc --------------------------------------------------------------

RatFunc::RatFunc(long c) : num_(c) {}
RatFunc::RatFunc(const Rational& c) : num_(c) {}
RatFunc::RatFunc(const LaurentPoly& num) : num_(num) {}

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw Error("DivisionByZero", "rational function with zero denominator");
  canonicalize();
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  int s = -den_.min_exp();
  den_ = den_.shifted(s);
  num_ = num_.shifted(s);
  if (den_.max_exp() == 0) {
    Rational c = den_.coeff(0);
    if (c != 1) num_ *= LaurentPoly(Rational(1 / c));
    den_ = LaurentPoly(1);
    return;
  }
  const int t = num_.min_exp();
  LaurentPoly n = num_.shifted(-t);
  LaurentPoly g = poly_gcd(n, den_);
  if (g.max_exp() > 0) {
    n = exact_div(n, g);
    den_ = exact_div(den_, g);
  }
  Rational c0 = den_.coeff(0);
  if (c0 != 1) {
    LaurentPoly inv(Rational(1 / c0));
    n *= inv;
    den_ *= inv;
  }
  num_ = n.shifted(t);
}

bool RatFunc::is_laurent() const { return den_.max_exp() == 0; }

RatFunc RatFunc::bar() const { return RatFunc(num_.bar(), den_.bar()); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error("DivisionByZero", "inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_laurent() && o.is_laurent()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_laurent() && o.is_laurent()) {
    num_ *= o.num_;
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  return RatFunc(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)));
}

std::string RatFunc::to_string() const {
  if (is_laurent()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

// ---- TruncSeries ----------------------------------------------------------

TruncSeries::TruncSeries(int bound) : c_(static_cast<std::size_t>(std::max(bound, 0) + 1)) {}

TruncSeries::TruncSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.resize(1);
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries r(std::min(a.bound(), b.bound()));
  for (int k = 0; k <= r.bound(); ++k) r[k] = a[k] + b[k];
  return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries r(std::min(a.bound(), b.bound()));
  for (int k = 0; k <= r.bound(); ++k) r[k] = a[k] - b[k];
  return r;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries r(std::min(a.bound(), b.bound()));
  for (int i = 0; i <= r.bound(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= r.bound(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

std::string TruncSeries::to_string() const {
  LaurentPoly p;
  for (int k = 0; k <= bound(); ++k) p += LaurentPoly::monomial(k, c_[k]);
  return p.to_string() + " + O(q^" + std::to_string(bound() + 1) + ")";
}

TruncSeries series_expand(const RatFunc& f, int bound) {
  if (bound < 0) throw Error("DomainError", "negative truncation bound");
  TruncSeries out(bound);
  if (f.is_zero()) return out;
  if (f.num().min_exp() < 0)
    throw Error("NotExpandable", "series has a pole at q = 0: " + f.to_string());
  // den(0) = 1 in canonical form, so the recurrence needs no division.
  const LaurentPoly& den = f.den();
  for (int k = 0; k <= bound; ++k) {
    Rational s = f.num().coeff(k);
    for (const auto& [e, c] : den.terms()) {
      if (e == 0 || e > k) continue;
      s -= c * out[k - e];
    }
    out[k] = s;
  }
  return out;
}

// ---- q-combinatorics ------------------------------------------------------

namespace {
void require_nonneg(int n, const char* what) {
  if (n < 0) throw Error("DomainError", std::string(what) + ": negative argument");
}
}  // namespace

LaurentPoly qint(int n, int r) {
  require_nonneg(n, "qint");
  LaurentPoly p;
  for (int k = 0; k < n; ++k) p += LaurentPoly::monomial(r * (n - 1 - 2 * k));
  return p;
}

LaurentPoly qfact(int n, int r) {
  require_nonneg(n, "qfact");
  LaurentPoly p(1);
  for (int k = 2; k <= n; ++k) p *= qint(k, r);
  return p;
}

LaurentPoly qbinom(int n, int m) {
  require_nonneg(n, "qbinom");
  require_nonneg(m, "qbinom");
  if (m > n) throw Error("DomainError", "qbinom: m > n");
  // (1-q^n)...(1-q^{n-m+1}) / (1-q)...(1-q^m)
  LaurentPoly num(1), den(1);
  for (int k = 0; k < m; ++k) {
    num *= LaurentPoly(1) - LaurentPoly::monomial(n - k);
    den *= LaurentPoly(1) - LaurentPoly::monomial(k + 1);
  }
  return exact_div(num, den);
}

LaurentPoly pochhammer(int a, int n) {
  require_nonneg(n, "pochhammer");
  LaurentPoly p(1);
  for (int k = 0; k < n; ++k) p *= LaurentPoly(1) - LaurentPoly::monomial(a + k);
  return p;
}

RatFunc sym_poly_dim(int n, int r) {
  require_nonneg(n, "sym_poly_dim");
  LaurentPoly den(1);
  for (int k = 1; k <= n; ++k) den *= LaurentPoly(1) - LaurentPoly::monomial(2 * r * k);
  return RatFunc(LaurentPoly(1), den);
}

}  // namespace bozec
