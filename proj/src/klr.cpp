#include "bozec/klr.hpp"

#include <algorithm>
#include <numeric>

#include "bozec/linalg.hpp"

namespace bozec {

// ---- permutations ---------------------------------------------------------

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm apply_s(int k, const Perm& w) {
  Perm r = w;
  for (int& x : r) {
    if (x == k) x = k + 1;
    else if (x == k + 1) x = k;
  }
  return r;
}

Perm inverse(const Perm& w) {
  Perm r(w.size());
  for (std::size_t a = 0; a < w.size(); ++a) r[w[a]] = static_cast<int>(a);
  return r;
}

namespace {

bool left_descent(const Perm& w, int k) {
  Perm inv = inverse(w);
  return inv[k] > inv[k + 1];
}

int min_left_descent(const Perm& w) {
  Perm inv = inverse(w);
  for (std::size_t k = 0; k + 1 < w.size(); ++k)
    if (inv[k] > inv[k + 1]) return static_cast<int>(k);
  return -1;
}

Exponents swapped(Exponents e, int k) {
  std::swap(e[k], e[k + 1]);
  return e;
}

}  // namespace

std::vector<int> KLR::reduced_word(const Perm& w) {
  std::vector<int> word;
  Perm cur = w;
  for (int c = min_left_descent(cur); c >= 0; c = min_left_descent(cur)) {
    word.push_back(c);
    cur = apply_s(c, cur);
  }
  return word;
}

// ---- KLRElement -----------------------------------------------------------

Rational KLRElement::coeff(const BasisKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

void KLRElement::add(const BasisKey& k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

KLRElement& KLRElement::operator+=(const KLRElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

KLRElement& KLRElement::operator-=(const KLRElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

KLRElement KLRElement::operator*(const Rational& c) const {
  KLRElement r;
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& [k, v] : r.terms_) v *= c;
  return r;
}

KLRElement KLRElement::times_dots(const Exponents& e) const {
  KLRElement r;
  for (const auto& [k, c] : terms_) {
    BasisKey key = k;
    for (std::size_t p = 0; p < e.size(); ++p) key.dots[p] += e[p];
    r.add(key, c);
  }
  return r;
}

std::string GradedSeries::to_string() const {
  LaurentPoly p;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    p += LaurentPoly::monomial(low + static_cast<int>(k), coeffs[k]);
  return p.to_string() + " + O(q^" + std::to_string(low + static_cast<int>(coeffs.size())) + ")";
}

void GradedSeries::normalize() {
  std::size_t k = 0;
  while (k < coeffs.size() && coeffs[k] == 0) ++k;
  low += static_cast<int>(k);
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(k));
}

GradedSeries to_series(const RatFunc& f, int low, int high) {
  GradedSeries s;
  s.low = low;
  if (high < low) return s;
  TruncSeries t = series_expand(f * RatFunc(LaurentPoly::monomial(-low)), high - low);
  s.coeffs = t.coeffs();
  s.coeffs.resize(high - low + 1);
  s.normalize();
  return s;
}

// ---- KLR ------------------------------------------------------------------

KLR::KLR(CartanDatum datum, AlphabetMode mode) : datum_(std::move(datum)), mode_(mode) {}

void KLR::check_sequence(const Sequence& s) const {
  for (const auto& l : s) datum_.check_label(l, mode_);
}

bool KLR::equal_real(const Label& a, const Label& b) const {
  return a == b && datum_.type(a.index) == IndexType::Real;
}

Sequence KLR::target(const Sequence& src, const Perm& w) const {
  Sequence t(src.size());
  for (std::size_t a = 0; a < src.size(); ++a) t[w[a]] = src[a];
  return t;
}

int KLR::crossing_degree(const Sequence& src, const Perm& w) const {
  int d = 0;
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (w[a] > w[b]) d += datum_.crossing_degree(src[a], src[b]);
  return d;
}

int KLR::degree(const BasisKey& key) const {
  Sequence t = target(key.src, key.w);
  int d = crossing_degree(key.src, key.w);
  for (std::size_t p = 0; p < t.size(); ++p) d += datum_.dot_degree(t[p]) * key.dots[p];
  return d;
}

std::optional<int> KLR::degree(const KLRElement& x) const {
  std::optional<int> d;
  for (const auto& [k, c] : x.terms()) {
    int e = degree(k);
    if (d && *d != e) return std::nullopt;
    d = e;
  }
  return d;
}

KLRElement KLR::basis(const Sequence& src, const Perm& w, const Exponents& dots) const {
  KLRElement r;
  r.add(BasisKey{src, w, dots}, 1);
  return r;
}

KLRElement KLR::basis(const BasisKey& key) const {
  KLRElement r;
  r.add(key, 1);
  return r;
}

KLRElement KLR::idempotent(const Sequence& seq) const {
  check_sequence(seq);
  const int n = static_cast<int>(seq.size());
  return basis(seq, identity_perm(n), Exponents(n, 0));
}

KLRElement KLR::dot(const Sequence& seq, int k) const {
  check_sequence(seq);
  const int n = static_cast<int>(seq.size());
  if (k < 1 || k > n) throw Error("IndexOutOfRange", "dot position " + std::to_string(k) + " out of range");
  Exponents e(n, 0);
  e[k - 1] = 1;
  return basis(seq, identity_perm(n), e);
}

KLRElement KLR::crossing(const Sequence& seq, int k) const {
  check_sequence(seq);
  const int n = static_cast<int>(seq.size());
  if (k < 1 || k >= n)
    throw Error("IndexOutOfRange", "crossing position " + std::to_string(k) + " out of range");
  return basis(seq, apply_s(k - 1, identity_perm(n)), Exponents(n, 0));
}

Poly KLR::tau_squared(const Sequence& seq, int k) const {
  const int n = static_cast<int>(seq.size());
  const Label& a = seq[k];
  const Label& b = seq[k + 1];
  if (equal_real(a, b)) return Poly(n);
  const int aij = datum_.a(a.index, b.index), aji = datum_.a(b.index, a.index);
  if (aij == 0) return Poly::constant(n, 1);
  if (a == b) {
    const int m = -a.mult * a.mult * aij / 2;
    Poly s = Poly::var(n, k, m) + Poly::var(n, k + 1, m);
    return s * s;
  }
  return Poly::var(n, k, -a.mult * b.mult * aij) + Poly::var(n, k + 1, -a.mult * b.mult * aji);
}

Poly KLR::braid_correction(const Sequence& seq, int p) const {
  const int n = static_cast<int>(seq.size());
  const Label& a = seq[p];
  const Label& b = seq[p + 1];
  Poly out(n);
  if (!(a == seq[p + 2]) || datum_.type(a.index) != IndexType::Real || b.index == a.index) return out;
  const int aij = datum_.a(a.index, b.index);
  if (aij == 0) return out;
  const int d = -b.mult * aij;
  for (int c = 0; c < d; ++c) {
    Exponents e(n, 0);
    e[p] = c;
    e[p + 2] = d - 1 - c;
    out.add(e, 1);
  }
  return out;
}

Poly KLR::act_tau(const Sequence& seq, int k, const Poly& f) const {
  const int n = static_cast<int>(seq.size());
  const Label& a = seq[k];
  const Label& b = seq[k + 1];
  if (equal_real(a, b)) return f.divided_difference(k);
  const int aij = datum_.a(a.index, b.index), aji = datum_.a(b.index, a.index);
  if (aij == 0) return f.swap(k);
  if (a == b) {
    const int m = -a.mult * a.mult * aij / 2;
    return (Poly::var(n, k, m) + Poly::var(n, k + 1, m)) * f.swap(k);
  }
  if (datum_.arrow(b, a)) return f.swap(k);
  // along the orientation; position k now carries b
  return (Poly::var(n, k, -a.mult * b.mult * aji) + Poly::var(n, k + 1, -a.mult * b.mult * aij)) *
         f.swap(k);
}

RelationReport KLR::verify_relations(const Sequence& nu, int max_degree) const {
  check_sequence(nu);
  RelationReport rep;
  const int n = static_cast<int>(nu.size());
  auto fail = [&](const std::string& rel, const Sequence& s, int k, const Poly& f) {
    std::string w;
    for (const auto& l : s) w += (w.empty() ? "" : " ") + datum_.label_name(l);
    rep.failures.push_back(rel + " at k=" + std::to_string(k + 1) + " on (" + w + ") applied to " +
                           f.to_string());
  };
  auto sk = [](Sequence s, int k) {
    std::swap(s[k], s[k + 1]);
    return s;
  };
  for (const Sequence& s : orderings(nu)) {
    for (int d = 0; d <= max_degree; ++d) {
      for (const Exponents& e : monomials_of_degree(n, d)) {
        const Poly f = Poly::monomial(e);
        for (int k = 0; k + 1 < n; ++k) {
          const Sequence s1 = sk(s, k);
          const Poly tf = act_tau(s, k, f);
          ++rep.checked["quadratic"];
          if (!(act_tau(s1, k, tf) == tau_squared(s, k) * f)) fail("quadratic", s, k, f);
          for (int p = 0; p < n; ++p) {
            const int sp = p == k ? k + 1 : p == k + 1 ? k : p;
            Poly lhs = act_tau(s, k, Poly::var(n, p) * f) - Poly::var(n, sp) * tf;
            Rational c = 0;
            if (equal_real(s[k], s[k + 1])) c = p == k ? 1 : p == k + 1 ? -1 : 0;
            ++rep.checked["dot-slide"];
            if (!(lhs == f * c)) fail("dot-slide x" + std::to_string(p + 1), s, k, f);
          }
          for (int l = k + 2; l + 1 < n; ++l) {
            ++rep.checked["far-commute"];
            Poly a = act_tau(sk(s, l), k, act_tau(s, l, f));
            Poly b = act_tau(s1, l, tf);
            if (!(a == b)) fail("far-commute", s, k, f);
          }
          if (k + 2 < n) {
            const Sequence s2 = sk(s, k + 1);
            Poly a = act_tau(sk(s1, k + 1), k, act_tau(s1, k + 1, tf));
            Poly b = act_tau(sk(s2, k), k + 1, act_tau(s2, k, act_tau(s, k + 1, f)));
            ++rep.checked["braid"];
            if (!(a - b == braid_correction(s, k) * f)) fail("braid", s, k, f);
          }
        }
      }
    }
  }
  return rep;
}

std::map<Sequence, Poly> KLR::act(const KLRElement& x, const Sequence& seq, const Poly& f) const {
  std::map<Sequence, Poly> out;
  for (const auto& [key, c] : x.terms()) {
    if (key.src != seq) continue;
    Poly g = f;
    Sequence cur = seq;
    auto word = reduced_word(key.w);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      g = act_tau(cur, *it, g);
      std::swap(cur[*it], cur[*it + 1]);
    }
    g = Poly::monomial(key.dots, c) * g;
    auto [pos, inserted] = out.try_emplace(cur, g);
    if (!inserted) pos->second += g;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero()) it = out.erase(it);
    else ++it;
  }
  return out;
}

KLRElement KLR::lmul_tau(int k, const KLRElement& x) const {
  KLRElement out;
  for (const auto& [key, c] : x.terms()) {
    Sequence tgt = target(key.src, key.w);
    KLRElement t = tau_canonical(k, key.src, key.w);
    out += t.times_dots(swapped(key.dots, k)) * c;
    if (equal_real(tgt[k], tgt[k + 1])) {
      Poly dd = Poly::monomial(key.dots).divided_difference(k);
      for (const auto& [e, v] : dd.terms()) out.add(BasisKey{key.src, key.w, e}, c * v);
    }
  }
  return out;
}

KLRElement KLR::tau_canonical(int k, const Sequence& src, const Perm& w) const {
  auto cache_key = std::make_pair(k, std::make_pair(src, w));
  if (auto it = tau_cache_.find(cache_key); it != tau_cache_.end()) return it->second;
  const int n = static_cast<int>(src.size());
  const Exponents zero(n, 0);
  auto B = [&](const Perm& p) { return basis(src, p, zero); };
  KLRElement res;
  if (left_descent(w, k)) {
    Perm w1 = apply_s(k, w);
    KLRElement r = tau_canonical(k, src, w1) - B(w);
    Poly q = tau_squared(target(src, w1), k);
    for (const auto& [e, v] : q.terms()) res.add(BasisKey{src, w1, e}, v);
    res -= lmul_tau(k, r);
  } else {
    Perm w2 = apply_s(k, w);
    const int c = min_left_descent(w2);
    if (c == k) {
      res = B(w2);
    } else if (std::abs(c - k) > 1) {
      Perm scw = apply_s(c, w);
      KLRElement r1 = tau_canonical(c, src, scw) - B(w);
      KLRElement r2 = tau_canonical(k, src, scw) - B(apply_s(k, scw));
      res = B(w2) + lmul_tau(c, r2) - lmul_tau(k, r1);
    } else {
      Perm u = apply_s(k, apply_s(c, w));
      Perm sku = apply_s(k, u), scu = apply_s(c, u);
      KLRElement ra = tau_canonical(k, src, u) - B(sku);
      KLRElement rb = tau_canonical(c, src, sku) - B(w);
      KLRElement rc = tau_canonical(c, src, u) - B(scu);
      KLRElement rd = tau_canonical(k, src, scu) - B(apply_s(k, scu));
      res = B(w2) + lmul_tau(c, rd) + lmul_tau(c, lmul_tau(k, rc)) - lmul_tau(k, rb) -
            lmul_tau(k, lmul_tau(c, ra));
      const int p = std::min(k, c);
      Poly corr = braid_correction(target(src, u), p);
      const Rational sign = k == p ? 1 : -1;
      for (const auto& [e, v] : corr.terms()) res.add(BasisKey{src, u, e}, sign * v);
    }
  }
  tau_cache_.emplace(std::move(cache_key), res);
  return res;
}

namespace {
Sequence sorted(Sequence s) {
  std::sort(s.begin(), s.end());
  return s;
}
}  // namespace

KLRElement KLR::multiply(const KLRElement& a, const KLRElement& b) const {
  KLRElement out;
  if (a.is_zero() || b.is_zero()) return out;
  if (sorted(a.terms().begin()->first.src) != sorted(b.terms().begin()->first.src))
    throw Error("NonComposable", "factors live in different algebras R(nu)");
  for (const auto& [kb, cb] : b.terms()) {
    const Sequence tb = target(kb.src, kb.w);
    for (const auto& [ka, ca] : a.terms()) {
      if (ka.src != tb) continue;
      KLRElement e = basis(kb);
      auto word = reduced_word(ka.w);
      for (auto it = word.rbegin(); it != word.rend(); ++it) e = lmul_tau(*it, e);
      out += e.times_dots(ka.dots) * (ca * cb);
    }
  }
  return out;
}

KLRElement KLR::psi(const KLRElement& x) const {
  KLRElement out;
  for (const auto& [key, c] : x.terms()) {
    const Sequence tgt = target(key.src, key.w);
    KLRElement e = basis(tgt, identity_perm(static_cast<int>(tgt.size())), key.dots);
    for (int k : reduced_word(key.w)) e = lmul_tau(k, e);
    out += e * c;
  }
  return out;
}

// ---- dimensions -----------------------------------------------------------

std::vector<Sequence> KLR::orderings(Sequence nu) {
  std::vector<Sequence> out;
  std::sort(nu.begin(), nu.end());
  do {
    out.push_back(nu);
  } while (std::next_permutation(nu.begin(), nu.end()));
  return out;
}

RatFunc KLR::graded_dim(const Sequence& src, const Sequence& tgt) const {
  check_sequence(src);
  check_sequence(tgt);
  if (src.size() != tgt.size()) return RatFunc(0);
  const int n = static_cast<int>(src.size());
  LaurentPoly num;
  Perm w = identity_perm(n);
  do {
    if (target(src, w) == tgt) num += LaurentPoly::monomial(crossing_degree(src, w));
  } while (std::next_permutation(w.begin(), w.end()));
  LaurentPoly den(1);
  for (const auto& l : src) den *= LaurentPoly(1) - LaurentPoly::monomial(2 * datum_.r(l.index));
  return RatFunc(num, den);
}

RatFunc KLR::center_graded_dim(const CartanDatum& d, const Sequence& nu) {
  std::map<Label, int> mult;
  for (const auto& l : nu) ++mult[l];
  LaurentPoly den(1);
  for (const auto& [l, m] : mult)
    for (int c = 1; c <= m; ++c) den *= LaurentPoly(1) - LaurentPoly::monomial(2 * c * d.r(l.index));
  return RatFunc(LaurentPoly(1), den);
}

int KLR::min_degree(const Sequence& src, const Sequence& tgt) const {
  const int n = static_cast<int>(src.size());
  std::optional<int> best;
  Perm w = identity_perm(n);
  do {
    if (target(src, w) != tgt) continue;
    int d = crossing_degree(src, w);
    if (!best || d < *best) best = d;
  } while (std::next_permutation(w.begin(), w.end()));
  if (!best) throw Error("DomainError", "sequences are not in the same class");
  return *best;
}

std::vector<BasisKey> KLR::basis_of_degree(const Sequence& src, const Sequence& tgt, int d) const {
  std::vector<BasisKey> out;
  const int n = static_cast<int>(src.size());
  Perm w = identity_perm(n);
  do {
    if (target(src, w) != tgt) continue;
    int rest = d - crossing_degree(src, w);
    if (rest < 0) continue;
    Exponents dots(n, 0);
    auto rec = [&](auto&& self, int p, int left) -> void {
      if (p == n) {
        if (left == 0) out.push_back(BasisKey{src, w, dots});
        return;
      }
      const int step = datum_.dot_degree(tgt[p]);
      for (int u = 0; u * step <= left; ++u) {
        dots[p] = u;
        self(self, p + 1, left - u * step);
      }
      dots[p] = 0;
    };
    rec(rec, 0, rest);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

GradedSeries KLR::sandwich_dims(const KLRElement& left, const KLRElement& right, const Sequence& src,
                                const Sequence& tgt, int high) const {
  auto dl = degree(left), dr = degree(right);
  if (!dl || !dr) throw Error("DomainError", "sandwich_dims needs homogeneous nonzero factors");
  GradedSeries s;
  s.low = min_degree(src, tgt) + *dl + *dr;
  for (int d = s.low; d <= high; ++d) {
    std::vector<KLRElement> vecs;
    std::map<BasisKey, std::size_t> cols;
    for (const auto& b : basis_of_degree(src, tgt, d - *dl - *dr)) {
      KLRElement v = multiply(left, multiply(basis(b), right));
      for (const auto& [k, c] : v.terms()) cols.emplace(k, cols.size());
      if (!v.is_zero()) vecs.push_back(std::move(v));
    }
    Matrix<Rational> m(vecs.size(), std::vector<Rational>(cols.size()));
    for (std::size_t r = 0; r < vecs.size(); ++r)
      for (const auto& [k, c] : vecs[r].terms()) m[r][cols[k]] = c;
    s.coeffs.push_back(static_cast<long>(rank(m)));
  }
  s.normalize();
  return s;
}

// ---- symmetrizers and projectives -------------------------------------------

namespace {
long factorial(int n) {
  long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}
}  // namespace

KLRElement KLR::symmetrizer(const Label& l, int n, BlockKind kind) const {
  return idempotent(Decorated{Block{l, n, kind}});
}

Sequence KLR::expand(const Decorated& d) const {
  Sequence s;
  for (const auto& b : d) {
    if (b.n < 0) throw Error("DomainError", "negative block size");
    if (b.kind == BlockKind::Divided && datum_.type(b.label.index) != IndexType::Real)
      throw Error("UnsupportedShape", "divided powers need a real label");
    if (b.kind == BlockKind::Symmetric && datum_.type(b.label.index) != IndexType::Isotropic)
      throw Error("UnsupportedShape", "symmetrizers e_{i,n} need an isotropic label");
    for (int k = 0; k < b.n; ++k) s.push_back(b.label);
  }
  return s;
}

KLRElement KLR::idempotent(const Decorated& d) const {
  const Sequence seq = expand(d);
  const int n = static_cast<int>(seq.size());
  KLRElement e = idempotent(seq);
  int offset = 0;
  for (const auto& b : d) {
    if (b.kind != BlockKind::Plain && b.n > 1) {
      KLRElement block;
      if (b.kind == BlockKind::Divided) {
        Perm w = identity_perm(n);
        Exponents dots(n, 0);
        for (int a = 0; a < b.n; ++a) {
          w[offset + a] = offset + b.n - 1 - a;
          dots[offset + a] = b.n - 1 - a;
        }
        block = basis(seq, w, dots);
      } else {
        Perm sigma = identity_perm(b.n);
        const Rational inv(1, factorial(b.n));
        do {
          Perm w = identity_perm(n);
          for (int a = 0; a < b.n; ++a) w[offset + a] = offset + sigma[a];
          block.add(BasisKey{seq, w, Exponents(n, 0)}, inv);
        } while (std::next_permutation(sigma.begin(), sigma.end()));
      }
      e = multiply(block, e);
    }
    offset += b.n;
  }
  return e;
}

int KLR::shift(const Decorated& d) const {
  int s = 0;
  for (const auto& b : d)
    if (b.kind == BlockKind::Divided) s += b.n * (b.n - 1) / 2 * datum_.r(b.label.index);
  return s;
}

RatFunc KLR::projective_dim(const Sequence& k, const Decorated& i) const {
  RatFunc dim = graded_dim(expand(i), k);
  for (const auto& b : i) {
    if (b.kind == BlockKind::Divided) dim /= RatFunc(qfact(b.n, datum_.r(b.label.index)));
    if (b.kind == BlockKind::Symmetric) dim /= RatFunc(Rational(factorial(b.n)));
  }
  return dim;
}

GradedSeries KLR::projective_dim_series(const Sequence& k, const Decorated& i, int high) const {
  const int sh = shift(i);
  GradedSeries s = sandwich_dims(idempotent(k), psi(idempotent(i)), expand(i), k, high + sh);
  s.low -= sh;
  return s;
}

std::vector<KLR::DimComparison> KLR::compare_projectives(const std::vector<Decorated>& lhs,
                                                         const std::vector<Decorated>& rhs) const {
  if (lhs.empty() && rhs.empty()) return {};
  const Sequence nu = expand(lhs.empty() ? rhs.front() : lhs.front());
  for (const auto* side : {&lhs, &rhs})
    for (const auto& d : *side)
      if (sorted(expand(d)) != sorted(nu)) throw Error("NonComposable", "projectives of different weights");
  std::vector<DimComparison> out;
  for (const Sequence& k : orderings(nu)) {
    DimComparison c{k, RatFunc(0), RatFunc(0)};
    for (const auto& d : lhs) c.lhs = c.lhs + projective_dim(k, d);
    for (const auto& d : rhs) c.rhs = c.rhs + projective_dim(k, d);
    out.push_back(std::move(c));
  }
  return out;
}

std::pair<std::vector<Decorated>, std::vector<Decorated>> KLR::serre_projectives(int i, int j, int n) const {
  if (datum_.type(i) != IndexType::Real) throw Error("DomainError", "i must be a real index");
  if (i == j) throw Error("DomainError", "i and j must differ");
  if (n < 1) throw Error("DomainError", "n must be positive");
  Block mid;
  switch (datum_.type(j)) {
    case IndexType::Real: mid = Block{Label{j, 1}, n, BlockKind::Plain}; break;
    case IndexType::Imaginary: mid = Block{Label{j, n}, 1, BlockKind::Plain}; break;
    case IndexType::Isotropic: mid = Block{Label{j, 1}, n, BlockKind::Symmetric}; break;
  }
  const int m = 1 - n * datum_.a(i, j);
  std::pair<std::vector<Decorated>, std::vector<Decorated>> sides;
  for (int c = 0; c <= m; ++c) {
    Decorated d{Block{Label{i, 1}, c, BlockKind::Divided}, mid, Block{Label{i, 1}, m - c, BlockKind::Divided}};
    (c % 2 == 0 ? sides.first : sides.second).push_back(std::move(d));
  }
  return sides;
}

std::optional<RatFunc> KLR::kl_pairing_exact(const Decorated& a, const Decorated& b) const {
  for (const auto* d : {&a, &b})
    for (const auto& blk : *d)
      if (blk.kind != BlockKind::Plain && blk.n > 1) return std::nullopt;
  const Sequence sa = expand(a), sb = expand(b);
  if (sorted(sa) != sorted(sb)) return RatFunc(0);
  return graded_dim(sb, sa);
}

GradedSeries KLR::kl_pairing(const Decorated& a, const Decorated& b, int high) const {
  const Sequence sa = expand(a), sb = expand(b);
  if (auto exact = kl_pairing_exact(a, b)) {
    if (exact->is_zero()) return GradedSeries{high + 1, {}};
    return to_series(*exact, min_degree(sb, sa), high);
  }
  std::set<Label> labels(sa.begin(), sa.end());
  labels.insert(sb.begin(), sb.end());
  if (labels.size() != 1)
    throw Error("UnsupportedShape", "decorated pairings are supported for one-label shapes only");
  if (sa.size() != sb.size()) return GradedSeries{high + 1, {}};
  const int sh = shift(a) + shift(b);
  GradedSeries s = sandwich_dims(idempotent(a), psi(idempotent(b)), sb, sa, high + sh);
  s.low -= sh;
  return s;
}

}  // namespace bozec
