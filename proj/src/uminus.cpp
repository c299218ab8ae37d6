#include "bozec/uminus.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace bozec {

// ---- UElement -------------------------------------------------------------

UElement::UElement(const Word& w, const RatFunc& c) { add(w, c); }

RatFunc UElement::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RatFunc(0) : it->second;
}

void UElement::add(const Word& w, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UElement& UElement::operator+=(const UElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

UElement& UElement::operator-=(const UElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

UElement& UElement::operator*=(const RatFunc& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

UElement operator*(const UElement& a, const UElement& b) {
  UElement r;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add(w, ca * cb);
    }
  return r;
}

UElement UElement::bar() const {
  UElement r;
  for (const auto& [w, c] : terms_) r.add(w, c.bar());
  return r;
}

UElement UElement::star() const {
  UElement r;
  for (const auto& [w, c] : terms_) r.add(Word(w.rbegin(), w.rend()), c);
  return r;
}

// ---- TensorElement --------------------------------------------------------

RatFunc TensorElement::coeff(const Word& a, const Word& b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? RatFunc(0) : it->second;
}

void TensorElement::add(const Word& a, const Word& b, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
  return *this;
}

TensorElement TensorElement::primitive(const UElement& x) {
  TensorElement t;
  for (const auto& [w, c] : x.terms()) {
    t.add(w, Word{}, c);
    t.add(Word{}, w, c);
  }
  return t;
}

// ---- UMinus ---------------------------------------------------------------

namespace {
LaurentPoly qpow(int e) { return LaurentPoly::monomial(e); }

RatFunc inv_prod(int r, int l) {
  LaurentPoly den(1);
  for (int k = 1; k <= l; ++k) den *= LaurentPoly(1) - qpow(2 * r * k);
  return RatFunc(LaurentPoly(1), den);
}
}  // namespace

UMinus::UMinus(CartanDatum datum, NormMode mode, std::map<GenIndex, RatFunc> norm_overrides)
    : datum_(std::move(datum)), mode_(mode), overrides_(std::move(norm_overrides)) {
  for (const auto& [g, c] : overrides_) {
    check_letter(g);
    TruncSeries s = series_expand(c, 0);
    if (s[0] != 1 || c.num().min_exp() < 0)
      throw Error("InvalidNorm", "norm override for " + datum_.label_name(g) + " is not 1 mod q");
  }
}

bool UMinus::primitive_letter(const GenIndex& g) const {
  return mode_ == NormMode::Primitive && datum_.type(g.index) == IndexType::Imaginary;
}

void UMinus::check_letter(const GenIndex& g) const {
  if (g.index < 0 || g.index >= datum_.size() || g.mult < 1 ||
      (datum_.type(g.index) == IndexType::Real && g.mult != 1))
    throw Error("InvalidLabel", "(" + std::to_string(g.index) + "," + std::to_string(g.mult) +
                                    ") is not a generator index");
}

RatFunc UMinus::norm(const GenIndex& g) const {
  if (auto it = overrides_.find(g); it != overrides_.end()) return it->second;
  const int r = datum_.r(g.index);
  switch (datum_.type(g.index)) {
    case IndexType::Real:
      return inv_prod(r, 1);
    case IndexType::Isotropic:
      return inv_prod(r, g.mult);
    case IndexType::Imaginary:
      return mode_ == NormMode::Primitive ? inv_prod(r, 1) : inv_prod(1, g.mult);
  }
  return RatFunc(0);
}

std::vector<int> UMinus::weight(const Word& w) const { return datum_.weight(w); }

int UMinus::pairing(const std::vector<int>& u, const std::vector<int>& v) const {
  int s = 0;
  for (int i = 0; i < datum_.size(); ++i) {
    if (!u[i]) continue;
    for (int j = 0; j < datum_.size(); ++j)
      if (v[j]) s += u[i] * v[j] * datum_.dot(i, j);
  }
  return s;
}

std::vector<Word> UMinus::words_of_weight(const std::vector<int>& wt) const {
  std::vector<Word> out;
  std::vector<int> rest = wt;
  Word cur;
  std::function<void()> rec = [&]() {
    if (std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; })) {
      out.push_back(cur);
      return;
    }
    for (int i = 0; i < datum_.size(); ++i) {
      if (rest[i] == 0) continue;
      int lmax = datum_.type(i) == IndexType::Real ? 1 : rest[i];
      for (int l = 1; l <= lmax; ++l) {
        rest[i] -= l;
        cur.push_back({i, l});
        rec();
        cur.pop_back();
        rest[i] += l;
      }
    }
  };
  rec();
  std::stable_sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<std::vector<int>> UMinus::weights_up_to(int height) const {
  std::vector<std::vector<int>> out;
  const int n = datum_.size();
  for (int h = 0; h <= height; ++h) {
    std::vector<int> cur(n, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == n - 1) {
        cur[i] = left;
        out.push_back(cur);
        return;
      }
      for (int v = left; v >= 0; --v) {
        cur[i] = v;
        rec(i + 1, left - v);
      }
    };
    rec(0, h);
  }
  return out;
}

TensorElement UMinus::tensor_multiply(const TensorElement& a, const TensorElement& b) const {
  TensorElement r;
  for (const auto& [ka, ca] : a.terms()) {
    auto wa2 = weight(ka.second);
    for (const auto& [kb, cb] : b.terms()) {
      int e = -pairing(wa2, weight(kb.first));
      Word l = ka.first, rt = ka.second;
      l.insert(l.end(), kb.first.begin(), kb.first.end());
      rt.insert(rt.end(), kb.second.begin(), kb.second.end());
      r.add(l, rt, ca * cb * RatFunc(qpow(e)));
    }
  }
  return r;
}

TensorElement UMinus::coproduct(const GenIndex& g) const {
  check_letter(g);
  TensorElement t;
  if (primitive_letter(g)) {
    t.add(Word{g}, Word{}, 1);
    t.add(Word{}, Word{g}, 1);
    return t;
  }
  const int half = datum_.dot(g.index, g.index) / 2;
  for (int m = 0; m <= g.mult; ++m) {
    int n = g.mult - m;
    Word l, r;
    if (m) l.push_back({g.index, m});
    if (n) r.push_back({g.index, n});
    t.add(l, r, RatFunc(qpow(-half * m * n)));
  }
  return t;
}

TensorElement UMinus::coproduct(const UElement& x) const {
  TensorElement out;
  for (const auto& [w, c] : x.terms()) {
    TensorElement t;
    t.add(Word{}, Word{}, c);
    for (const auto& g : w) t = tensor_multiply(t, coproduct(g));
    out += t;
  }
  return out;
}

std::vector<UMinus::Split> UMinus::splits(const Word& u, const std::vector<int>& left_weight) const {
  std::vector<Split> out;
  const int n = datum_.size();
  std::vector<int> lw(n, 0), rw(n, 0);
  Word left, right;
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int expo) {
    if (k == u.size()) {
      if (lw == left_weight) out.push_back({left, right, RatFunc(qpow(expo))});
      return;
    }
    const GenIndex& g = u[k];
    const int i = g.index;
    std::vector<int> choices;
    if (primitive_letter(g)) choices = {0, g.mult};
    else
      for (int m = 0; m <= g.mult; ++m) choices.push_back(m);
    const int half = datum_.dot(i, i) / 2;
    for (int m : choices) {
      if (lw[i] + m > left_weight[i]) continue;
      const int rm = g.mult - m;
      // twist against everything already sent right
      int e = expo;
      if (m) {
        int s = 0;
        for (int j = 0; j < n; ++j) s += rw[j] * datum_.dot(j, i);
        e -= s * m;
      }
      if (!primitive_letter(g)) e -= half * m * rm;
      if (m) left.push_back({i, m});
      if (rm) right.push_back({i, rm});
      lw[i] += m;
      rw[i] += rm;
      rec(k + 1, e);
      lw[i] -= m;
      rw[i] -= rm;
      if (rm) right.pop_back();
      if (m) left.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

RatFunc UMinus::form(const Word& u, const Word& w) const {
  if (weight(u) != weight(w)) return RatFunc(0);
  if (w.empty()) return RatFunc(1);
  if (u.size() == 1 && w.size() == 1) return u == w ? norm(u[0]) : RatFunc(0);
  if (w.size() == 1) return form(w, u);
  auto key = std::make_pair(u, w);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  const Word g{w[0]};
  const Word rest(w.begin() + 1, w.end());
  RatFunc acc(0);
  for (const auto& s : splits(u, weight(g))) {
    RatFunc a = form(s.left, g);
    if (a.is_zero()) continue;
    RatFunc b = form(s.right, rest);
    if (b.is_zero()) continue;
    acc += s.coeff * a * b;
  }
  cache_.emplace(std::move(key), acc);
  return acc;
}

RatFunc UMinus::form(const UElement& x, const UElement& y) const {
  RatFunc acc(0);
  for (const auto& [u, cu] : x.terms())
    for (const auto& [w, cw] : y.terms()) {
      RatFunc f = form(u, w);
      if (!f.is_zero()) acc += cu * cw * f;
    }
  return acc;
}

RatFunc UMinus::form_left_split(const Word& u, const Word& w) const {
  if (weight(u) != weight(w)) return RatFunc(0);
  if (u.empty()) return RatFunc(1);
  if (u.size() == 1 && w.size() == 1) return u == w ? norm(u[0]) : RatFunc(0);
  if (u.size() == 1) return form_left_split(w, u);
  auto key = std::make_pair(u, w);
  if (auto it = left_cache_.find(key); it != left_cache_.end()) return it->second;
  const Word g{u[0]};
  const Word rest(u.begin() + 1, u.end());
  const auto gw = weight(g);
  RatFunc acc(0);
  const TensorElement cw = coproduct(UElement(w));
  for (const auto& [k, c] : cw.terms()) {
    if (weight(k.first) != gw) continue;
    acc += c * form_left_split(g, k.first) * form_left_split(rest, k.second);
  }
  left_cache_.emplace(std::move(key), acc);
  return acc;
}

RatFunc UMinus::tensor_form(const TensorElement& a, const TensorElement& b) const {
  RatFunc acc(0);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      RatFunc f = form(ka.first, kb.first);
      if (f.is_zero()) continue;
      acc += ca * cb * f * form(ka.second, kb.second);
    }
  return acc;
}

Matrix<RatFunc> UMinus::gram_matrix(const std::vector<Word>& words) const {
  const std::size_t n = words.size();
  Matrix<RatFunc> g(n, std::vector<RatFunc>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      g[a][b] = form(words[a], words[b]);
      if (a != b) g[b][a] = g[a][b];
    }
  return g;
}

bool UMinus::in_radical(const UElement& x) const {
  std::set<std::vector<int>> weights;
  for (const auto& [w, c] : x.terms()) weights.insert(weight(w));
  for (const auto& wt : weights) {
    UElement part;
    for (const auto& [w, c] : x.terms())
      if (weight(w) == wt) part.add(w, c);
    for (const auto& w : words_of_weight(wt))
      if (!form(part, UElement(w)).is_zero()) return false;
  }
  return true;
}

bool UMinus::equal_mod_radical(const UElement& x, const UElement& y) const {
  return in_radical(x - y);
}

bool UMinus::tensor_in_radical(const TensorElement& t) const {
  std::map<std::pair<std::vector<int>, std::vector<int>>, TensorElement> parts;
  for (const auto& [k, c] : t.terms()) parts[{weight(k.first), weight(k.second)}].add(k.first, k.second, c);
  for (const auto& [wts, part] : parts) {
    auto lw = words_of_weight(wts.first);
    auto rw = words_of_weight(wts.second);
    for (const auto& a : lw)
      for (const auto& b : rw) {
        TensorElement probe;
        probe.add(a, b, 1);
        if (!tensor_form(part, probe).is_zero()) return false;
      }
  }
  return true;
}

UElement UMinus::divided_power(int i, int n) const {
  if (datum_.type(i) != IndexType::Real)
    throw Error("DomainError", "divided powers need a real index");
  return UElement(Word(static_cast<std::size_t>(n), GenIndex{i, 1}),
                  RatFunc(LaurentPoly(1), qfact(n, datum_.r(i))));
}

UElement UMinus::serre_element(int i, const GenIndex& jl) const {
  check_letter(jl);
  if (datum_.type(i) != IndexType::Real)
    throw Error("DomainError", "serre_element needs a real index i");
  if (jl.index == i) throw Error("DomainError", "serre_element undefined for i = (j,l)");
  const int n = 1 - jl.mult * datum_.a(i, jl.index);
  UElement out;
  const UElement mid(Word{jl});
  for (int r = 0; r <= n; ++r) {
    UElement t = divided_power(i, r) * mid * divided_power(i, n - r);
    out += (r % 2 ? RatFunc(-1) : RatFunc(1)) * t;
  }
  return out;
}

std::vector<UMinus::Relation> UMinus::defining_relations(int max_exponent, int max_l) const {
  std::vector<Relation> out;
  const int n = datum_.size();
  auto letters = [&](int j) {
    std::vector<GenIndex> ls;
    const int top = datum_.type(j) == IndexType::Real ? 1 : max_l;
    for (int l = 1; l <= top; ++l) ls.push_back({j, l});
    return ls;
  };
  for (int i = 0; i < n; ++i) {
    if (datum_.type(i) != IndexType::Real) continue;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (const auto& jl : letters(j)) {
        if (-jl.mult * datum_.a(i, jl.index) > max_exponent) continue;
        out.push_back({"serre " + datum_.name(i) + " " + datum_.label_name(jl), serre_element(i, jl)});
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (datum_.type(i) == IndexType::Real) continue;
    for (int j = i; j < n; ++j) {
      if (datum_.type(j) == IndexType::Real || datum_.a(i, j) != 0) continue;
      for (const auto& a : letters(i))
        for (const auto& b : letters(j)) {
          if (!(a < b)) continue;
          out.push_back({"commute " + datum_.label_name(a) + " " + datum_.label_name(b),
                         UElement(Word{a, b}) - UElement(Word{b, a})});
        }
    }
  }
  return out;
}

UElement UMinus::primitive_generator(int i, int l) const {
  if (mode_ != NormMode::Geometric)
    throw Error("ModeError", "primitive_generator needs geometric norms");
  if (datum_.type(i) != IndexType::Imaginary || l < 1)
    throw Error("DomainError", "primitive_generator needs an imaginary index and l >= 1");
  if (auto it = primitive_cache_.find({i, l}); it != primitive_cache_.end()) return it->second;
  const Word top{GenIndex{i, l}};
  std::vector<Word> lower;
  for (const auto& c : compositions(l, 2)) {
    Word w;
    for (int p : c) w.push_back({i, p});
    lower.push_back(w);
  }
  UElement b(top);
  if (!lower.empty()) {
    Matrix<RatFunc> g = gram_matrix(lower);
    std::vector<RatFunc> rhs;
    for (const auto& w : lower) rhs.push_back(-form(w, top));
    if (determinant(g).is_zero())
      throw Error("SingularGram", "Gram matrix of lower monomials is singular");
    auto x = solve(g, rhs);
    for (std::size_t k = 0; k < lower.size(); ++k) b.add(lower[k], (*x)[k]);
  }
  primitive_cache_.emplace(std::make_pair(i, l), b);
  return b;
}

UElement UMinus::inverse_primitive(int i, int l) const {
  // b_l = F_l + sum_c x_c F_c  =>  F_l = b_l - sum_c x_c prod_k F_{c_k}
  UElement b = primitive_generator(i, l);
  UElement out(Word{GenIndex{i, l}});
  for (const auto& [w, c] : b.terms()) {
    if (w.size() < 2) continue;
    UElement prod = UElement::one();
    for (const auto& g : w) prod = prod * inverse_primitive(i, g.mult);
    out -= c * prod;
  }
  return out;
}

UElement UMinus::substitute(const UElement& x, const std::map<GenIndex, UElement>& images) const {
  UElement out;
  for (const auto& [w, c] : x.terms()) {
    UElement prod = UElement::one();
    for (const auto& g : w) {
      auto it = images.find(g);
      prod = prod * (it == images.end() ? UElement(Word{g}) : it->second);
    }
    out += c * prod;
  }
  return out;
}

UElement UMinus::psi(const UElement& x, PsiDirection dir) const {
  std::map<GenIndex, UElement> images;
  for (const auto& [w, c] : x.terms())
    for (const auto& g : w) {
      if (datum_.type(g.index) != IndexType::Imaginary || images.count(g)) continue;
      images[g] = dir == PsiDirection::BToF ? inverse_primitive(g.index, g.mult)
                                            : primitive_generator(g.index, g.mult);
    }
  return substitute(x, images);
}

}  // namespace bozec
