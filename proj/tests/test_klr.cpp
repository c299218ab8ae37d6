#include <random>

#include "bozec/klr.hpp"
#include "doctest.h"

using namespace bozec;

namespace {

LaurentPoly q(int e = 1) { return LaurentPoly::monomial(e); }
RatFunc inv(const LaurentPoly& d) { return RatFunc(LaurentPoly(1), d); }
LaurentPoly one_minus(int e) { return LaurentPoly(1) - q(e); }

CartanDatum test_datum(std::vector<std::pair<int, int>> orientation = {}) {
  return CartanDatum({"p", "z", "m"}, {{2, -1, -1}, {-1, 0, -1}, {-1, -1, -2}}, {1, 1, 1},
                     std::move(orientation));
}

constexpr int P = 0, Z = 1, M = 2;
const Label p{P, 1}, z{Z, 1}, m1{M, 1}, m2{M, 2};

KLRElement random_element(const KLR& R, const Sequence& nu, std::mt19937& rng, int max_dots) {
  auto seqs = KLR::orderings(nu);
  const int n = static_cast<int>(nu.size());
  const Sequence& src = seqs[rng() % seqs.size()];
  Perm w = identity_perm(n);
  std::shuffle(w.begin(), w.end(), rng);
  Exponents dots(n);
  for (int& d : dots) d = static_cast<int>(rng() % (max_dots + 1));
  KLRElement x = R.basis(src, w, dots);
  if (rng() % 2) {
    // add a second term of the same degree and shape
    Exponents d2 = dots;
    if (n > 1 && R.target(src, w)[0] == R.target(src, w)[1] && d2[0] > 0) {
      --d2[0];
      ++d2[1];
      x += R.basis(src, w, d2) * Rational(-3, 2);
    }
  }
  return x;
}

bool act_agrees(const KLR& R, const KLRElement& a, const KLRElement& b, const Sequence& nu, int deg) {
  const int n = static_cast<int>(nu.size());
  KLRElement ab = R.multiply(a, b);
  for (const Sequence& s : KLR::orderings(nu)) {
    for (int d = 0; d <= deg; ++d) {
      for (const auto& e : monomials_of_degree(n, d)) {
        Poly f = Poly::monomial(e);
        std::map<Sequence, Poly> lhs = R.act(ab, s, f);
        std::map<Sequence, Poly> rhs;
        for (const auto& [t, g] : R.act(b, s, f))
          for (const auto& [u, h] : R.act(a, t, g)) {
            auto [it, ins] = rhs.try_emplace(u, h);
            if (!ins) it->second += h;
          }
        for (auto it = rhs.begin(); it != rhs.end();)
          it = it->second.is_zero() ? rhs.erase(it) : std::next(it);
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("generator degrees") {
  KLR R(test_datum());
  CHECK(R.degree(R.idempotent(Sequence{p})) == 0);
  CHECK(R.degree(R.dot(Sequence{p}, 1)) == 2);
  CHECK(R.degree(R.crossing(Sequence{m2, m2}, 1)) == 8);
  CHECK(R.degree(R.crossing(Sequence{p, p}, 1)) == -2);
  CHECK(R.degree(R.crossing(Sequence{z, z}, 1)) == 0);
  CHECK_THROWS_AS(R.dot(Sequence{p}, 2), Error);
  CHECK_THROWS_AS(R.crossing(Sequence{p}, 1), Error);
  CHECK_THROWS_AS(R.idempotent(Sequence{Label{Z, 2}}), Error);
  KLR A(test_datum(), AlphabetMode::Appendix);
  CHECK_THROWS_AS(A.idempotent(Sequence{m2}), Error);
}

TEST_CASE("polynomial action") {
  KLR R(test_datum());
  const Sequence pp{p, p}, mm{m1, m1};
  CHECK(R.act_tau(pp, 0, Poly::constant(2, 1)).is_zero());
  CHECK(R.act_tau(pp, 0, Poly::var(2, 0)) == Poly::constant(2, 1));
  CHECK(R.act_tau(mm, 0, Poly::constant(2, 1)) == Poly::var(2, 0) + Poly::var(2, 1));
  // p -> m with a_pm = -1: along the orientation the factor is x1 + x2
  CHECK(R.act_tau(Sequence{p, m1}, 0, Poly::constant(2, 1)) == Poly::var(2, 0) + Poly::var(2, 1));
  CHECK(R.act_tau(Sequence{m1, p}, 0, Poly::var(2, 0)) == Poly::var(2, 1));
}

TEST_CASE("products of generators") {
  KLR R(test_datum());
  const Sequence pp{p, p}, zz{z, z}, mm{m1, m1};
  CHECK(R.multiply(R.crossing(pp, 1), R.crossing(pp, 1)).is_zero());
  CHECK(R.multiply(R.crossing(zz, 1), R.crossing(zz, 1)) == R.idempotent(zz));
  KLRElement sq = R.multiply(R.crossing(mm, 1), R.crossing(mm, 1));
  KLRElement expect = R.basis(mm, {0, 1}, {2, 0}) + R.basis(mm, {0, 1}, {1, 1}) * Rational(2) +
                      R.basis(mm, {0, 1}, {0, 2});
  CHECK(sq == expect);
  // x2 tau1 - tau1 x1 on (p,p) is minus the idempotent under operator composition
  KLRElement c = R.multiply(R.dot(pp, 2), R.crossing(pp, 1)) - R.multiply(R.crossing(pp, 1), R.dot(pp, 1));
  CHECK(c == R.idempotent(pp) * Rational(-1));
  KLRElement c2 = R.multiply(R.dot(pp, 1), R.crossing(pp, 1)) - R.multiply(R.crossing(pp, 1), R.dot(pp, 2));
  CHECK(c2 == R.idempotent(pp));
  CHECK(R.multiply(R.idempotent(Sequence{p, z}), R.idempotent(Sequence{z, p})).is_zero());
  CHECK_THROWS_AS(R.multiply(R.idempotent(pp), R.idempotent(zz)), Error);
}

TEST_CASE("local relations in the polynomial representation") {
  const std::vector<Label> full{p, z, m1, m2};
  for (auto orient : {std::vector<std::pair<int, int>>{},
                      std::vector<std::pair<int, int>>{{1, 0}, {2, 0}, {2, 1}}}) {
    KLR R(test_datum(orient));
    for (const auto& a : full)
      for (const auto& b : full)
        for (const auto& c : full) {
          if (!(a <= b && b <= c)) continue;
          RelationReport rep = R.verify_relations(Sequence{a, b, c}, 4);
          CHECK_MESSAGE(rep.ok(), (rep.failures.empty() ? "" : rep.failures.front()));
        }
    KLR A(test_datum(orient), AlphabetMode::Appendix);
    CHECK(A.verify_relations(Sequence{p, m1, p}, 5).ok());
    CHECK(A.verify_relations(Sequence{m1, m1, m1}, 5).ok());
  }
}

TEST_CASE("braid correction") {
  KLR R(test_datum());
  Poly c = R.braid_correction(Sequence{p, m2, p}, 0);
  // -l a_pm = 2: x1 + x3
  CHECK(c == Poly::var(3, 0) + Poly::var(3, 2));
  CHECK(R.braid_correction(Sequence{m1, m1, m1}, 0).is_zero());
  CHECK(R.braid_correction(Sequence{z, p, z}, 0).is_zero());
}

TEST_CASE("normal form products agree with the polynomial action") {
  std::mt19937 rng(7);
  KLR R(test_datum());
  const std::vector<Sequence> nus{{p, p, p}, {p, m1, p}, {p, p, z}, {z, z, m1}, {m1, m1, p},
                                  {m2, p, p}, {p, z, m1}, {z, z, z}, {p, p}, {m1, m2}};
  int tested = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const Sequence& nu = nus[trial % nus.size()];
    KLRElement b = random_element(R, nu, rng, 2);
    // pick a with source equal to a target of b
    Sequence tgt = R.target(b.terms().begin()->first.src, b.terms().begin()->first.w);
    KLRElement a = random_element(R, nu, rng, 1);
    BasisKey ka = a.terms().begin()->first;
    Perm w = ka.w;
    Sequence src = tgt;
    a = R.basis(src, w, ka.dots);
    CHECK(act_agrees(R, a, b, nu, 6));
    auto da = R.degree(a), db = R.degree(b), dab = R.degree(R.multiply(a, b));
    if (dab) CHECK(*dab == *da + *db);
    ++tested;
  }
  CHECK(tested == 50);
}

TEST_CASE("psi is an involutive anti-automorphism") {
  std::mt19937 rng(11);
  KLR R(test_datum());
  const Sequence nu{p, p, m1};
  for (int trial = 0; trial < 20; ++trial) {
    KLRElement b = random_element(R, nu, rng, 1);
    BasisKey kb = b.terms().begin()->first;
    KLRElement a = random_element(R, nu, rng, 1);
    BasisKey ka = a.terms().begin()->first;
    a = R.basis(R.target(kb.src, kb.w), ka.w, ka.dots);
    CHECK(R.psi(R.psi(a)) == a);
    CHECK(R.psi(R.multiply(a, b)) == R.multiply(R.psi(b), R.psi(a)));
  }
  const Sequence s{p, m1};
  CHECK(R.psi(R.idempotent(s)) == R.idempotent(s));
  CHECK(R.psi(R.dot(s, 2)) == R.dot(s, 2));
}

TEST_CASE("symmetrizers are idempotents of degree zero") {
  KLR R(test_datum());
  for (int n = 1; n <= 4; ++n) {
    KLRElement e = R.symmetrizer(p, n, BlockKind::Divided);
    CHECK(R.multiply(e, e) == e);
    CHECK(R.degree(e) == 0);
    KLRElement s = R.symmetrizer(z, n, BlockKind::Symmetric);
    CHECK(R.multiply(s, s) == s);
    CHECK(R.degree(s) == 0);
  }
  CHECK_THROWS_AS(R.symmetrizer(z, 2, BlockKind::Divided), Error);
  CHECK_THROWS_AS(R.symmetrizer(p, 2, BlockKind::Symmetric), Error);
}

TEST_CASE("graded dimensions") {
  KLR R(test_datum());
  CHECK(R.graded_dim(Sequence{p}, Sequence{p}) == inv(one_minus(2)));
  CHECK(R.graded_dim(Sequence{p, p}, Sequence{p, p}) ==
        RatFunc(LaurentPoly(1) + q(-2), one_minus(2) * one_minus(2)));
  CHECK(R.graded_dim(Sequence{z, z}, Sequence{z, z}) == RatFunc(LaurentPoly(2), one_minus(2) * one_minus(2)));
  CHECK(R.graded_dim(Sequence{p, z}, Sequence{p, p}) == RatFunc(0));
  CHECK(KLR::center_graded_dim(R.datum(), Sequence{m2, m2}) == inv(one_minus(2) * one_minus(4)));
  CHECK(KLR::center_graded_dim(R.datum(), Sequence{p}) == inv(one_minus(2)));
  CHECK(KLR::center_graded_dim(R.datum(), Sequence{m1, p}) == inv(one_minus(2) * one_minus(2)));

  // closed form against ranks of the diagram basis, for both orientations
  for (auto orient : {std::vector<std::pair<int, int>>{},
                      std::vector<std::pair<int, int>>{{1, 0}, {2, 0}, {2, 1}}}) {
    KLR S(test_datum(orient));
    for (const Sequence& src : KLR::orderings(Sequence{p, p, m1})) {
      for (const Sequence& tgt : KLR::orderings(Sequence{p, p, m1})) {
        int low = S.min_degree(src, tgt);
        GradedSeries g = S.sandwich_dims(S.idempotent(tgt), S.idempotent(src), src, tgt, low + 6);
        CHECK(g == to_series(S.graded_dim(src, tgt), low, low + 6));
      }
    }
  }
}

TEST_CASE("projective modules and the pairing") {
  KLR R(test_datum());
  // divided power block of p with n = 2
  Decorated d2{Block{p, 2, BlockKind::Divided}};
  CHECK(R.shift(d2) == 1);
  RatFunc closed = R.projective_dim(Sequence{p, p}, d2);
  CHECK(closed == RatFunc(q(-1), one_minus(2) * one_minus(2)));
  CHECK(R.projective_dim_series(Sequence{p, p}, d2, 8) == to_series(closed, -1, 8));

  Decorated dz{Block{z, 2, BlockKind::Symmetric}};
  CHECK(R.projective_dim_series(Sequence{z, z}, dz, 8) == to_series(R.projective_dim(Sequence{z, z}, dz), 0, 8));

  Decorated mixed{Block{p, 1}, Block{p, 2, BlockKind::Divided}, Block{m1, 1}};
  for (const Sequence& k : KLR::orderings(R.expand(mixed))) {
    RatFunc f = R.projective_dim(k, mixed);
    int low = R.min_degree(R.expand(mixed), k) - R.shift(mixed);
    CHECK(R.projective_dim_series(k, mixed, low + 5) == to_series(f, low, low + 5));
  }

  CHECK(R.kl_pairing(dz, dz, 10) == to_series(inv(one_minus(2) * one_minus(4)), 0, 10));
  CHECK(R.kl_pairing({Block{m2}}, {Block{m2}}, 6) == to_series(inv(one_minus(2)), 0, 6));
  CHECK(R.kl_pairing({Block{p}}, {Block{p}}, 6) == to_series(inv(one_minus(2)), 0, 6));
  CHECK(R.kl_pairing(d2, d2, 8) == to_series(inv(one_minus(2) * one_minus(4)), 0, 8));
  CHECK(*R.kl_pairing_exact({Block{p}, Block{z}}, {Block{z}, Block{p}}) ==
        R.graded_dim(Sequence{z, p}, Sequence{p, z}));
  CHECK(R.kl_pairing({Block{p}}, {Block{z}}, 3).coeffs.empty());
  CHECK_THROWS_AS(R.kl_pairing(d2, {Block{p}, Block{p}, Block{z}}, 4), Error);
}

TEST_CASE("Serre isomorphisms at the level of graded dimensions") {
  for (int ajj : {2, -2, 0})
    for (int a : {0, -1, -2})
      for (int n = 1; n <= 2; ++n) {
        if (n == 2 && a == -2) continue;
        CartanDatum d({"i", "j"}, {{2, a}, {a, ajj}}, {1, 1});
        KLR R(d);
        auto [even, odd] = R.serre_projectives(0, 1, n);
        for (const auto& c : R.compare_projectives(even, odd))
          CHECK_MESSAGE(c.lhs == c.rhs, "a_jj=" << ajj << " a=" << a << " n=" << n << " at "
                                                << R.datum().label_name(c.k.front()));
        // one sum is not trivially equal to a part of the other
        if (a != 0) CHECK(even.size() + odd.size() == static_cast<std::size_t>(2 - n * a));
      }

  // the closed form agrees with linear algebra on one case with an e_{j,n} block
  CartanDatum d({"i", "j"}, {{2, -1}, {-1, 0}}, {1, 1});
  KLR R(d);
  auto [even, odd] = R.serre_projectives(0, 1, 1);
  for (const auto& dec : even)
    for (const Sequence& k : KLR::orderings(R.expand(dec))) {
      RatFunc f = R.projective_dim(k, dec);
      int low = R.min_degree(R.expand(dec), k) - R.shift(dec);
      CHECK(R.projective_dim_series(k, dec, low + 4) == to_series(f, low, low + 4));
    }
}

TEST_CASE("swap isomorphisms when a_ij = 0") {
  CartanDatum d({"i", "j", "k"}, {{0, 0, 0}, {0, -2, 0}, {0, 0, 0}}, {1, 1, 1});
  KLR R(d);
  const Label i{0, 1}, j2{1, 2}, k{2, 1};
  auto cmp = [&](const Decorated& a, const Decorated& b) {
    for (const auto& c : R.compare_projectives({a}, {b})) CHECK(c.lhs == c.rhs);
  };
  cmp({Block{i}, Block{j2}}, {Block{j2}, Block{i}});
  cmp({Block{i, 2, BlockKind::Symmetric}, Block{j2}}, {Block{j2}, Block{i, 2, BlockKind::Symmetric}});
  cmp({Block{i, 2, BlockKind::Symmetric}, Block{k, 2, BlockKind::Symmetric}},
      {Block{k, 2, BlockKind::Symmetric}, Block{i, 2, BlockKind::Symmetric}});
}
