#include "bozec/cyclotomic.hpp"
#include "bozec/linalg.hpp"
#include "bozec/smash.hpp"
#include "doctest.h"

using namespace bozec;

namespace {

LaurentPoly q(int e = 1) { return LaurentPoly::monomial(e); }
LaurentPoly one_minus(int e) { return LaurentPoly(1) - q(e); }

}  // namespace

TEST_CASE("beta") {
  JordanConfig c{1, 3};
  CHECK(beta(0, c) == RatFunc(1));
  CHECK(beta(1, c) == RatFunc(one_minus(6), one_minus(2)));
  for (int p = 0; p <= 6; ++p) CHECK(beta(p, JordanConfig{1, 1}) == RatFunc(1));
  CHECK(beta(2, JordanConfig{1, 2}) == RatFunc(LaurentPoly(1) + q(2) + q(4)));
  CHECK(beta(3, JordanConfig{1, 0}) == RatFunc(0));
  CHECK(beta(2, JordanConfig{2, 2}) == RatFunc(LaurentPoly(1) + q(4) + q(8)));
  for (int a = 1; a <= 5; ++a)
    for (int p = 0; p <= 6; ++p) {
      JordanConfig cfg{1, a};
      CHECK(beta(p, cfg).is_laurent());
      for (const auto& x : series_expand(beta(p, cfg), 24).coeffs()) CHECK(x >= 0);
      CHECK(beta(p, cfg) == beta_recursive(p, cfg));
    }
  CHECK_THROWS_AS(beta(1, JordanConfig{0, 1}), Error);
}

TEST_CASE("alpha and the Gauss identity") {
  JordanConfig c{1, 2};
  CHECK(alpha_recursive(1, c) == RatFunc(q(-2) - q(2), one_minus(2)));
  for (int r = 1; r <= 2; ++r)
    for (int a = 0; a <= 5; ++a)
      for (int p = 1; p <= 6; ++p) {
        JordanConfig cfg{r, a};
        CHECK(alpha_closed(p, cfg) == alpha_recursive(p, cfg));
        if (a == 0) CHECK(alpha_closed(p, cfg).is_zero());
        if (a >= 1) CHECK(gauss_identity(p, a));
      }
}

TEST_CASE("module V(Lambda)") {
  JordanModule V(JordanConfig{1, 2});
  const VVector v0 = V.basis({});
  for (int l = 1; l <= 3; ++l) CHECK(is_zero(V.apply_E(l, v0)));
  VVector v = V.apply_E(1, V.apply_F(1, v0));
  CHECK(v == VVector{{Partition{}, alpha_closed(1, V.config())}});
  CHECK(V.apply_F(1, V.apply_F(2, v0)) == V.basis({2, 1}));
  CHECK(V.apply_K(V.basis({2, 1})) == VVector{{Partition{2, 1}, RatFunc(q(2))}});

  for (int a = 1; a <= 3; ++a) {
    JordanModule W(JordanConfig{1, a});
    for (int n = 0; n <= 5; ++n)
      for (const auto& lambda : W.level(n)) {
        // every peeling order gives the same vector
        for (int l = 1; l <= 3; ++l) {
          VVector first = W.apply_E_peeling(l, lambda, 0);
          for (std::size_t k = 1; k < lambda.size(); ++k) CHECK(W.apply_E_peeling(l, lambda, k) == first);
          for (const auto& [mu, c] : first) CHECK(size(mu) == n - l);
        }
        for (int l = 1; l <= 3; ++l)
          for (int t = 1; t <= 3; ++t) CHECK(is_zero(W.commutator_defect(l, t, W.basis(lambda))));
      }
    // no singular vectors: the contravariant matrix has full column rank
    for (int n = 1; n <= 4; ++n) {
      auto m = W.contravariant_matrix(n);
      CHECK(rank(m) == W.level(n).size());
    }
  }

  JordanModule T(JordanConfig{1, 0});
  CHECK(T.level(2).empty());
  CHECK(is_zero(T.apply_F(1, T.basis({}))));
}

TEST_CASE("cyclotomic quotient matches the basis prediction") {
  for (int n = 1; n <= 3; ++n)
    for (int a = 1; a <= 3; ++a) {
      std::vector<long> dims = SmashProduct(n).cyclotomic_quotient_dims(a, 4);
      TruncSeries pred = series_expand(predicted_cyclotomic_dim(n, a, 1), 8);
      for (int d = 0; d <= 4; ++d) {
        CHECK(pred[2 * d] == dims[d]);
        if (2 * d + 1 <= 8) CHECK(pred[2 * d + 1] == 0);
      }
    }
}
