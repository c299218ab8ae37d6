#include <functional>
#include <string>

#include "bozec/cartan.hpp"
#include "doctest.h"

using namespace bozec;

namespace {

CartanDatum test_datum() {
  return CartanDatum({"p", "z", "m"}, {{2, -1, -1}, {-1, 0, -1}, {-1, -1, -2}}, {1, 1, 1});
}

std::string error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_CASE("validation") {
  CartanDatum a({"i"}, {{2}}, {1});
  CHECK(a.type(0) == IndexType::Real);
  CHECK(a.indices_of(IndexType::Real) == std::vector<int>{0});
  CartanDatum j({"i"}, {{0}}, {1});
  CHECK(j.type(0) == IndexType::Isotropic);
  auto v = CartanDatum::violations({"i", "j"}, {{2, -1}, {-2, 2}}, {1, 1}, {});
  REQUIRE(v.size() == 1);
  CHECK(v[0].find("symmetrizability fails") != std::string::npos);
  CHECK(error_code([] { CartanDatum({"i", "j"}, {{2, -1}, {-2, 2}}, {1, 1}); }) == "InvalidDatum");
  CHECK(error_code([] { CartanDatum({"i"}, {{-1}}, {1}); }) == "InvalidDatum");
  CHECK(error_code([] { CartanDatum({"i"}, {{2}}, {0}); }) == "InvalidDatum");
  CHECK(error_code([] { CartanDatum({"i", "j"}, {{2, 1}, {1, 2}}, {1, 1}); }) == "InvalidDatum");
  CHECK(error_code([] { CartanDatum({"i", "i"}, {{2, 0}, {0, 2}}, {1, 1}); }) == "InvalidDatum");
  CHECK(error_code([] { CartanDatum({"i", "j"}, {{2, 0}, {0, 2}}, {1, 1}, {{0, 1}}); }) == "InvalidDatum");
  // several problems are all reported
  CHECK(CartanDatum::violations({"i", "j"}, {{3, 1}, {1, 2}}, {1, 0}, {}).size() >= 3);
  CartanDatum b2({"a", "b"}, {{2, -1}, {-2, 2}}, {2, 1});
  CHECK(b2.dot(0, 1) == b2.dot(1, 0));
}

TEST_CASE("types, labels and degrees") {
  CartanDatum d = test_datum();
  CHECK(d.index_of("m") == 2);
  CHECK(error_code([&] { d.index_of("x"); }) == "UnknownIndex");
  CHECK(std::string(to_string(d.type(2))) == "imaginary");
  CHECK(d.dot_degree(Label{0, 1}) == 2);
  CHECK(d.crossing_degree(Label{0, 1}, Label{0, 1}) == -2);
  CHECK(d.crossing_degree(Label{1, 1}, Label{1, 1}) == 0);
  CHECK(d.crossing_degree(Label{2, 2}, Label{2, 2}) == 8);
  CHECK(d.crossing_degree(Label{0, 1}, Label{2, 3}) == 3);
  CHECK(d.weight(Sequence{}) == std::vector<int>{0, 0, 0});
  CHECK(d.weight(Sequence{{2, 2}, {2, 3}}) == std::vector<int>{0, 0, 5});
  CHECK(d.weight(Sequence{{0, 1}, {1, 1}, {0, 1}}) == std::vector<int>{2, 1, 0});
  CHECK(d.valid_label(Label{2, 3}, AlphabetMode::Full));
  CHECK_FALSE(d.valid_label(Label{2, 3}, AlphabetMode::Appendix));
  CHECK_FALSE(d.valid_label(Label{0, 2}, AlphabetMode::Full));
  CHECK_FALSE(d.valid_label(Label{3, 1}, AlphabetMode::Full));
  CHECK(error_code([&] { d.check_label(Label{1, 2}, AlphabetMode::Full); }) == "InvalidLabel");
  CHECK(d.label_name(Label{0, 1}) == "p");
  CHECK(d.label_name(Label{2, 2}) == "(m,2)");
}

TEST_CASE("orientation") {
  CartanDatum d = test_datum();
  CHECK(d.arrow(Label{0, 1}, Label{1, 1}));
  CHECK_FALSE(d.arrow(Label{1, 1}, Label{0, 1}));
  CHECK(d.arrow(Label{2, 1}, Label{2, 2}));
  CHECK_FALSE(d.arrow(Label{2, 2}, Label{2, 1}));
  CartanDatum r({"p", "z", "m"}, {{2, -1, -1}, {-1, 0, -1}, {-1, -1, -2}}, {1, 1, 1},
                {{1, 0}, {2, 0}, {2, 1}});
  CHECK(r.arrow(Label{1, 1}, Label{0, 1}));
  CHECK(r.orientation().size() == 3);
}
