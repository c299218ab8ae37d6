#include <filesystem>
#include <fstream>
#include <functional>
#include <string>

#include "bozec/json_io.hpp"
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

TEST_CASE("scalar round trips") {
  const Rational x(-7, 3);
  CHECK(to_json(x) == Json("-7/3"));
  CHECK(rational_from_json(to_json(x)) == x);
  CHECK(rational_from_json(Json(5)) == Rational(5));

  LaurentPoly p = LaurentPoly::monomial(-2, Rational(1, 2)) + LaurentPoly::monomial(3, -4);
  CHECK(laurent_from_json(to_json(p)) == p);
  CHECK(to_json(p)["-2"] == Json("1/2"));

  RatFunc f(LaurentPoly::monomial(1), LaurentPoly(1) - LaurentPoly::monomial(2).pow(2));
  CHECK(ratfunc_from_json(to_json(f)) == f);
  CHECK(ratfunc_from_json(to_json(RatFunc(0))) == RatFunc(0));

  CHECK(error_code([] { rational_from_json(Json("1/0")); }) == "ConfigError");
  CHECK(error_code([] { laurent_from_json(Json::array()); }) == "ConfigError");
}

TEST_CASE("graded series encoding") {
  GradedSeries s = to_series(RatFunc(LaurentPoly(1), LaurentPoly(1) - LaurentPoly::monomial(2)), 0, 4);
  Json j = to_json(s);
  CHECK(j["low"] == 0);
  CHECK(j["coeffs"].size() == 5);
  CHECK(j["coeffs"][2] == Json("1"));
  CHECK(j["coeffs"][1] == Json("0"));
}

TEST_CASE("datum configs") {
  Json j = Json::parse(R"({"indices":["p","z","m"],"A":[[2,-1,-1],[-1,0,-1],[-1,-1,-2]],"D":[1,1,1],
                           "orientation":[["m","p"],["z","m"],["p","z"]]})");
  DatumConfig cfg = datum_from_json(j);
  const CartanDatum& d = cfg.datum;
  CHECK(d.size() == 3);
  CHECK(d.type(2) == IndexType::Imaginary);
  CHECK(d.arrow(Label{2, 1}, Label{0, 1}));
  CHECK_FALSE(d.arrow(Label{0, 1}, Label{2, 1}));
  CHECK(datum_from_json(to_json(d)).datum.orientation() == d.orientation());

  Json norms = Json::parse(R"({"indices":["m"],"A":[[-2]],"D":[1],
                               "norms":[{"index":"m","l":1,"value":{"num":{"0":"1"},"den":{"0":"1","2":"-1"}}}]})");
  DatumConfig nc = datum_from_json(norms);
  REQUIRE(nc.norms.count(Label{0, 1}) == 1);
  CHECK(nc.norms.at(Label{0, 1}) == RatFunc(LaurentPoly(1), LaurentPoly(1) - LaurentPoly::monomial(2)));

  CHECK(error_code([] { datum_from_json(Json::parse(R"({"indices":["i"],"A":[[2]]})")); }) == "ConfigError");
  CHECK(error_code([] { datum_from_json(Json::parse(R"({"indices":["i","j"],"A":[[2,-1],[-2,2]],"D":[1,1]})")); }) ==
        "InvalidDatum");
  CHECK(error_code([] { datum_from_json(Json::parse(R"({"indices":["i"],"A":[[2]],"D":[1],"orientation":[["i","k"]]})")); }) !=
        "");
  CHECK(error_code([] { load_datum_file("/nonexistent/datum.json"); }) == "ConfigError");

  const auto path = std::filesystem::temp_directory_path() / "bozec_json_io_test.json";
  {
    std::ofstream f(path);
    f << "{ not json";
  }
  CHECK(error_code([&] { load_datum_file(path.string()); }) == "ConfigError");
  {
    std::ofstream f(path);
    f << to_json(test_datum()).dump();
  }
  CHECK(load_datum_file(path.string()).datum.size() == 3);
  std::filesystem::remove(path);
}

TEST_CASE("sequences") {
  CartanDatum d = test_datum();
  Sequence s = parse_sequence(d, "p (m,2) z");
  REQUIRE(s.size() == 3);
  CHECK(s[1] == Label{2, 2});
  CHECK(parse_sequence(d, "p,(m, 2),z") == s);
  CHECK(format_sequence(d, s) == "p (m,2) z");
  CHECK(parse_sequence(d, format_sequence(d, s)) == s);
  CHECK(parse_sequence(d, "").empty());
  CHECK(error_code([&] { parse_sequence(d, "p q"); }) != "");
  CHECK(error_code([&] { parse_sequence(d, "(m,2"); }) == "ConfigError");
  CHECK(error_code([&] { parse_sequence(d, "(m,x)"); }) == "ConfigError");
}

TEST_CASE("decorated idempotents") {
  CartanDatum d = test_datum();
  Decorated a = parse_decorated(d, "p^(2) z[3] (m,2) p^2 m");
  REQUIRE(a.size() == 5);
  CHECK(a[0].kind == BlockKind::Divided);
  CHECK(a[0].n == 2);
  CHECK(a[1].kind == BlockKind::Symmetric);
  CHECK(a[1].n == 3);
  CHECK(a[2].label == Label{2, 2});
  CHECK(a[3].kind == BlockKind::Plain);
  CHECK(a[3].n == 2);
  CHECK(a[4].label == Label{2, 1});
  const std::string text = format_decorated(d, a);
  CHECK(text == "p^(2) z[3] (m,2) p^2 m");
  Decorated b = parse_decorated(d, text);
  REQUIRE(b.size() == a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(b[k].label == a[k].label);
    CHECK(b[k].n == a[k].n);
    CHECK(b[k].kind == a[k].kind);
  }
  CHECK(error_code([&] { parse_decorated(d, "p^(x)"); }) == "ConfigError");
  CHECK(error_code([&] { parse_decorated(d, "z[2"); }) == "ConfigError");
}

TEST_CASE("element expansion") {
  UMinus u(test_datum());
  UElement x(Word{Label{0, 1}, Label{2, 2}}, RatFunc(3));
  Json j = to_json(u.datum(), x);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["word"].size() == 2);
  CHECK(j[0]["word"][1][0] == "m");
  CHECK(j[0]["word"][1][1] == 2);
  CHECK(ratfunc_from_json(j[0]["coeff"]) == RatFunc(3));
}
