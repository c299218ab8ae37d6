#pragma once
// JSON encodings: Laurent polynomials as {"exp": "num/den"}, rational
// functions as {"num": ..., "den": ...}, datum configs as
// {"indices", "A", "D", "orientation", "norms"}.
#include <map>
#include <string>

#include "bozec/cartan.hpp"
#include "bozec/klr.hpp"
#include "bozec/scalar.hpp"
#include "bozec/uminus.hpp"
#include "json.hpp"

namespace bozec {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& x);
Json to_json(const LaurentPoly& p);
Json to_json(const RatFunc& f);
Json to_json(const GradedSeries& s);
Json to_json(const CartanDatum& d);
Json to_json(const CartanDatum& d, const UElement& x);

Rational rational_from_json(const Json& j);
LaurentPoly laurent_from_json(const Json& j);
RatFunc ratfunc_from_json(const Json& j);

struct DatumConfig {
  CartanDatum datum;
  std::map<GenIndex, RatFunc> norms;  // norm overrides for uminus
};

/// Throws Error{"ConfigError"} on malformed input and Error{"InvalidDatum"}
/// if the datum fails validation.
DatumConfig datum_from_json(const Json& j);
DatumConfig load_datum_file(const std::string& path);

/// Parses "p (m,2) z" or "p,(m,2),z"; a bare name means multiplicity 1.
Sequence parse_sequence(const CartanDatum& d, const std::string& text);
std::string format_sequence(const CartanDatum& d, const Sequence& s);

/// Parses blocks separated by spaces: "p" or "(m,2)" is one strand, "p^3"
/// three plain strands, "p^(3)" a divided power block and "z[3]" the
/// symmetrizer block e_{z,3}.
Decorated parse_decorated(const CartanDatum& d, const std::string& text);
std::string format_decorated(const CartanDatum& d, const Decorated& s);

}  // namespace bozec
