#include "bozec/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <fstream>

#include "bozec/error.hpp"

namespace bozec {

namespace {

[[noreturn]] void config_error(const std::string& msg) { throw Error("ConfigError", msg); }

}  // namespace

Json to_json(const Rational& x) { return x.get_str(); }

Json to_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c.get_str();
  return j;
}

Json to_json(const RatFunc& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Json to_json(const GradedSeries& s) {
  Json c = Json::array();
  for (const auto& x : s.coeffs) c.push_back(x.get_str());
  return Json{{"low", s.low}, {"coeffs", c}};
}

Json to_json(const CartanDatum& d) {
  Json orient = Json::array();
  for (const auto& [a, b] : d.orientation()) orient.push_back({d.name(a), d.name(b)});
  return Json{{"indices", d.names()}, {"A", d.matrix()}, {"D", d.symmetrizers()}, {"orientation", orient}};
}

Json to_json(const CartanDatum& d, const UElement& x) {
  Json out = Json::array();
  for (const auto& [w, c] : x.terms()) {
    Json word = Json::array();
    for (const auto& g : w) word.push_back({d.name(g.index), g.mult});
    out.push_back(Json{{"word", word}, {"coeff", to_json(c)}});
  }
  return out;
}

Rational rational_from_json(const Json& j) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
      Rational r(j.get<std::string>());
      if (r.get_den() == 0) config_error("zero denominator");
      r.canonicalize();
      return r;
    }
  } catch (const std::invalid_argument&) {
  }
  config_error("expected a rational number, got " + j.dump());
}

LaurentPoly laurent_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_string()) return LaurentPoly(rational_from_json(j));
  if (!j.is_object()) config_error("expected a Laurent polynomial object, got " + j.dump());
  LaurentPoly p;
  for (const auto& [k, v] : j.items()) {
    int e = 0;
    try {
      std::size_t pos = 0;
      e = std::stoi(k, &pos);
      if (pos != k.size()) config_error("bad exponent " + k);
    } catch (const std::logic_error&) {
      config_error("bad exponent " + k);
    }
    p += LaurentPoly::monomial(e, rational_from_json(v));
  }
  return p;
}

RatFunc ratfunc_from_json(const Json& j) {
  if (j.is_object() && j.contains("num")) {
    LaurentPoly num = laurent_from_json(j.at("num"));
    LaurentPoly den = j.contains("den") ? laurent_from_json(j.at("den")) : LaurentPoly(1);
    return RatFunc(num, den);
  }
  return RatFunc(laurent_from_json(j));
}

DatumConfig datum_from_json(const Json& j) {
  if (!j.is_object()) config_error("datum must be a JSON object");
  for (const char* key : {"indices", "A", "D"})
    if (!j.contains(key)) config_error(std::string("datum is missing \"") + key + "\"");
  std::vector<std::string> names;
  std::vector<std::vector<int>> a;
  std::vector<int> d;
  try {
    names = j.at("indices").get<std::vector<std::string>>();
    a = j.at("A").get<std::vector<std::vector<int>>>();
    d = j.at("D").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    config_error(std::string("malformed datum: ") + e.what());
  }
  auto index = [&](const Json& v) -> int {
    if (v.is_number_integer()) return v.get<int>();
    if (v.is_string()) {
      auto it = std::find(names.begin(), names.end(), v.get<std::string>());
      if (it == names.end()) config_error("unknown index " + v.dump());
      return static_cast<int>(it - names.begin());
    }
    config_error("index must be a name or an integer, got " + v.dump());
  };
  std::vector<std::pair<int, int>> orientation;
  if (j.contains("orientation")) {
    for (const auto& e : j.at("orientation")) {
      if (!e.is_array() || e.size() != 2) config_error("orientation entries must be pairs");
      orientation.emplace_back(index(e[0]), index(e[1]));
    }
  }
  DatumConfig cfg{CartanDatum(names, a, d, orientation), {}};
  if (j.contains("norms")) {
    for (const auto& e : j.at("norms")) {
      if (!e.is_object() || !e.contains("index") || !e.contains("value"))
        config_error("norm entries need \"index\" and \"value\"");
      GenIndex g{index(e.at("index")), e.value("l", 1)};
      cfg.norms[g] = ratfunc_from_json(e.at("value"));
    }
  }
  return cfg;
}

DatumConfig load_datum_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) config_error("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    config_error(path + ": " + e.what());
  }
  return datum_from_json(j);
}

Sequence parse_sequence(const CartanDatum& d, const std::string& text) {
  Sequence s;
  std::size_t k = 0;
  auto skip = [&] {
    while (k < text.size() && (std::isspace(static_cast<unsigned char>(text[k])) || text[k] == ',')) ++k;
  };
  skip();
  while (k < text.size()) {
    if (text[k] == '(') {
      const std::size_t close = text.find(')', k);
      if (close == std::string::npos) config_error("unbalanced parenthesis in " + text);
      const std::string inner = text.substr(k + 1, close - k - 1);
      const std::size_t comma = inner.find(',');
      if (comma == std::string::npos) config_error("expected (name,l) in " + text);
      std::string name = inner.substr(0, comma);
      std::string mult = inner.substr(comma + 1);
      auto trim = [](std::string& x) {
        while (!x.empty() && std::isspace(static_cast<unsigned char>(x.back()))) x.pop_back();
        while (!x.empty() && std::isspace(static_cast<unsigned char>(x.front()))) x.erase(x.begin());
      };
      trim(name);
      trim(mult);
      int l = 0;
      try {
        l = std::stoi(mult);
      } catch (const std::logic_error&) {
        config_error("bad multiplicity in " + text);
      }
      s.push_back(Label{d.index_of(name), l});
      k = close + 1;
    } else {
      std::size_t end = k;
      while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) && text[end] != ',' &&
             text[end] != '(')
        ++end;
      s.push_back(Label{d.index_of(text.substr(k, end - k)), 1});
      k = end;
    }
    skip();
  }
  return s;
}

std::string format_sequence(const CartanDatum& d, const Sequence& s) {
  std::string out;
  for (const auto& l : s) out += (out.empty() ? "" : " ") + d.label_name(l);
  return out;
}

Decorated parse_decorated(const CartanDatum& d, const std::string& text) {
  Decorated out;
  std::istringstream in(text);
  std::string tok;
  auto number = [&](const std::string& x) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(x, &pos);
      if (pos == x.size() && v >= 0) return v;
    } catch (const std::logic_error&) {
    }
    config_error("bad block size in " + text);
  };
  while (in >> tok) {
    if (tok.front() == '(') {
      Sequence s = parse_sequence(d, tok);
      if (s.size() != 1) config_error("bad block " + tok);
      out.push_back(Block{s.front(), 1, BlockKind::Plain});
      continue;
    }
    if (auto br = tok.find('['); br != std::string::npos) {
      if (tok.back() != ']') config_error("bad block " + tok);
      out.push_back(Block{Label{d.index_of(tok.substr(0, br)), 1},
                          number(tok.substr(br + 1, tok.size() - br - 2)), BlockKind::Symmetric});
      continue;
    }
    if (auto hat = tok.find('^'); hat != std::string::npos) {
      std::string rest = tok.substr(hat + 1);
      const Label l{d.index_of(tok.substr(0, hat)), 1};
      if (!rest.empty() && rest.front() == '(') {
        if (rest.back() != ')') config_error("bad block " + tok);
        out.push_back(Block{l, number(rest.substr(1, rest.size() - 2)), BlockKind::Divided});
      } else {
        out.push_back(Block{l, number(rest), BlockKind::Plain});
      }
      continue;
    }
    out.push_back(Block{Label{d.index_of(tok), 1}, 1, BlockKind::Plain});
  }
  return out;
}

std::string format_decorated(const CartanDatum& d, const Decorated& s) {
  std::string out;
  for (const auto& b : s) {
    std::string t = d.label_name(b.label);
    switch (b.kind) {
      case BlockKind::Plain: t += b.n == 1 ? "" : "^" + std::to_string(b.n); break;
      case BlockKind::Divided: t += "^(" + std::to_string(b.n) + ")"; break;
      case BlockKind::Symmetric: t += "[" + std::to_string(b.n) + "]"; break;
    }
    out += (out.empty() ? "" : " ") + t;
  }
  return out;
}

}  // namespace bozec
