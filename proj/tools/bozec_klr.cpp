// bozec-klr: command-line front end for the verification suites.
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bozec/cyclotomic.hpp"
#include "bozec/error.hpp"
#include "bozec/json_io.hpp"
#include "bozec/klr.hpp"
#include "bozec/smash.hpp"
#include "bozec/symgrp.hpp"
#include "bozec/uminus.hpp"

using namespace bozec;

namespace {

struct Options {
  std::string datum;
  std::string alphabet = "full";
  std::string norms = "primitive";
  std::string format = "json";
  std::string out;
  int height = 3;
  int degree = 6;
  int n = 3;
  int a = 2;
  int r = 1;
  int pmax = 4;
  int lmax = 3;
  int max_exponent = 3;
  std::string index;
  std::string nu, source, target, shape, right, content;
};

class Report {
 public:
  explicit Report(std::string command) {
    j_["schema"] = 1;
    j_["command"] = std::move(command);
  }
  Json& data() { return j_; }
  void check(const std::string& name, bool ok, Json detail = nullptr) {
    Json c{{"name", name}, {"ok", ok}};
    if (!detail.is_null()) c["detail"] = std::move(detail);
    j_["checks"].push_back(std::move(c));
    ok_ = ok_ && ok;
  }
  bool ok() const { return ok_; }
  Json finish() {
    if (!j_.contains("checks")) j_["checks"] = Json::array();
    j_["ok"] = ok_;
    return j_;
  }

 private:
  Json j_;
  bool ok_ = true;
};

// ---- text rendering --------------------------------------------------------

bool is_ratfunc(const Json& j) { return j.is_object() && j.size() == 2 && j.contains("num") && j.contains("den"); }

std::string render_scalar(const Json& j) {
  if (is_ratfunc(j)) return ratfunc_from_json(j).to_string();
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_flat(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if ((x.is_object() && !is_ratfunc(x)) || x.is_array()) return false;
  return true;
}

void render_text(const Json& j, std::ostream& os, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object() && !is_ratfunc(j)) {
    for (const auto& [k, v] : j.items()) {
      if ((v.is_object() && !is_ratfunc(v)) || (v.is_array() && !is_flat(v))) {
        os << pad << k << ":\n";
        render_text(v, os, indent + 2);
      } else if (v.is_array()) {
        os << pad << k << ": [";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << render_scalar(v[i]);
        os << "]\n";
      } else {
        os << pad << k << ": " << render_scalar(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (is_flat(v)) {
        os << pad << "- [";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << render_scalar(v[i]);
        os << "]\n";
      } else if (v.is_object() && !is_ratfunc(v)) {
        os << pad << "-\n";
        render_text(v, os, indent + 2);
      } else {
        os << pad << "- " << render_scalar(v) << "\n";
      }
    }
  } else {
    os << pad << render_scalar(j) << "\n";
  }
}

// ---- helpers -----------------------------------------------------------------

DatumConfig require_datum(const Options& o) {
  if (o.datum.empty()) throw Error("ConfigError", "this command needs --datum FILE");
  return load_datum_file(o.datum);
}

AlphabetMode alphabet(const Options& o) {
  return o.alphabet == "appendix" ? AlphabetMode::Appendix : AlphabetMode::Full;
}

NormMode norm_mode(const Options& o) { return o.norms == "geometric" ? NormMode::Geometric : NormMode::Primitive; }

void require_positive(int v, const std::string& name) {
  if (v < 1) throw Error("ConfigError", "--" + name + " must be positive");
}

Json int_matrix(const IntMatrix& m) { return Json(m); }

Json partition_list(const std::vector<std::vector<int>>& ps) { return Json(ps); }

std::string word_name(const CartanDatum& d, const Word& w) {
  std::string s;
  for (const auto& g : w) s += (s.empty() ? "" : " ") + d.label_name(g);
  return s.empty() ? "1" : s;
}

// ---- commands -----------------------------------------------------------------

Json cmd_datum_validate(const Options& o) {
  Report rep("datum validate");
  if (o.datum.empty()) throw Error("ConfigError", "this command needs --datum FILE");
  try {
    DatumConfig cfg = load_datum_file(o.datum);
    const CartanDatum& d = cfg.datum;
    rep.data()["datum"] = to_json(d);
    Json types = Json::object();
    for (int i = 0; i < d.size(); ++i) types[d.name(i)] = to_string(d.type(i));
    rep.data()["types"] = types;
    rep.check("valid", true);
  } catch (const Error& e) {
    if (e.code() != "InvalidDatum") throw;
    rep.check("valid", false, e.what());
  }
  return rep.finish();
}

Json cmd_form_gram(const Options& o) {
  require_positive(o.height, "height");
  DatumConfig cfg = require_datum(o);
  UMinus u(cfg.datum, norm_mode(o), cfg.norms);
  Report rep("form gram");
  rep.data()["norms"] = o.norms;
  Json blocks = Json::array();
  for (const auto& wt : u.weights_up_to(o.height)) {
    auto words = u.words_of_weight(wt);
    Matrix<RatFunc> g = u.gram_matrix(words);
    Json names = Json::array(), rows = Json::array();
    bool symmetric = true;
    for (std::size_t a = 0; a < words.size(); ++a) {
      names.push_back(word_name(cfg.datum, words[a]));
      Json row = Json::array();
      for (std::size_t b = 0; b < words.size(); ++b) {
        row.push_back(to_json(g[a][b]));
        symmetric = symmetric && g[a][b] == g[b][a];
      }
      rows.push_back(row);
    }
    blocks.push_back(Json{{"weight", wt}, {"words", names}, {"gram", rows}, {"rank", rank(g)}});
    rep.check("symmetric at weight " + Json(wt).dump(), symmetric);
  }
  rep.data()["weights"] = blocks;
  return rep.finish();
}

Json cmd_primitive(const Options& o) {
  require_positive(o.lmax, "lmax");
  DatumConfig cfg = require_datum(o);
  const CartanDatum& d = cfg.datum;
  UMinus u(d, NormMode::Geometric, cfg.norms);
  Report rep("primitive");
  std::vector<int> targets;
  if (!o.index.empty()) targets.push_back(d.index_of(o.index));
  else targets = d.indices_of(IndexType::Imaginary);
  Json gens = Json::array();
  for (int i : targets) {
    for (int l = 1; l <= o.lmax; ++l) {
      UElement b = u.primitive_generator(i, l);
      const std::string name = "b(" + d.name(i) + "," + std::to_string(l) + ")";
      rep.check(name + " is primitive", (u.coproduct(b) - TensorElement::primitive(b)).is_zero());
      rep.check(name + " is bar invariant", b.bar() == b);
      gens.push_back(Json{{"index", d.name(i)}, {"l", l}, {"expansion", to_json(d, b)}, {"norm", to_json(u.form(b, b))}});
    }
    for (int l = 2; l <= o.lmax; ++l) {
      auto comps = compositions(l);
      std::vector<UElement> mono;
      for (const auto& c : comps) {
        UElement m = UElement::one();
        for (int p : c) m = m * u.primitive_generator(i, p);
        mono.push_back(m);
      }
      bool orth = true;
      for (std::size_t x = 0; x < comps.size(); ++x)
        for (std::size_t y = 0; y < comps.size(); ++y)
          if (sorted_partition(comps[x]) != sorted_partition(comps[y]))
            orth = orth && u.form(mono[x], mono[y]).is_zero();
      rep.check("orthogonality across partitions of " + std::to_string(l) + " for " + d.name(i), orth);
    }
  }
  rep.data()["generators"] = gens;
  return rep.finish();
}

Json cmd_serre_check(const Options& o) {
  DatumConfig cfg = require_datum(o);
  UMinus u(cfg.datum, norm_mode(o), cfg.norms);
  Report rep("serre check");
  rep.data()["norms"] = o.norms;
  for (const auto& r : u.defining_relations(o.max_exponent, o.lmax)) rep.check(r.name, u.in_radical(r.element));
  return rep.finish();
}

Json cmd_klr_dim(const Options& o) {
  DatumConfig cfg = require_datum(o);
  KLR R(cfg.datum, alphabet(o));
  if (o.source.empty() || o.target.empty()) throw Error("ConfigError", "klr dim needs --source and --target");
  const Sequence src = parse_sequence(cfg.datum, o.source), tgt = parse_sequence(cfg.datum, o.target);
  Report rep("klr dim");
  rep.data()["source"] = format_sequence(cfg.datum, src);
  rep.data()["target"] = format_sequence(cfg.datum, tgt);
  RatFunc f = R.graded_dim(src, tgt);
  rep.data()["dim"] = to_json(f);
  if (!f.is_zero()) {
    const int low = R.min_degree(src, tgt);
    GradedSeries closed = to_series(f, low, low + o.degree);
    GradedSeries ranks = R.sandwich_dims(R.idempotent(tgt), R.idempotent(src), src, tgt, low + o.degree);
    rep.data()["series"] = to_json(ranks);
    rep.check("closed form matches basis ranks", closed == ranks);
  }
  return rep.finish();
}

std::vector<Sequence> default_classes(const CartanDatum& d, AlphabetMode mode, int strands) {
  std::vector<Label> labels;
  for (int i = 0; i < d.size(); ++i) {
    labels.push_back({i, 1});
    if (d.type(i) == IndexType::Imaginary && mode == AlphabetMode::Full) labels.push_back({i, 2});
  }
  std::vector<Sequence> out;
  std::function<void(Sequence, std::size_t)> rec = [&](Sequence s, std::size_t from) {
    if (!s.empty()) out.push_back(s);
    if (static_cast<int>(s.size()) == strands) return;
    for (std::size_t k = from; k < labels.size(); ++k) {
      s.push_back(labels[k]);
      rec(s, k);
      s.pop_back();
    }
  };
  rec({}, 0);
  return out;
}

Json cmd_klr_verify(const Options& o) {
  DatumConfig cfg = require_datum(o);
  KLR R(cfg.datum, alphabet(o));
  if (o.degree < 0) throw Error("ConfigError", "--degree must be nonnegative");
  std::vector<Sequence> classes;
  if (!o.nu.empty()) classes.push_back(parse_sequence(cfg.datum, o.nu));
  else classes = default_classes(cfg.datum, alphabet(o), std::max(1, std::min(o.n, 3)));
  Report rep("klr verify");
  rep.data()["alphabet"] = o.alphabet;
  rep.data()["degree"] = o.degree;
  for (const auto& nu : classes) {
    RelationReport r = R.verify_relations(nu, o.degree);
    Json detail{{"instances", r.checked}};
    if (!r.ok()) detail["first_failure"] = r.failures.front();
    rep.check("relations on " + format_sequence(cfg.datum, nu), r.ok(), detail);
  }
  return rep.finish();
}

Json cmd_klr_pairing(const Options& o) {
  DatumConfig cfg = require_datum(o);
  KLR R(cfg.datum, alphabet(o));
  if (o.shape.empty()) throw Error("ConfigError", "klr pairing needs --shape");
  const Decorated a = parse_decorated(cfg.datum, o.shape);
  const Decorated b = o.right.empty() ? a : parse_decorated(cfg.datum, o.right);
  Report rep("klr pairing");
  rep.data()["left"] = format_decorated(cfg.datum, a);
  rep.data()["right"] = format_decorated(cfg.datum, b);
  GradedSeries s = R.kl_pairing(a, b, o.degree);
  rep.data()["series"] = to_json(s);
  if (auto exact = R.kl_pairing_exact(a, b)) rep.data()["exact"] = to_json(*exact);
  // one-label shapes with a single block pair with themselves like the center
  if (a.size() == 1 && o.right.empty() && a.front().kind != BlockKind::Plain) {
    const Sequence nu = R.expand(a);
    GradedSeries center = to_series(KLR::center_graded_dim(cfg.datum, nu), 0, o.degree);
    rep.check("pairing equals Dim Z", s == center);
  }
  return rep.finish();
}

Json cmd_char_table(const Options& o) {
  require_positive(o.n, "n");
  Report rep("char table");
  rep.data()["n"] = o.n;
  rep.data()["partitions"] = partition_list(partitions(o.n));
  rep.data()["compositions"] = partition_list(compositions(o.n));
  IntMatrix t = character_table(o.n);
  rep.data()["table"] = int_matrix(t);
  auto ps = partitions(o.n);
  auto cs = compositions(o.n);
  bool consistent = true, triangular = true;
  for (std::size_t l = 0; l < ps.size(); ++l)
    for (std::size_t c = 0; c < cs.size(); ++c) {
      const Partition lc = sorted_partition(cs[c]);
      consistent = consistent && t[l][c] == kostka(ps[l], lc);
      if (lc == ps[l]) triangular = triangular && t[l][c] == 1;
      if (lex_greater(lc, ps[l])) triangular = triangular && t[l][c] == 0;
    }
  rep.check("entries depend only on the sorted composition", consistent);
  rep.check("unitriangular in lexicographic order", triangular);
  return rep.finish();
}

Json cmd_kostka(const Options& o) {
  if (o.shape.empty() || o.content.empty()) throw Error("ConfigError", "kostka needs --shape and --content");
  auto parse = [](const std::string& s) {
    std::vector<int> v;
    std::string tok;
    std::istringstream in(s);
    while (std::getline(in, tok, ',')) {
      try {
        v.push_back(std::stoi(tok));
      } catch (const std::logic_error&) {
        throw Error("ConfigError", "bad integer list " + s);
      }
    }
    return v;
  };
  const Partition lambda = parse(o.shape);
  const Composition c = parse(o.content);
  Report rep("kostka");
  rep.data()["shape"] = lambda;
  rep.data()["content"] = c;
  rep.data()["value"] = kostka(lambda, c);
  return rep.finish();
}

Json cmd_cyclo_verify(const Options& o) {
  require_positive(o.pmax, "pmax");
  JordanConfig cfg{o.r, o.a};
  check_config(cfg);
  Report rep("cyclo verify");
  rep.data()["a"] = o.a;
  rep.data()["r"] = o.r;
  Json alphas = Json::array();
  for (int p = 1; p <= o.pmax; ++p) {
    if (o.a >= 1) rep.check("gauss identity p=" + std::to_string(p), gauss_identity(p, o.a));
    rep.check("beta recursion p=" + std::to_string(p), beta(p, cfg) == beta_recursive(p, cfg));
    const RatFunc closed = alpha_closed(p, cfg);
    rep.check("alpha closed form equals recursion p=" + std::to_string(p), closed == alpha_recursive(p, cfg));
    alphas.push_back(to_json(closed));
  }
  rep.data()["alpha"] = alphas;
  JordanModule V(cfg);
  const int top = std::min(o.pmax, 5);
  for (int n = 0; n <= top; ++n) {
    bool comm = true, peel = true;
    for (const auto& lambda : V.level(n))
      for (int l = 1; l <= 3; ++l) {
        for (int t = 1; t <= 3; ++t) comm = comm && is_zero(V.commutator_defect(l, t, V.basis(lambda)));
        VVector first = V.apply_E_peeling(l, lambda, 0);
        for (std::size_t k = 1; k < lambda.size(); ++k) peel = peel && V.apply_E_peeling(l, lambda, k) == first;
      }
    rep.check("commutator identity on level " + std::to_string(n), comm);
    rep.check("peeling independence on level " + std::to_string(n), peel);
  }
  return rep.finish();
}

Json cmd_cyclo_dims(const Options& o) {
  require_positive(o.n, "n");
  if (o.a < 1) throw Error("ConfigError", "--a must be positive");
  if (o.degree < 0) throw Error("ConfigError", "--degree must be nonnegative");
  Report rep("cyclo dims");
  const int step = 2 * o.r;
  const int poly_degree = o.degree / step;
  std::vector<long> dims = SmashProduct(o.n).cyclotomic_quotient_dims(o.a, poly_degree);
  TruncSeries pred = series_expand(predicted_cyclotomic_dim(o.n, o.a, o.r), o.degree);
  Json table = Json::array();
  bool ok = true;
  for (int e = 0; e <= o.degree; ++e) {
    const Rational observed = e % step == 0 ? Rational(dims[e / step]) : Rational(0);
    table.push_back(Json{{"degree", e}, {"observed", observed.get_str()}, {"predicted", pred[e].get_str()}});
    ok = ok && observed == pred[e];
  }
  rep.data()["n"] = o.n;
  rep.data()["a"] = o.a;
  rep.data()["table"] = table;
  rep.check("quotient dimensions match the basis prediction", ok);
  return rep.finish();
}

Json cmd_canonical(const Options& o) {
  require_positive(o.n, "n");
  Report rep("canonical one-vertex");
  auto ps = partitions(o.n);
  IntMatrix t = transition_one_vertex(o.n), ti = transition_one_vertex(o.n, true);
  rep.data()["partitions"] = partition_list(ps);
  rep.data()["transition"] = int_matrix(t);
  rep.data()["inverse"] = int_matrix(ti);
  Json transposes = Json::array();
  bool involution = true;
  for (const auto& l : ps) {
    transposes.push_back(transpose(l));
    involution = involution && transpose(transpose(l)) == l;
  }
  rep.data()["transposes"] = transposes;
  bool kostka_ok = true, unitri = true, inv_ok = true;
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = 0; j < ps.size(); ++j) {
      kostka_ok = kostka_ok && t[i][j] == kostka(ps[j], ps[i]);
      if (i == j) unitri = unitri && t[i][j] == 1;
      if (j > i) unitri = unitri && t[i][j] == 0;
      long s = 0;
      for (std::size_t k = 0; k < ps.size(); ++k) s += t[i][k] * ti[k][j];
      inv_ok = inv_ok && s == (i == j ? 1 : 0);
    }
  rep.check("transition matrix is the Kostka matrix", kostka_ok);
  rep.check("unitriangular", unitri);
  rep.check("integer inverse", inv_ok);
  rep.check("transpose is an involution", involution);
  return rep.finish();
}

void emit(const Json& j, const Options& o) {
  std::ostringstream os;
  if (o.format == "text") render_text(j, os, 0);
  else os << j.dump(2) << "\n";
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) throw Error("ConfigError", "cannot write " + o.out);
    f << os.str();
  } else {
    std::cout << os.str();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Borcherds-Bozec KLR toolkit"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--datum", o.datum, "datum JSON file");
  app.add_option("--alphabet", o.alphabet, "strand alphabet")->check(CLI::IsMember({"full", "appendix"}));
  app.add_option("--norms", o.norms, "norm mode")->check(CLI::IsMember({"primitive", "geometric"}));
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", o.out, "write the report to this file");

  std::function<Json()> run;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::function<Json()> fn) {
    CLI::App* c = parent->add_subcommand(name, help);
    c->callback([&run, fn] { run = fn; });
    return c;
  };

  CLI::App* datum = app.add_subcommand("datum", "datum files");
  datum->require_subcommand(1);
  leaf(datum, "validate", "validate a datum", [&] { return cmd_datum_validate(o); });

  CLI::App* form = app.add_subcommand("form", "bilinear form");
  form->require_subcommand(1);
  leaf(form, "gram", "Gram matrices by weight", [&] { return cmd_form_gram(o); })
      ->add_option("--height", o.height, "maximal height");

  CLI::App* prim = leaf(&app, "primitive", "primitive generators b_il", [&] { return cmd_primitive(o); });
  prim->add_option("--index", o.index, "imaginary index (default: all)");
  prim->add_option("--lmax", o.lmax, "largest l");

  CLI::App* serre = app.add_subcommand("serre", "defining relations");
  serre->require_subcommand(1);
  CLI::App* sc = leaf(serre, "check", "relations lie in the radical", [&] { return cmd_serre_check(o); });
  sc->add_option("--max-exponent", o.max_exponent, "bound on -l a_ij");
  sc->add_option("--lmax", o.lmax, "bound on l for commutators");

  CLI::App* klr = app.add_subcommand("klr", "KLR algebras");
  klr->require_subcommand(1);
  CLI::App* kd = leaf(klr, "dim", "graded dimension of 1_target R 1_source", [&] { return cmd_klr_dim(o); });
  kd->add_option("--source", o.source, "source sequence")->required();
  kd->add_option("--target", o.target, "target sequence")->required();
  kd->add_option("--degree", o.degree, "series length for the rank check");
  CLI::App* kv = leaf(klr, "verify", "local relations in the polynomial representation", [&] { return cmd_klr_verify(o); });
  kv->add_option("--nu", o.nu, "strand multiset (default: every class with at most --n strands)");
  kv->add_option("--degree", o.degree, "maximal monomial degree");
  kv->add_option("--n", o.n, "maximal number of strands");
  CLI::App* kp = leaf(klr, "pairing", "Khovanov-Lauda pairing", [&] { return cmd_klr_pairing(o); });
  kp->add_option("--shape", o.shape, "decorated idempotent, e.g. \"p^(2)\" or \"z[3]\"")->required();
  kp->add_option("--right", o.right, "second argument (default: --shape)");
  kp->add_option("--degree", o.degree, "top degree of the series");

  CLI::App* chr = app.add_subcommand("char", "characters");
  chr->require_subcommand(1);
  leaf(chr, "table", "character table of the Specht modules", [&] { return cmd_char_table(o); })
      ->add_option("--n", o.n, "size");
  CLI::App* ck = leaf(chr, "kostka", "Kostka number", [&] { return cmd_kostka(o); });
  ck->add_option("--shape", o.shape, "partition, e.g. 2,1")->required();
  ck->add_option("--content", o.content, "composition, e.g. 1,1,1")->required();
  CLI::App* k2 = leaf(&app, "kostka", "Kostka number", [&] { return cmd_kostka(o); });
  k2->add_option("--shape", o.shape, "partition, e.g. 2,1")->required();
  k2->add_option("--content", o.content, "composition, e.g. 1,1,1")->required();

  CLI::App* cyc = app.add_subcommand("cyclo", "Jordan quiver at level a");
  cyc->require_subcommand(1);
  CLI::App* cv = leaf(cyc, "verify", "Gauss identity, alpha and the commutator action", [&] { return cmd_cyclo_verify(o); });
  cv->add_option("--a", o.a, "level");
  cv->add_option("--r", o.r, "symmetrizer");
  cv->add_option("--pmax", o.pmax, "largest p");
  CLI::App* cd = leaf(cyc, "dims", "cyclotomic quotient dimensions", [&] { return cmd_cyclo_dims(o); });
  cd->add_option("--n", o.n, "strands");
  cd->add_option("--a", o.a, "level");
  cd->add_option("--r", o.r, "symmetrizer");
  cd->add_option("--degree", o.degree, "top q-degree");

  CLI::App* can = app.add_subcommand("canonical", "canonical bases");
  can->require_subcommand(1);
  leaf(can, "one-vertex", "transition matrices for one isotropic vertex", [&] { return cmd_canonical(o); })
      ->add_option("--n", o.n, "size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (const char* t = std::getenv("BOZEC_KLR_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(t, &end, 10);
    if (*t == '\0' || *end != '\0' || v < 1) {
      std::cerr << "error [ConfigError]: BOZEC_KLR_THREADS must be a positive integer\n";
      return 2;
    }
  }

  try {
    if (!run) throw Error("ConfigError", "no command given");
    Json report = run();
    emit(report, o);
    return report.value("ok", false) ? 0 : 1;
  } catch (const Error& e) {
    Json err{{"schema", 1}, {"ok", false}, {"error", {{"code", e.code()}, {"message", e.what()}}}};
    std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    if (o.format == "json") std::cout << err.dump(2) << "\n";
    return 2;
  }
}
