#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "strang/arquiver.hpp"
#include "strang/homology.hpp"
#include "strang/krause.hpp"
#include "strang/polynomial.hpp"
#include "strang/projective.hpp"
#include "strang/serialize.hpp"
#include "strang/suites.hpp"

namespace {

using namespace strang;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  int family = 2;
  int c = 0;
  int d = 3;
  std::string field = "2";
  std::string out;
};

void add_common(CLI::App* app, Common& o) {
  app->add_option("--family", o.family, "algebra family")->check(CLI::IsMember({1, 2}));
  app->add_option("--c", o.c, "parameter c")->check(CLI::IsMember({0, 1}));
  app->add_option("--d", o.d, "defect d >= 3")->check(CLI::Range(3, 30));
  app->add_option("--field", o.field, "field size 2^e (2, 4, 8, 16, 256; also written 2^e)");
  app->add_option("--out", o.out, "output format")->check(CLI::IsMember({"json", "dot", "text"}));
}

Field parse_field(const std::string& s) {
  unsigned size = 0;
  try {
    if (auto caret = s.find('^'); caret != std::string::npos) {
      if (s.substr(0, caret) != "2") throw UsageError("field must be 2^e");
      size = 1u << std::stoul(s.substr(caret + 1));
    } else {
      size = static_cast<unsigned>(std::stoul(s));
    }
    return Field::of_size(size);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("unsupported field '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  return parts;
}

unsigned long parse_num(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const auto v = std::stoul(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("bad " + what + " '" + s + "'");
  }
}

/// A module named on the command line together with the string/band it came from, if any.
struct Described {
  Representation rep;
  std::optional<Piece> piece;
};

/// Grammar: a word (string module); "band:W:λ[:m]"; "P0" / "P1"; "S:λ" for S^{(λ)};
/// "name:NAME[:n]" for the named families.
Described describe(const std::string& text, const AlgebraSpec& spec, const Field& field) {
  try {
    if (text == "P0" || text == "P1") {
      return {projective_module(spec, field, text[1] - '0').rep, std::nullopt};
    }
    const auto parts = split(text, ':');
    Piece piece;
    if (parts.size() >= 3 && parts[0] == "band") {
      piece.kind = Piece::Kind::band;
      piece.word = parse_word(parts[1], spec);
      const auto lam = parse_num(parts[2], "lambda");
      if (lam == 0 || !field.valid(static_cast<unsigned>(lam))) throw UsageError("lambda must be a unit of " + field.name());
      piece.lambda = static_cast<Elem>(lam);
      piece.multiplicity = parts.size() > 3 ? parse_num(parts[3], "multiplicity") : 1;
      if (piece.multiplicity == 0) throw UsageError("multiplicity must be positive");
      if (!is_band(piece.word, spec)) throw UsageError("'" + parts[1] + "' is not a band");
    } else if (parts.size() == 2 && parts[0] == "S") {
      const auto lam = parse_num(parts[1], "lambda");
      if (!field.valid(static_cast<unsigned>(lam))) throw UsageError("lambda outside " + field.name());
      const Word c010 = named_family("C_010", 0, spec);
      if (lam == 0) {
        piece.word = c010;
      } else {
        piece.kind = Piece::Kind::band;
        piece.word = parse_word("a" + c010.str(), spec);
        piece.lambda = static_cast<Elem>(lam);
      }
    } else if (parts.size() >= 2 && parts[0] == "name") {
      int param = 0;
      if (parts.size() > 2) {
        try {
          param = std::stoi(parts[2]);
        } catch (const std::exception&) {
          throw UsageError("bad parameter '" + parts[2] + "'");
        }
      }
      piece.word = named_family(parts[1], param, spec);
    } else {
      piece.word = parse_word(text, spec);
      if (!is_string(piece.word, spec)) throw UsageError("'" + text + "' is not a string");
    }
    return {build_piece(piece, spec, field), piece};
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::string header() { return std::string("# strang ") + STRANG_VERSION + "\n"; }

std::string rep_text(const Representation& r) {
  std::ostringstream os;
  os << "module " << (r.label.empty() ? "-" : r.label) << " dims " << dims_str(r.dims) << " over " << r.field.name()
     << "\n";
  for (int a = 0; a < r.spec.num_arrows(); ++a) {
    const auto& m = r.arrow(a);
    os << kArrows[static_cast<std::size_t>(a)].name << ":";
    if (m.rows() == 0 || m.cols() == 0) os << " (" << m.rows() << "x" << m.cols() << ")";
    os << "\n";
    for (std::size_t i = 0; i < m.rows() && m.cols() > 0; ++i) {
      os << " ";
      for (std::size_t j = 0; j < m.cols(); ++j) os << " " << static_cast<unsigned>(m(i, j));
      os << "\n";
    }
  }
  return os.str();
}

struct Context {
  AlgebraSpec spec;
  Field field;
  std::string out;
};

Context context(const Common& o, const std::string& default_out, std::initializer_list<const char*> allowed) {
  Context ctx{AlgebraSpec(o.family, o.c, o.d), parse_field(o.field), o.out.empty() ? default_out : o.out};
  bool ok = false;
  for (const char* a : allowed) ok = ok || ctx.out == a;
  if (!ok) throw UsageError("--out " + ctx.out + " is not available for this command");
  return ctx;
}

void emit_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_enum(const Common& o, const std::string& kind, std::size_t maxlen) {
  const auto ctx = context(o, "text", {"json", "text"});
  const auto words = enumerate(ctx.spec, kind == "bands" ? WordKind::bands : WordKind::strings, maxlen);
  if (ctx.out == "json") {
    Json arr = Json::array();
    for (const auto& w : words) arr.push_back(to_json(w));
    emit_json(Json{{"algebra", to_json(ctx.spec)}, {"kind", kind}, {"maxlen", maxlen}, {"words", arr}});
  } else {
    std::cout << header() << kind << " of " << ctx.spec.name() << " up to length " << maxlen << ": " << words.size()
              << "\n";
    for (const auto& w : words) std::cout << w.str(true) << "\n";
  }
  return kOk;
}

int cmd_module(const Common& o, const std::string& text) {
  const auto ctx = context(o, "json", {"json", "text"});
  const auto m = describe(text, ctx.spec, ctx.field);
  const bool rel = check_relations(m.rep);
  if (ctx.out == "json") {
    Json j = to_json(m.rep);
    j["relations_hold"] = rel;
    emit_json(j);
  } else {
    std::cout << header() << rep_text(m.rep) << "relations hold: " << (rel ? "true" : "false") << "\n";
  }
  return rel ? kOk : kCheckFailed;
}

int cmd_hom(const Common& o, const std::string& t1, const std::string& t2, bool ext) {
  const auto ctx = context(o, "text", {"json", "text"});
  const auto m = describe(t1, ctx.spec, ctx.field);
  const auto n = describe(t2, ctx.spec, ctx.field);
  Json j{{"algebra", to_json(ctx.spec)}, {"field", to_json(ctx.field)}, {"source", m.rep.label}, {"target", n.rep.label}};
  if (ext) {
    j["ext1"] = ext1_dim(m.rep, n.rep);
  } else {
    const auto st = phom_and_stable(m.rep, n.rep);
    j["hom"] = st.hom;
    j["phom"] = st.phom;
    j["stable_hom"] = st.stable;
    if (m.piece && n.piece && m.piece->kind == Piece::Kind::string && n.piece->kind == Piece::Kind::string) {
      j["krause_hom"] = krause_hom_dim(m.piece->word, n.piece->word, ctx.spec);
    }
  }
  if (ctx.out == "json") {
    emit_json(j);
  } else {
    std::cout << header();
    for (const auto& [k, v] : j.items()) {
      if (k == "algebra" || k == "field") continue;
      std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
  if (j.contains("krause_hom") && j["krause_hom"] != j["hom"]) return kCheckFailed;
  return kOk;
}

int cmd_omega(const Common& o, const std::string& text, int power) {
  const auto ctx = context(o, "text", {"json", "text"});
  const auto m = describe(text, ctx.spec, ctx.field);
  const Representation om = syzygy_power(m.rep, power);
  const auto iso = is_isomorphic_detail(om, m.rep);
  std::string label;
  try {
    label = recognize(om, std::max<std::size_t>(om.dim(), 1)).label();
  } catch (const Error& e) {
    label = std::string("unrecognized (") + e.what() + ")";
  }
  if (ctx.out == "json") {
    emit_json(Json{{"algebra", to_json(ctx.spec)},
                   {"field", to_json(ctx.field)},
                   {"input", m.rep.label},
                   {"power", power},
                   {"result", label},
                   {"dims", {om.dims[0], om.dims[1]}},
                   {"isomorphic_to_input", iso.iso},
                   {"iso_mode", to_string(iso.mode)}});
  } else {
    std::cout << header() << "input: " << m.rep.label << "\n"
              << "Omega^" << power << ": " << label << " dims " << dims_str(om.dims) << "\n"
              << "isomorphic to input: " << (iso.iso ? "true" : "false") << "\n";
  }
  return kOk;
}

int cmd_ar(const Common& o, const std::string& text, std::size_t radius) {
  const auto ctx = context(o, "dot", {"json", "dot", "text"});
  const auto m = describe(text, ctx.spec, ctx.field);
  if (!m.piece) throw UsageError("the seed must be a string or band module");
  const auto g = grow_component(*m.piece, ctx.spec, ctx.field, radius);
  if (ctx.out == "json") {
    emit_json(to_json(g));
  } else if (ctx.out == "dot") {
    std::cout << header() << to_dot(g);
  } else {
    std::cout << header() << "component of " << m.piece->label() << " radius " << radius << ": "
              << g.classification() << (g.tau_period ? "" : " (heuristic)") << ", " << g.nodes.size() << " nodes, "
              << g.edges.size() << " edges, tau-closed " << (g.tau_closed ? "true" : "false") << "\n";
    for (const auto& n : g.nodes) std::cout << "  [" << n.layer << "] " << n.label << " tau " << n.tau_label << "\n";
  }
  return kOk;
}

int cmd_pd(const Common& o, int d) {
  const auto ctx = context(o, "text", {"json", "text"});
  const IntPoly p = pd(d);
  if (ctx.out == "json") {
    Json j = to_json(p);
    j["d"] = d;
    j["mod2_quotient_dim"] = mod2_quotient_dim(d);
    emit_json(j);
  } else {
    std::cout << header() << "p_" << d << "(t) = " << p.str() << "\n"
              << "coefficients " << p.coeff_list() << "\n"
              << "mod-2 quotient dimension " << mod2_quotient_dim(d) << "\n";
  }
  return kOk;
}

struct VerifyOpts {
  std::string suite;
  bool all = false;
  bool corrupt = false;
  std::size_t maxlen = 8;
  std::size_t nmax = 1;
  std::optional<unsigned> lambda;
  int dmax = 12;
  bool maxlen_given = false;
};

int cmd_verify(const Common& o, const VerifyOpts& v) {
  const auto ctx = context(o, "json", {"json", "text"});
  if (v.all == !v.suite.empty()) throw UsageError("give exactly one of --suite and --all");
  std::vector<CheckReport> reports;
  if (v.all) {
    reports = v.maxlen_given ? run_all(v.maxlen) : run_all();
  } else {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), v.suite) == names.end()) throw UsageError("unknown suite '" + v.suite + "'");
    SuiteParams p;
    p.family = ctx.spec.family();
    p.c = ctx.spec.c();
    p.d = ctx.spec.d();
    p.field = ctx.field;
    p.maxlen = v.maxlen;
    p.nmax = v.nmax;
    p.corrupt = v.corrupt;
    if (v.suite == "towers" && v.lambda) {
      if (*v.lambda == 0 || !ctx.field.valid(*v.lambda)) throw UsageError("lambda must be a unit of " + ctx.field.name());
      reports.push_back(suite_towers(p, static_cast<Elem>(*v.lambda)));
    } else if (v.suite == "pd") {
      reports.push_back(suite_pd(v.dmax));
    } else {
      reports.push_back(run_suite(v.suite, p));
    }
  }
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass();
  if (ctx.out == "json") {
    if (reports.size() == 1) {
      emit_json(to_json(reports.front()));
    } else {
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      emit_json(Json{{"reports", arr}, {"pass", pass}});
    }
  } else {
    std::cout << header();
    for (const auto& r : reports) std::cout << report_text(r) << "\n";
    std::cout << (pass ? "PASS" : "FAIL") << " " << reports.size() << " report(s)\n";
  }
  return pass ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"String and band modules over the dihedral-block algebras", "strang"};
  app.set_version_flag("--version", std::string("strang ") + STRANG_VERSION);
  app.require_subcommand(1);

  Common common;
  std::string kind = "strings", module, module2, word, word2;
  std::size_t maxlen = 6, radius = 2;
  int power = 1;
  VerifyOpts vopts;

  auto* enum_cmd = app.add_subcommand("enum", "list canonical strings or bands");
  add_common(enum_cmd, common);
  enum_cmd->add_option("--kind", kind)->check(CLI::IsMember({"strings", "bands"}));
  enum_cmd->add_option("--maxlen", maxlen);

  auto* module_cmd = app.add_subcommand("module", "build a module and check the relations");
  add_common(module_cmd, common);
  module_cmd->add_option("--module,--word", module, "module: word | band:W:λ[:m] | P0 | P1 | S:λ | name:NAME[:n]")
      ->required();

  auto* hom_cmd = app.add_subcommand("hom", "Hom, PHom and stable Hom dimensions");
  auto* ext_cmd = app.add_subcommand("ext", "Ext^1 dimension");
  for (auto* c : {hom_cmd, ext_cmd}) {
    add_common(c, common);
    c->add_option("--module,--word", module, "source module")->required();
    c->add_option("--module2,--word2", module2, "target module")->required();
  }

  auto* omega_cmd = app.add_subcommand("omega", "syzygies and the comparison with the input");
  add_common(omega_cmd, common);
  omega_cmd->add_option("--module,--word", module, "module")->required();
  omega_cmd->add_option("--power", power, "k in Omega^k (negative for cosyzygies)")->check(CLI::Range(-64, 64));

  auto* ar_cmd = app.add_subcommand("ar", "grow a stable AR component");
  add_common(ar_cmd, common);
  ar_cmd->add_option("--seed,--module,--word", module, "string or band seed")->required();
  ar_cmd->add_option("--radius", radius)->check(CLI::Range(0, 8));

  auto* pd_cmd = app.add_subcommand("pd", "the polynomial p_d");
  add_common(pd_cmd, common);
  pd_cmd->get_option("--d")->description("d >= 3");

  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  add_common(verify_cmd, common);
  verify_cmd->add_option("--suite", vopts.suite, "suite name");
  verify_cmd->add_flag("--all", vopts.all, "every suite over the standard parameter matrix");
  verify_cmd->add_flag("--corrupt", vopts.corrupt, "build modules over the algebra with c flipped");
  verify_cmd->add_option("--maxlen", vopts.maxlen)->check(CLI::Range(1, 16));
  verify_cmd->add_option("--nmax", vopts.nmax)->check(CLI::Range(1, 8));
  verify_cmd->add_option("--lambda", vopts.lambda, "tower eigenvalue");
  verify_cmd->add_option("--dmax", vopts.dmax, "largest d for the pd suite")->check(CLI::Range(3, 16));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (enum_cmd->parsed()) return cmd_enum(common, kind, maxlen);
    if (module_cmd->parsed()) return cmd_module(common, module);
    if (hom_cmd->parsed()) return cmd_hom(common, module, module2, false);
    if (ext_cmd->parsed()) return cmd_hom(common, module, module2, true);
    if (omega_cmd->parsed()) return cmd_omega(common, module, power);
    if (ar_cmd->parsed()) return cmd_ar(common, module, radius);
    if (pd_cmd->parsed()) return cmd_pd(common, common.d);
    if (verify_cmd->parsed()) {
      vopts.maxlen_given = verify_cmd->count("--maxlen") > 0;
      return cmd_verify(common, vopts);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    if (e.code() == "defect-too-small" || e.code() == "bad-spec" || e.code() == "unsupported-field") {
      std::cerr << "usage error: " << e.what() << "\n";
      return kUsage;
    }
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}
