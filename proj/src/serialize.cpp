#include "strang/serialize.hpp"

#include <sstream>

namespace strang {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error("bad-json", what); }

template <class T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("field '") + key + "': " + e.what());
  }
}

Json matrix_rows(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from(const Json& j, std::size_t rows, std::size_t cols, const Field& f) {
  if (!j.is_array() || j.size() != rows) bad("matrix must have " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) bad("matrix row must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      const unsigned v = j[r][c].get<unsigned>();
      if (!f.valid(v)) bad("entry " + std::to_string(v) + " outside " + f.name());
      m(r, c) = static_cast<Elem>(v);
    }
  }
  return m;
}

std::string check_status(CheckStatus s) { return to_string(s); }

CheckStatus status_from(const std::string& s) {
  if (s == "pass") return CheckStatus::pass;
  if (s == "fail") return CheckStatus::fail;
  if (s == "skip") return CheckStatus::skip;
  bad("unknown status '" + s + "'");
}

}  // namespace

std::string to_string(RepKind k) {
  switch (k) {
    case RepKind::string: return "string";
    case RepKind::band: return "band";
    case RepKind::projective: return "projective";
    case RepKind::derived: return "derived";
  }
  return "derived";
}

RepKind rep_kind_from_string(const std::string& s) {
  if (s == "string") return RepKind::string;
  if (s == "band") return RepKind::band;
  if (s == "projective") return RepKind::projective;
  if (s == "derived") return RepKind::derived;
  bad("unknown module kind '" + s + "'");
}

Json to_json(const Field& f) { return Json{{"degree", f.degree()}, {"modulus", f.modulus()}}; }

Json to_json(const AlgebraSpec& s) {
  Json arrows = Json::array();
  for (int a = 0; a < s.num_arrows(); ++a) {
    const auto& ar = s.arrow(a);
    arrows.push_back(Json{{"name", std::string(1, ar.name)}, {"src", ar.src}, {"dst", ar.dst}});
  }
  Json relations = Json::array();
  for (const auto& r : s.relations()) relations.push_back(Json{{"lhs", r.lhs}, {"coef", r.coef}, {"rhs", r.rhs}});
  return Json{{"family", s.family()}, {"c", s.c()},          {"d", s.d()},
              {"arrows", arrows},     {"forbidden", s.forbidden()}, {"relations", relations}};
}

Json to_json(const Representation& r) {
  Json arrows = Json::object();
  for (int a = 0; a < r.spec.num_arrows(); ++a) arrows[std::string(1, kArrows[static_cast<std::size_t>(a)].name)] =
      matrix_rows(r.arrow(a));
  Json j{{"field", to_json(r.field)},
         {"algebra", to_json(r.spec)},
         {"label", r.label},
         {"kind", to_string(r.kind)},
         {"indecomposable", r.indecomposable},
         {"dims", {r.dims[0], r.dims[1]}},
         {"arrows", arrows}};
  if (!r.basis_labels[0].empty() || !r.basis_labels[1].empty()) j["basis_labels"] = Json::array({Json(r.basis_labels[0]), Json(r.basis_labels[1])});
  return j;
}

Json to_json(const Word& w) { return w.str(true); }

Json to_json(const Recognition& r) {
  Json pieces = Json::array();
  for (const auto& p : r.pieces) {
    Json pj{{"kind", p.kind == Piece::Kind::string ? "string" : "band"}, {"word", p.word.str()}};
    if (p.kind == Piece::Kind::band) {
      pj["lambda"] = p.lambda;
      pj["multiplicity"] = p.multiplicity;
    }
    pj["label"] = p.label();
    pieces.push_back(std::move(pj));
  }
  return Json{{"label", r.label()}, {"projectives", {r.projectives[0], r.projectives[1]}}, {"pieces", pieces}};
}

Json to_json(const ARComponentGraph& g) {
  Json nodes = Json::array();
  for (const auto& n : g.nodes) {
    Json nj{{"label", n.label}, {"dims", {n.dims[0], n.dims[1]}}, {"layer", n.layer}, {"tau", n.tau_label}};
    nj["tau_index"] = n.tau ? Json(*n.tau) : Json(nullptr);
    nodes.push_back(std::move(nj));
  }
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back(Json{{"from", e.from}, {"to", e.to}, {"kind", to_string(e.kind)}});
  Json j{{"field", to_json(g.field)},
         {"algebra", to_json(g.spec)},
         {"radius", g.radius},
         {"classification", g.classification()},
         {"tau_period", g.tau_period ? Json(*g.tau_period) : Json(nullptr)},
         {"period_bound", g.period_bound},
         {"tau_closed", g.tau_closed},
         {"nodes", nodes},
         {"edges", edges}};
  if (!g.tau_period) j["note"] = "heuristic: no τ-period up to the bound";
  return j;
}

Json to_json(const CheckReport& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj{{"id", c.id},         {"anchor", c.anchor}, {"status", check_status(c.status)}, {"observed", c.observed},
            {"expected", c.expected}, {"kind", c.kind}};
    if (!c.note.empty()) cj["note"] = c.note;
    checks.push_back(std::move(cj));
  }
  return Json{{"suite", r.suite}, {"params", params}, {"checks", checks}, {"pass", r.pass()}};
}

Json to_json(const IntPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) {
    if (boost::multiprecision::abs(c) < (BigInt(1) << 53)) {
      coeffs.push_back(static_cast<long long>(c));
    } else {
      coeffs.push_back(c.str());
    }
  }
  return Json{{"poly", p.str()}, {"degree", p.degree()}, {"coefficients", coeffs}};
}

Field field_from_json(const Json& j) {
  const auto degree = get<unsigned>(j, "degree");
  const auto modulus = get<unsigned>(j, "modulus");
  try {
    return Field(degree, modulus);
  } catch (const Error& e) {
    bad(e.what());
  }
}

AlgebraSpec spec_from_json(const Json& j) {
  try {
    return AlgebraSpec(get<int>(j, "family"), get<int>(j, "c"), get<int>(j, "d"));
  } catch (const Error& e) {
    if (e.code() == "bad-json") throw;
    bad(e.what());
  }
}

Representation representation_from_json(const Json& j) {
  Representation r(spec_from_json(get<Json>(j, "algebra")), field_from_json(get<Json>(j, "field")));
  const auto dims = get<std::vector<std::size_t>>(j, "dims");
  if (dims.size() != 2) bad("dims must have two entries");
  r.dims = {dims[0], dims[1]};
  r.label = j.value("label", std::string());
  r.kind = rep_kind_from_string(j.value("kind", std::string("derived")));
  r.indecomposable = j.value("indecomposable", false);
  const Json arrows = get<Json>(j, "arrows");
  r.reset_arrows();
  for (int a = 0; a < r.spec.num_arrows(); ++a) {
    const auto& ar = kArrows[static_cast<std::size_t>(a)];
    const std::string key(1, ar.name);
    if (!arrows.contains(key)) bad("missing arrow '" + key + "'");
    r.arrows[static_cast<std::size_t>(a)] =
        matrix_from(arrows.at(key), r.dims[static_cast<std::size_t>(ar.dst)], r.dims[static_cast<std::size_t>(ar.src)],
                    r.field);
  }
  if (j.contains("basis_labels")) {
    const auto bl = j.at("basis_labels").get<std::vector<std::vector<std::string>>>();
    if (bl.size() != 2) bad("basis_labels must have two lists");
    r.basis_labels = {bl[0], bl[1]};
  }
  return r;
}

Word word_from_json(const Json& j, const AlgebraSpec& spec) {
  if (!j.is_string()) bad("word must be a string");
  return parse_word(j.get<std::string>(), spec);
}

CheckReport report_from_json(const Json& j) {
  CheckReport r;
  r.suite = get<std::string>(j, "suite");
  const Json params = get<Json>(j, "params");
  for (const auto& [k, v] : params.items()) r.params.emplace_back(k, v.get<std::string>());
  const Json checks = get<Json>(j, "checks");
  for (const auto& c : checks) {
    Check ch;
    ch.id = get<std::string>(c, "id");
    ch.anchor = get<std::string>(c, "anchor");
    ch.status = status_from(get<std::string>(c, "status"));
    ch.observed = get<std::string>(c, "observed");
    ch.expected = get<std::string>(c, "expected");
    ch.kind = c.value("kind", std::string("claim"));
    ch.note = c.value("note", std::string());
    r.checks.push_back(std::move(ch));
  }
  return r;
}

std::string report_text(const CheckReport& r) {
  std::ostringstream os;
  os << "suite " << r.suite;
  for (const auto& [k, v] : r.params) os << " " << k << "=" << v;
  os << "\n";
  std::size_t wid = 2, wanc = 6;
  for (const auto& c : r.checks) {
    wid = std::max(wid, c.id.size());
    wanc = std::max(wanc, c.anchor.size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };
  os << pad("status", 7) << pad("id", wid + 2) << pad("anchor", wanc + 2) << "observed | expected\n";
  for (const auto& c : r.checks) {
    os << pad(to_string(c.status), 7) << pad(c.id, wid + 2) << pad(c.anchor, wanc + 2) << c.observed << " | "
       << c.expected;
    if (!c.note.empty()) os << "  (" << c.note << ")";
    os << "\n";
  }
  os << (r.pass() ? "PASS" : "FAIL") << " " << r.count(CheckStatus::pass) << " pass, " << r.count(CheckStatus::fail)
     << " fail, " << r.count(CheckStatus::skip) << " skip\n";
  return os.str();
}

}  // namespace strang
