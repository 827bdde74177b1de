#include <doctest.h>

#include "gen.hpp"
#include "strang/projective.hpp"
#include "strang/serialize.hpp"

using namespace strang;

namespace {

void round_trip(const Representation& r) {
  const Json j = to_json(r);
  const Representation back = representation_from_json(Json::parse(j.dump()));
  REQUIRE(back.spec == r.spec);
  REQUIRE(back.field == r.field);
  REQUIRE(back.dims == r.dims);
  REQUIRE(back.label == r.label);
  REQUIRE(back.kind == r.kind);
  REQUIRE(back.indecomposable == r.indecomposable);
  REQUIRE(back.basis_labels == r.basis_labels);
  REQUIRE(back.arrows.size() == r.arrows.size());
  for (std::size_t a = 0; a < r.arrows.size(); ++a) REQUIRE(back.arrows[a] == r.arrows[a]);
  REQUIRE(to_json(back).dump() == j.dump());
}

}  // namespace

TEST_CASE("representation schema") {
  const AlgebraSpec s(2, 1, 3);
  const Field f = Field::gf(2);
  const Json j = to_json(band_module(parse_word("aBG", s), 2, 1, s, f));
  CHECK(j["field"]["degree"] == 2);
  CHECK(j["field"]["modulus"] == 7);
  CHECK(j["algebra"]["family"] == 2);
  CHECK(j["algebra"]["arrows"].size() == 4);
  CHECK(j["dims"] == Json::array({2, 1}));
  CHECK(j["arrows"]["b"].size() == 1);
  CHECK(j["arrows"]["b"][0].size() == 2);
  CHECK(j["label"] == "M(aBG;λ=2;m=1)");
}

TEST_CASE("representations round-trip exactly") {
  for (const auto& f : gen::fields()) {
    for (int i : {1, 2}) {
      const AlgebraSpec s(i, static_cast<int>(gen::below(2)), 3);
      round_trip(projective_module(s, f, 0).rep);
      round_trip(projective_module(s, f, 1).rep);
      round_trip(zero_module(s, f));
      for (int trial = 0; trial < 10; ++trial) round_trip(string_module(gen::string_word(s, gen::below(9)), s, f));
      for (const auto& b : enumerate(s, WordKind::bands, 6)) round_trip(band_module(b, gen::unit(f), 2, s, f));
    }
  }
}

TEST_CASE("malformed representation JSON") {
  const AlgebraSpec s(2, 0, 3);
  const Field f = Field::gf(1);
  Json j = to_json(string_module(parse_word("ba", s), s, f));
  Json bad = j;
  bad["arrows"]["a"][0][0] = 7;
  CHECK_THROWS_AS(representation_from_json(bad), Error);
  bad = j;
  bad["arrows"].erase("h");
  CHECK_THROWS_AS(representation_from_json(bad), Error);
  bad = j;
  bad["dims"] = Json::array({1, 1});
  CHECK_THROWS_AS(representation_from_json(bad), Error);
  bad = j;
  bad.erase("algebra");
  CHECK_THROWS_AS(representation_from_json(bad), Error);
}

TEST_CASE("words round-trip") {
  for (int i : {1, 2}) {
    const AlgebraSpec s(i, 0, 3);
    for (const auto& w : enumerate(s, WordKind::strings, 6)) REQUIRE(word_from_json(to_json(w), s) == w);
    for (int o : {+1, -1}) {
      const Word e = Word::empty(1, o);
      const Word back = word_from_json(to_json(e), s);
      REQUIRE(back == e);
      REQUIRE(back.orientation() == o);
    }
  }
}

TEST_CASE("reports") {
  SuiteParams p;
  p.field = Field::gf(2);
  const auto r = suite_omega(p);
  const Json j = to_json(r);
  CHECK(j["suite"] == "omega");
  CHECK(j["pass"] == r.pass());
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("id"));
    CHECK(c.contains("anchor"));
    CHECK(c.contains("status"));
    CHECK(c.contains("observed"));
    CHECK(c.contains("expected"));
  }
  CHECK(to_json(report_from_json(j)).dump() == j.dump());
  const std::string text = report_text(r);
  for (const auto& c : r.checks) CHECK(text.find(c.anchor) != std::string::npos);
}

TEST_CASE("DOT output is well formed") {
  const AlgebraSpec s(2, 0, 3);
  const Field f = Field::gf(2);
  Piece seed;
  seed.word = Word::empty(0);
  const auto g = grow_component(seed, s, f, 2);
  const std::string dot = to_dot(g);
  CHECK(dot.rfind("digraph ", 0) == 0);
  int depth = 0;
  bool in_string = false;
  for (std::size_t k = 0; k < dot.size(); ++k) {
    const char ch = dot[k];
    if (in_string) {
      if (ch == '\\') {
        ++k;
      } else if (ch == '"') {
        in_string = false;
      } else {
        REQUIRE(ch != '\n');
      }
      continue;
    }
    if (ch == '"') in_string = true;
    if (ch == '{') ++depth;
    if (ch == '}') --depth;
    REQUIRE(depth >= 0);
  }
  CHECK_FALSE(in_string);
  CHECK(depth == 0);
  std::size_t node_lines = 0, edge_lines = 0;
  std::istringstream is(dot);
  for (std::string line; std::getline(is, line);) {
    if (line.find(" -> ") != std::string::npos) ++edge_lines;
    else if (line.find("[label=") != std::string::npos) ++node_lines;
  }
  CHECK(node_lines == g.nodes.size());
  CHECK(edge_lines >= g.edges.size());

  const Json j = to_json(g);
  CHECK(j["nodes"].size() == g.nodes.size());
  CHECK(j["classification"] == "ZA-infinity-infinity");
}

TEST_CASE("polynomials") {
  const Json j = to_json(pd(4));
  CHECK(j["poly"] == "t^3 - 2t");
  CHECK(j["coefficients"] == Json::array({0, -2, 0, 1}));
}
