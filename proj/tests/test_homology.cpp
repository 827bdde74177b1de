#include <doctest.h>

#include "gen.hpp"
#include "strang/homology.hpp"
#include "strang/projective.hpp"

using namespace strang;

namespace {

Representation str(const char* w, const AlgebraSpec& s, const Field& f) { return string_module(parse_word(w, s), s, f); }

Representation s_lambda(Elem lam, const AlgebraSpec& s, const Field& f) {
  const Word c010 = named_family("C_010", 0, s);
  if (lam == 0) return string_module(c010, s, f);
  return band_module(parse_word("a" + c010.str(), s), lam, 1, s, f);
}

}  // namespace

TEST_CASE("hom dimensions") {
  const AlgebraSpec s(2, 0, 3);
  const Field f = Field::gf(1);
  const auto s0 = simple_module(s, f, 0), s1 = simple_module(s, f, 1);
  CHECK(hom_dim(s0, s0) == 1);
  CHECK(hom_dim(s0, s1) == 0);
  CHECK(hom_dim(projective_module(s, f, 0).rep, str("ba", s, f)) == 2);
  const Field f4 = Field::gf(2);
  for (int c : {0, 1}) CHECK(hom_dim(s_lambda(2, AlgebraSpec(2, c, 3), f4), s_lambda(2, AlgebraSpec(2, c, 3), f4)) == 2);
}

TEST_CASE("hom basis elements are intertwiners") {
  const AlgebraSpec s(1, 1, 3);
  const Field f = Field::gf(2);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = string_module(gen::string_word(s, gen::below(7)), s, f);
    const auto n = string_module(gen::string_word(s, gen::below(7)), s, f);
    const auto hs = hom_space(m, n);
    for (const auto& g : hs.basis) REQUIRE(is_intertwiner(m, n, g));
    const auto st = phom_and_stable(m, n);
    REQUIRE(st.hom == hs.dim());
    REQUIRE(st.phom + st.stable == st.hom);
  }
}

TEST_CASE("stable endomorphisms") {
  const Field f = Field::gf(2);
  const AlgebraSpec s(2, 1, 3);
  CHECK(stable_end_dim(simple_module(s, f, 0)) == 1);
  CHECK(stable_end_dim(band_module(parse_word("aBG", s), 2, 2, s, f)) >= 2);
  const auto p0 = projective_module(s, f, 0).rep;
  for (const char* w : {"ba", "1_1", "aBG", "hGA"}) CHECK(phom_and_stable(p0, str(w, s, f)).stable == 0);
}

TEST_CASE("covers and hulls") {
  const AlgebraSpec s(2, 0, 3);
  const Field f = Field::gf(1);
  const auto c0 = projective_cover(simple_module(s, f, 0));
  CHECK(c0.mult == std::array<std::size_t, 2>{1, 0});
  CHECK(projective_cover(str("ba", s, f)).mult == std::array<std::size_t, 2>{1, 0});
  CHECK(injective_hull(simple_module(s, f, 1)).mult == std::array<std::size_t, 2>{0, 1});
  CHECK_THROWS_AS(projective_cover(zero_module(s, f)), Error);
}

TEST_CASE("syzygy identities") {
  const Field f4 = Field::gf(2);
  const AlgebraSpec s(2, 0, 3);
  CHECK(is_isomorphic(syzygy_power(str("ba", s, f4), -2), str("ag", s, f4)));
  for (Elem lam : f4.units()) {
    CHECK(is_isomorphic(syzygy(s_lambda(lam, AlgebraSpec(2, 0, 3), f4)), s_lambda(lam, AlgebraSpec(2, 0, 3), f4)));
    const AlgebraSpec s1(2, 1, 3);
    CHECK(is_isomorphic(syzygy(s_lambda(lam, s1, f4)), s_lambda(Field::add(lam, 1), s1, f4)));
  }
  const auto om = syzygy(simple_module(s, f4, 0));
  CHECK(om.dim() == 5);
  const auto r = recognize(om, 8);
  REQUIRE(r.pieces.size() == 1);
  CHECK(r.pieces[0].kind == Piece::Kind::string);
  CHECK(r.pieces[0].word.size() == 4);
}

TEST_CASE("Ext^1 values") {
  const Field f = Field::gf(1);
  const AlgebraSpec s0(2, 0, 3), s1(2, 1, 3);
  CHECK(ext1_dim(simple_module(s0, f, 1), simple_module(s0, f, 1)) == 1);
  CHECK(ext1_dim(str("ba", s0, f), str("ba", s0, f)) == 0);
  CHECK(ext1_dim(simple_module(s1, f, 0), simple_module(s1, f, 0)) == 1);
}

TEST_CASE("isomorphism tests") {
  const AlgebraSpec s(2, 0, 3);
  const Field f = Field::gf(1);
  const auto m = str("ba", s, f);
  CHECK(is_isomorphic(m, m));
  CHECK_FALSE(is_isomorphic(simple_module(s, f, 0), simple_module(s, f, 1)));
  CHECK(is_isomorphic(m, str("AB", s, f)));
  CHECK_FALSE(is_isomorphic(str("aBG", s, f), band_module(parse_word("aBG", s), 1, 1, s, f)));
}

TEST_CASE("recognition") {
  const AlgebraSpec s(2, 1, 3);
  const Field f = Field::gf(2);
  const auto p0 = projective_module(s, f, 0).rep;
  const auto r = recognize(direct_sum({p0, simple_module(s, f, 0)}), 8);
  CHECK(r.projectives == std::array<std::size_t, 2>{1, 0});
  REQUIRE(r.pieces.size() == 1);
  CHECK(r.pieces[0].word.str() == "1_0");
  const auto rb = recognize(band_module(parse_word("aBG", s), 3, 1, s, f), 8);
  REQUIRE(rb.pieces.size() == 1);
  CHECK(rb.pieces[0].kind == Piece::Kind::band);
  CHECK(rb.pieces[0].word.str() == "aBG");
  CHECK(rb.pieces[0].lambda == 3);
  CHECK(rb.pieces[0].multiplicity == 1);
}

TEST_CASE("the six uniserials are the bricks among short strings and bands") {
  const Field f = Field::gf(2);
  for (int c : {0, 1}) {
    const AlgebraSpec s(2, c, 3);
    const std::vector<std::string> bricks{"1_0", "1_1", "b", "g", "ba", "ag"};
    for (const auto& w : enumerate(s, WordKind::strings, 8)) {
      const bool brick = std::find(bricks.begin(), bricks.end(), w.str()) != bricks.end();
      const auto e = hom_dim(string_module(w, s, f), string_module(w, s, f));
      if (brick) {
        REQUIRE(e == 1);
      } else {
        REQUIRE_MESSAGE(e >= 2, w.str());
      }
    }
  }
}

TEST_CASE("projective hom dimension equals the vertex dimension") {
  const Field f = Field::gf(2);
  for (int i : {1, 2}) {
    const AlgebraSpec s(i, 1, 3);
    const auto p0 = projective_module(s, f, 0).rep, p1 = projective_module(s, f, 1).rep;
    for (int trial = 0; trial < 30; ++trial) {
      const auto m = string_module(gen::string_word(s, gen::below(9)), s, f);
      REQUIRE(hom_dim(p0, m) == m.dims[0]);
      REQUIRE(hom_dim(p1, m) == m.dims[1]);
    }
  }
}

TEST_CASE("syzygy and cosyzygy are inverse on strings") {
  const Field f = Field::gf(1);
  for (int i : {1, 2})
    for (int c : {0, 1}) {
      const AlgebraSpec s(i, c, 3);
      for (const auto& w : enumerate(s, WordKind::strings, 8)) {
        const auto m = string_module(w, s, f);
        if (projective_multiplicities(m) != std::array<std::size_t, 2>{0, 0}) continue;
        REQUIRE_MESSAGE(is_isomorphic(cosyzygy(syzygy(m)), m), w.str());
        REQUIRE_MESSAGE(is_isomorphic(syzygy(cosyzygy(m)), m), w.str());
      }
    }
}

TEST_CASE("stable End and Ext^1 are syzygy invariant") {
  const Field f = Field::gf(1);
  for (int i : {1, 2})
    for (int c : {0, 1}) {
      const AlgebraSpec s(i, c, 3);
      for (const auto& w : enumerate(s, WordKind::strings, 6)) {
        const auto m = string_module(w, s, f);
        if (projective_multiplicities(m) != std::array<std::size_t, 2>{0, 0}) continue;
        const auto om = syzygy(m);
        REQUIRE_MESSAGE(stable_end_dim(m) == stable_end_dim(om), w.str());
        REQUIRE_MESSAGE(ext1_dim(m, m) == ext1_dim(om, om), w.str());
      }
    }
}

TEST_CASE("decomposition of a direct sum") {
  const AlgebraSpec s(1, 0, 3);
  const Field f = Field::gf(2);
  const auto m = direct_sum({str("ba", s, f), str("g", s, f), band_module(parse_word("aBG", s), 2, 1, s, f)});
  const auto r = recognize(m, 8);
  CHECK(r.pieces.size() == 3);
  CHECK(r.projectives == std::array<std::size_t, 2>{0, 0});
}
