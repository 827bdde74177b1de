#include <doctest.h>

#include <algorithm>

#include "gen.hpp"
#include "strang/projective.hpp"
#include "strang/representation.hpp"

using namespace strang;

namespace {

std::array<std::size_t, 2> vertex_counts(const Word& w) {
  std::array<std::size_t, 2> n{0, 0};
  for (std::size_t j = 0; j <= w.size(); ++j) ++n[static_cast<std::size_t>(w.vertex_at(j))];
  return n;
}

}  // namespace

TEST_CASE("string module examples") {
  const AlgebraSpec s(2, 0, 3);
  const Field f = Field::gf(1);
  const auto s0 = string_module(Word::empty(0), s, f);
  CHECK(s0.dims == std::array<std::size_t, 2>{1, 0});
  for (int a = 0; a < s.num_arrows(); ++a) CHECK(s0.arrow(a).is_zero());

  const auto m = string_module(parse_word("ba", s), s, f);
  CHECK(m.dims == std::array<std::size_t, 2>{2, 1});
  CHECK(radical_length(m) == 3);
  CHECK(top_dims(m) == std::array<std::size_t, 2>{1, 0});
  CHECK(socle_dims(m) == std::array<std::size_t, 2>{0, 1});
  CHECK(top_dims(radical(m)) == std::array<std::size_t, 2>{1, 0});

  const auto g = string_module(parse_word("g", s), s, f);
  CHECK(g.dims == std::array<std::size_t, 2>{1, 1});
  CHECK(top_dims(g) == std::array<std::size_t, 2>{0, 1});
}

TEST_CASE("band module examples") {
  const AlgebraSpec s(2, 1, 3);
  const Field f = Field::gf(2);
  const Word b = parse_word("aBG", s);
  const auto m1 = band_module(b, 2, 1, s, f);
  CHECK(m1.dims == std::array<std::size_t, 2>{2, 1});
  CHECK(check_relations(m1));
  const auto m2 = band_module(b, 2, 2, s, f);
  CHECK(m2.dims == std::array<std::size_t, 2>{4, 2});
  CHECK(check_relations(m2));
  CHECK(m2.label == "M(aBG;λ=2;m=2)");
}

TEST_CASE("corrupted arrow matrix breaks the relations") {
  const AlgebraSpec s(2, 0, 3);
  const Field f = Field::gf(1);
  auto p0 = projective_module(s, f, 0).rep;
  REQUIRE(check_relations(p0));
  auto& a = p0.arrows[0];
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = 1;
  CHECK_FALSE(check_relations(p0));
}

TEST_CASE("radical and socle of a simple module vanish or fill") {
  const AlgebraSpec s(1, 0, 3);
  const Field f = Field::gf(1);
  const auto s0 = simple_module(s, f, 0);
  CHECK(radical(s0).is_zero());
  CHECK(socle(s0).dim() == 1);
}

TEST_CASE("direct sums") {
  const AlgebraSpec s(2, 0, 3);
  const Field f = Field::gf(1);
  const auto sum = direct_sum({simple_module(s, f, 0), simple_module(s, f, 1)});
  CHECK(sum.dims == std::array<std::size_t, 2>{1, 1});
  for (int a = 0; a < s.num_arrows(); ++a) CHECK(sum.arrow(a).is_zero());
  const auto p0 = projective_module(s, f, 0).rep;
  CHECK(direct_sum({p0, p0}).dims == std::array<std::size_t, 2>{8, 4});
  CHECK(direct_sum({zero_module(s, f), zero_module(s, f)}).is_zero());
}

TEST_CASE("string modules: dimension, composition factors and relations") {
  const Field f = Field::gf(2);
  for (int i : {1, 2})
    for (int c : {0, 1})
      for (int d : {3, 4}) {
        const AlgebraSpec s(i, c, d);
        for (const auto& w : enumerate(s, WordKind::strings, 10)) {
          const auto m = string_module(w, s, f);
          REQUIRE(m.dim() == w.size() + 1);
          REQUIRE(m.dims == vertex_counts(w));
          REQUIRE_MESSAGE(check_relations(m), w.str());
        }
      }
}

TEST_CASE("band modules: dimension and relations") {
  const Field f = Field::gf(2);
  for (int i : {1, 2})
    for (int c : {0, 1})
      for (int d : {3, 4}) {
        const AlgebraSpec s(i, c, d);
        for (const auto& w : enumerate(s, WordKind::bands, 8))
          for (Elem lam : f.units())
            for (std::size_t m : {1, 2}) {
              const auto rep = band_module(w, lam, m, s, f);
              REQUIRE(rep.dim() == w.size() * m);
              REQUIRE_MESSAGE(check_relations(rep), rep.label);
            }
      }
}

TEST_CASE("submodules and quotients") {
  const AlgebraSpec s(2, 0, 3);
  const Field f = Field::gf(2);
  const auto p0 = projective_module(s, f, 0).rep;
  const auto rad = radical_space(p0);
  const auto sub = submodule(p0, rad);
  CHECK(sub.sub.dim() == p0.dim() - 1);
  CHECK(check_relations(sub.sub));
  const auto q = quotient(p0, rad);
  CHECK(q.quotient.dims == std::array<std::size_t, 2>{1, 0});
  CHECK(is_intertwiner(p0, q.quotient, q.projection));
  CHECK(is_intertwiner(sub.sub, p0, sub.inclusion));
  CHECK(map_rank(f, sub.inclusion) == sub.sub.dim());
}
