#include <doctest.h>

#include <algorithm>

#include "strang/algebra.hpp"
#include "strang/projective.hpp"
#include "strang/representation.hpp"

using namespace strang;

namespace {

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_CASE("arrows and forbidden paths") {
  const AlgebraSpec s1(1, 0, 3);
  CHECK(s1.num_arrows() == 3);
  CHECK(s1.arrow(0).name == 'a');
  CHECK(s1.arrow(1).src == 0);
  CHECK(s1.arrow(1).dst == 1);
  CHECK(contains(s1.forbidden(), "gbagba"));
  CHECK(contains(s1.forbidden(), "bg"));
  CHECK(contains(s1.forbidden(), "aa"));

  const AlgebraSpec s2(2, 0, 4);
  CHECK(s2.num_arrows() == 4);
  CHECK(contains(s2.forbidden(), "hhhh"));
  for (const char* p : {"aa", "hb", "gh", "bg", "gba", "agb", "bag"}) CHECK(contains(s2.forbidden(), p));
  CHECK(s2.forbidden().size() == 8);
}

TEST_CASE("relations of the second family") {
  const AlgebraSpec s(2, 1, 3);
  bool found = false;
  for (const auto& r : s.relations()) found = found || (r.lhs == "aa" && r.coef == 1 && r.rhs == "gba");
  CHECK(found);
  for (const auto& r : AlgebraSpec(2, 0, 3).relations()) CHECK_FALSE((r.lhs == "aa" && r.coef == 1));
}

TEST_CASE("invalid parameters") {
  CHECK_THROWS_AS(AlgebraSpec(2, 0, 2), Error);
  CHECK_THROWS_AS(AlgebraSpec(3, 0, 3), Error);
  CHECK_THROWS_AS(AlgebraSpec(1, 2, 3), Error);
}

TEST_CASE("path reduction") {
  const AlgebraSpec s(2, 1, 3);
  CHECK(s.reduce("aa") == std::optional<std::string>("gba"));
  CHECK_FALSE(AlgebraSpec(2, 0, 3).reduce("aa").has_value());
  CHECK_FALSE(s.reduce("bg").has_value());
  CHECK(s.reduce("hh") == std::optional<std::string>("bag"));
  int src = -1, dst = -1;
  CHECK(s.composable("ba", &src, &dst));
  CHECK(src == 0);
  CHECK(dst == 1);
  CHECK_FALSE(s.composable("bh"));
}

TEST_CASE("projectives at d = 3") {
  const Field f = Field::gf(1);
  const AlgebraSpec s2(2, 0, 3);
  const auto p0 = projective_module(s2, f, 0);
  CHECK(p0.rep.dim() == 6);
  CHECK(p0.rep.dims == std::array<std::size_t, 2>{4, 2});
  CHECK(radical_length(p0.rep) == 4);
  const auto p1 = projective_module(s2, f, 1);
  CHECK(p1.rep.dim() == 5);
  CHECK(p1.basis.paths == std::vector<std::string>{"", "g", "h", "ag", "bag"});
  CHECK(algebra_dim(s2, f) == 11);
  CHECK(algebra_dim(AlgebraSpec(1, 0, 3), f) == 19);
}

TEST_CASE("radical lengths follow the closed formulas") {
  const Field f = Field::gf(1);
  for (int d = 3; d <= 6; ++d) {
    for (int c : {0, 1}) {
      const AlgebraSpec s1(1, c, d);
      const int n = 1 << (d - 2);
      CHECK(projective_module(s1, f, 1).rep.dim() == static_cast<std::size_t>(3 * n + 1));
      CHECK(radical_length(projective_module(s1, f, 1).rep) == static_cast<std::size_t>(3 * n + 1));
      CHECK(radical_length(projective_module(s1, f, 0).rep) == static_cast<std::size_t>(3 * n + 1));
      const AlgebraSpec s2(2, c, d);
      CHECK(radical_length(projective_module(s2, f, 1).rep) == static_cast<std::size_t>(d == 3 ? 4 : n + 1));
      for (int u : {0, 1}) {
        CHECK(radical_length(projective_module(s1, f, u).rep) == static_cast<std::size_t>(s1.expected_radical_length(u)));
        CHECK(radical_length(projective_module(s2, f, u).rep) == static_cast<std::size_t>(s2.expected_radical_length(u)));
      }
    }
  }
}

TEST_CASE("Cartan matrix is symmetric and the projectives satisfy the relations") {
  const Field f = Field::gf(2);
  for (int i : {1, 2})
    for (int c : {0, 1})
      for (int d = 3; d <= 5; ++d) {
        const AlgebraSpec s(i, c, d);
        const auto p0 = projective_module(s, f, 0).rep;
        const auto p1 = projective_module(s, f, 1).rep;
        CHECK(p0.dims[1] == p1.dims[0]);
        CHECK(check_relations(p0));
        CHECK(check_relations(p1));
        CHECK(top_dims(p0) == std::array<std::size_t, 2>{1, 0});
        CHECK(socle_dims(p1) == std::array<std::size_t, 2>{0, 1});
        for (const auto& sc : symmetric_sanity(s, f)) CHECK_MESSAGE(sc.pass, sc.id);
      }
}

TEST_CASE("socle path") {
  const AlgebraSpec s(2, 0, 3);
  CHECK(s.socle_path(1) == "bag");
  CHECK(s.n() == 2);
}
