#include <doctest.h>

#include <set>

#include "strang/arquiver.hpp"
#include "strang/krause.hpp"

using namespace strang;

namespace {

bool extends(const Word& w, const Letter& l, bool on_left, const AlgebraSpec& s) {
  std::vector<Letter> ls = w.letters();
  if (on_left) {
    if (l.src() != w.dst()) return false;
    ls.insert(ls.begin(), l);
  } else {
    if (l.dst() != w.src()) return false;
    ls.push_back(l);
  }
  return is_string(Word::from_letters(ls), s);
}

Piece string_piece(const Word& w) {
  Piece p;
  p.word = w;
  return p;
}

}  // namespace

TEST_CASE("hook sets are maximal directed strings") {
  for (int i : {1, 2})
    for (int d : {3, 4}) {
      const AlgebraSpec s(i, 0, d);
      const auto hs = hook_sets(s);
      REQUIRE(hs.size() == 4);
      for (const auto& m : hs) {
        REQUIRE(is_string(m, s));
        if (m.is_empty()) continue;
        REQUIRE(m.all_direct());
        for (int a = 0; a < s.num_arrows(); ++a)
          for (bool left : {true, false}) REQUIRE_FALSE(extends(m, {a, false}, left, s));
      }
    }
  const AlgebraSpec s2(2, 0, 3);
  std::set<std::string> got;
  for (const auto& m : hook_sets(s2)) got.insert(m.str());
  CHECK(got == std::set<std::string>{"gb", "ba", "ag", "h"});
  std::set<std::string> got1;
  for (const auto& m : hook_sets(AlgebraSpec(1, 0, 3))) got1.insert(m.str());
  CHECK(got1 == std::set<std::string>{"bagba", "gbagb", "agbag", "1_1"});
}

TEST_CASE("peak and deep flags") {
  const AlgebraSpec s(2, 0, 3);
  const auto pd = peak_deep_status(Word::empty(1, +1), s);
  CHECK_FALSE(pd.starts_on_peak);
  CHECK_FALSE(pd.ends_on_peak);
  // "baa" and "bag" both contain forbidden paths.
  const auto ba = peak_deep_status(parse_word("ba", s), s);
  CHECK(ba.starts_on_peak);
  CHECK_FALSE(ba.starts_in_deep);
  CHECK_FALSE(ba.ends_on_peak);
}

TEST_CASE("hooks") {
  const AlgebraSpec s(2, 0, 3);
  const Word b = parse_word("b", s);
  const Word h = add_hook(b, Side::right, s);
  REQUIRE(h.size() >= 2);
  CHECK(h[1] == Letter{1, false});
  CHECK(h[2] == Letter{0, false});
  CHECK(is_string(h, s));

  const Word plus = add_hook(Word::empty(1, +1), Side::right, s);
  const Word minus = add_hook(Word::empty(1, -1), Side::right, s);
  CHECK(is_string(plus, s));
  CHECK(is_string(minus, s));
  CHECK(plus != minus);
}

TEST_CASE("hooks and cohooks extend the word on the requested side") {
  for (int i : {1, 2}) {
    const AlgebraSpec s(i, 1, 3);
    std::size_t tested = 0;
    for (const auto& w : enumerate(s, WordKind::strings, 6)) {
      if (w.is_empty()) continue;
      const auto st = peak_deep_status(w, s);
      for (Side side : {Side::left, Side::right}) {
        const bool right = side == Side::right;
        const bool in_deep = right ? st.starts_in_deep : st.ends_in_deep;
        const bool on_peak = right ? st.starts_on_peak : st.ends_on_peak;
        for (bool hook : {true, false}) {
          const bool blocked = hook ? on_peak : in_deep;
          if (blocked) {
            CHECK_THROWS_AS(hook ? add_hook(w, side, s) : add_cohook(w, side, s), Error);
            continue;
          }
          const Word x = hook ? add_hook(w, side, s) : add_cohook(w, side, s);
          REQUIRE(is_string(x, s));
          REQUIRE(x.size() > w.size());
          const Word kept = right ? x.sub(1, w.size()) : x.sub(x.size() - w.size() + 1, w.size());
          REQUIRE(kept == w);
          const Letter join = right ? x[w.size() + 1] : x[x.size() - w.size()];
          REQUIRE(join.inverse == (hook ? !right : right));
          ++tested;
        }
      }
    }
    CHECK(tested > 10);
  }
}

TEST_CASE("successor and predecessor lists are mutually consistent") {
  const Field f = Field::gf(1);
  for (int i : {1, 2}) {
    const AlgebraSpec s(i, 0, 3);
    for (const auto& w : enumerate(s, WordKind::strings, 5)) {
      const auto m = string_module(w, s, f);
      if (projective_multiplicities(m) != std::array<std::size_t, 2>{0, 0}) continue;
      const std::string self = canonical_piece(string_piece(w), f).label();
      for (const auto& n : ar_neighbors(string_piece(w), s, f)) {
        if (n.piece.kind != Piece::Kind::string) continue;
        if (projective_multiplicities(build_piece(n.piece, s, f)) != std::array<std::size_t, 2>{0, 0}) continue;
        bool back = false;
        for (const auto& b : ar_neighbors(n.piece, s, f))
          back = back || (b.direction != n.direction && canonical_piece(b.piece, f).label() == self);
        REQUIRE_MESSAGE(back, (self + " / " + n.label()));
      }
    }
  }
}

TEST_CASE("neighbours of S_0 reach C(1) up to syzygy") {
  const AlgebraSpec s(2, 0, 3);
  const Field f = Field::gf(2);
  const auto nb = ar_neighbors(string_piece(Word::empty(0)), s, f);
  REQUIRE_FALSE(nb.empty());
  const auto c1 = string_module(named_family("C", 1, s), s, f);
  bool found = false;
  for (const auto& n : nb) {
    const auto m = build_piece(n.piece, s, f);
    for (int k = -2; k <= 2 && !found; ++k) found = is_isomorphic(syzygy_power(m, k), c1);
  }
  CHECK(found);
  const auto again = ar_neighbors(string_piece(Word::empty(0)), s, f);
  REQUIRE(again.size() == nb.size());
  for (std::size_t j = 0; j < nb.size(); ++j) CHECK(again[j].label() == nb[j].label());
}

TEST_CASE("irreducible maps are injective or surjective") {
  const Field f = Field::gf(1);
  for (int i : {1, 2}) {
    const AlgebraSpec s(i, 0, 3);
    for (const auto& w : enumerate(s, WordKind::strings, 5)) {
      const auto m = string_module(w, s, f);
      if (projective_multiplicities(m) != std::array<std::size_t, 2>{0, 0}) continue;
      for (const auto& n : ar_neighbors(string_piece(w), s, f)) {
        if (n.piece.kind != Piece::Kind::string) continue;
        const bool succ = n.direction == Direction::successor;
        const Word& from = succ ? w : n.piece.word;
        const Word& to = succ ? n.piece.word : w;
        const auto g = canonical_map(from, to, s, f);
        const auto mf = string_module(from, s, f), mt = string_module(to, s, f);
        REQUIRE(is_intertwiner(mf, mt, g));
        const auto r = map_rank(f, g);
        if (n.kind == EdgeKind::hook_inclusion) {
          REQUIRE(r == mf.dim());
        } else {
          REQUIRE(r == mt.dim());
        }
      }
    }
  }
}

TEST_CASE("components") {
  const Field f = Field::gf(2);
  const AlgebraSpec s(2, 0, 3);
  const auto tube = grow_component(string_piece(named_family("S_001", 0, s)), s, f, 4);
  CHECK(tube.classification() == "tube(rank 3)");
  CHECK(tube.tau_closed);

  Piece band;
  band.kind = Piece::Kind::band;
  band.word = parse_word("aBG", s);
  band.lambda = 2;
  const auto one = grow_component(band, s, f, 2);
  CHECK(one.classification() == "tube(rank 1)");

  const auto za = grow_component(string_piece(Word::empty(0)), s, f, 2);
  CHECK(za.classification() == "ZA-infinity-infinity");
  CHECK(za.tau_closed);
  for (int n : {1, 2}) {
    const auto cn = string_module(named_family("C", n, s), s, f);
    bool found = false;
    for (const auto& node : za.nodes) found = found || is_isomorphic(build_piece(node.piece, s, f), cn);
    CHECK(found);
  }
  const std::string dot = to_dot(za);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("style=dashed") != std::string::npos);
}

TEST_CASE("tau permutes the nodes of a tube") {
  const Field f = Field::gf(2);
  const AlgebraSpec s(1, 1, 3);
  const auto g = grow_component(string_piece(named_family("Y", 0, s)), s, f, 4);
  REQUIRE(g.is_tube());
  std::set<std::size_t> images;
  std::size_t mapped = 0;
  for (const auto& n : g.nodes) {
    if (!n.tau) continue;
    ++mapped;
    images.insert(*n.tau);
    CHECK(is_isomorphic(syzygy_power(build_piece(n.piece, s, f), 2), build_piece(g.nodes[*n.tau].piece, s, f)));
  }
  CHECK(images.size() == mapped);
}

TEST_CASE("omega periods") {
  const Field f = Field::gf(2);
  for (int i : {1, 2}) {
    const AlgebraSpec s(i, 0, 3);
    CHECK(omega_period(string_module(named_family("Y", 0, s), s, f), 6) == std::optional<std::size_t>(3));
    CHECK_FALSE(omega_period(simple_module(s, f, 0), 6).has_value());
  }
  const AlgebraSpec s1(2, 1, 3);
  const auto band = band_module(parse_word("a" + named_family("C_010", 0, s1).str(), s1), 2, 1, s1, f);
  CHECK(omega_period(band, 6) == std::optional<std::size_t>(2));
  const AlgebraSpec s0(2, 0, 3);
  const auto band0 = band_module(parse_word("a" + named_family("C_010", 0, s0).str(), s0), 2, 1, s0, f);
  CHECK(omega_period(band0, 6) == std::optional<std::size_t>(1));
}
