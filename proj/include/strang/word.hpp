#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "strang/algebra.hpp"
#include "strang/field.hpp"

namespace strang {

/// A letter: an arrow or its formal inverse.
struct Letter {
  int arrow;
  bool inverse;

  /// Position in the order a<b<g<h<A<B<G<H.
  int key() const noexcept { return arrow + (inverse ? 4 : 0); }
  Letter inv() const noexcept { return {arrow, !inverse}; }
  int src() const noexcept { return inverse ? kArrows[arrow].dst : kArrows[arrow].src; }
  int dst() const noexcept { return inverse ? kArrows[arrow].src : kArrows[arrow].dst; }
  char symbol() const noexcept;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// w = w_1 ... w_n with s(w_j) = e(w_{j+1}); s(w) = s(w_n), e(w) = e(w_1).
/// An empty word 1_u additionally carries an orientation sign (+1 or -1), used only by hook
/// and cohook calculus; comparisons ignore it.
class Word {
 public:
  Word() = default;
  static Word empty(int vertex, int orientation = +1);
  /// Throws Error("non-composable") if a junction does not compose.
  static Word from_letters(std::vector<Letter> letters);

  bool is_empty() const noexcept { return letters_.empty(); }
  std::size_t size() const noexcept { return letters_.size(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  /// 1-based, as w_j.
  const Letter& operator[](std::size_t j) const noexcept { return letters_[j - 1]; }

  int src() const noexcept { return is_empty() ? vertex_ : letters_.back().src(); }
  int dst() const noexcept { return is_empty() ? vertex_ : letters_.front().dst(); }
  int orientation() const noexcept { return orientation_; }

  Word inverse() const;
  /// ρ_j: w_{j+1} ... w_n w_1 ... w_j.
  Word rotate(std::size_t j) const;
  Word power(int m) const;
  /// Concatenation this·other; throws on a non-composable junction.
  Word concat(const Word& other) const;
  /// Letters j..j+len-1 (1-based); len == 0 gives the empty word at v(j-1).
  Word sub(std::size_t j, std::size_t len) const;
  /// v(j) = e(w_{j+1}) for j < n, v(n) = s(w_n).
  int vertex_at(std::size_t j) const noexcept;

  bool all_direct() const noexcept;
  bool all_inverse() const noexcept;

  /// Text form; `oriented` appends the empty-word sign.
  std::string str(bool oriented = false) const;

  friend bool operator==(const Word& a, const Word& b) noexcept {
    return a.letters_ == b.letters_ && (!a.is_empty() || a.vertex_ == b.vertex_);
  }
  /// By length, then lexicographically on letter keys; empty words order by vertex.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept;

 private:
  std::vector<Letter> letters_;
  int vertex_ = 0;
  int orientation_ = +1;
};

/// Grammar: a b g h (direct), A B G H (inverse), "1_0", "1_1" with optional "+"/"-",
/// "(...)^n" groups, whitespace ignored. Throws Error("unknown-letter"/"non-composable"/"syntax").
Word parse_word(std::string_view text, const AlgebraSpec& spec);

/// True when no direct run of w or w^{-1} has a factor in J_i.
bool avoids_forbidden(const Word& w, const AlgebraSpec& spec);
bool is_string(const Word& w, const AlgebraSpec& spec);
bool is_band(const Word& w, const AlgebraSpec& spec);
/// Exponent bound used by the band factor scan.
int band_power_bound(const Word& w, const AlgebraSpec& spec);

Word canonical_string(const Word& w);
/// Minimal rotation of w or w^{-1}. `inverted`, if given, reports whether w^{-1} was used.
Word canonical_band(const Word& w, bool* inverted = nullptr);

enum class WordKind { strings, bands };

/// Sorted canonical representatives up to length maxlen. Empty strings appear once per vertex.
std::vector<Word> enumerate(const AlgebraSpec& spec, WordKind kind, std::size_t maxlen);

/// Words of the named families. Names: S_01 S_10 S_001 S_100 C_010 C (param n, negative allowed)
/// X Y Z Z_ext U_bar T_00. Throws Error("unknown-name").
Word named_family(std::string_view name, int param, const AlgebraSpec& spec);

}  // namespace strang
