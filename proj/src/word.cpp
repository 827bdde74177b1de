#include "strang/word.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace strang {

char Letter::symbol() const noexcept {
  const char c = kArrows[static_cast<std::size_t>(arrow)].name;
  return inverse ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c;
}

Word Word::empty(int vertex, int orientation) {
  Word w;
  w.vertex_ = vertex;
  w.orientation_ = orientation >= 0 ? +1 : -1;
  return w;
}

Word Word::from_letters(std::vector<Letter> letters) {
  for (std::size_t j = 0; j + 1 < letters.size(); ++j) {
    if (letters[j].src() != letters[j + 1].dst()) {
      throw Error("non-composable", "junction at position " + std::to_string(j + 1));
    }
  }
  Word w;
  w.letters_ = std::move(letters);
  return w;
}

Word Word::inverse() const {
  if (is_empty()) return empty(vertex_, -orientation_);
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inv());
  return w;
}

Word Word::rotate(std::size_t j) const {
  if (is_empty()) return *this;
  j %= letters_.size();
  Word w = *this;
  std::rotate(w.letters_.begin(), w.letters_.begin() + static_cast<std::ptrdiff_t>(j), w.letters_.end());
  return w;
}

Word Word::power(int m) const {
  if (is_empty() || m <= 0) return empty(dst(), orientation_);
  Word w;
  for (int k = 0; k < m; ++k) w.letters_.insert(w.letters_.end(), letters_.begin(), letters_.end());
  if (letters_.front().dst() != letters_.back().src()) throw Error("non-composable", "power of a non-cyclic word");
  return w;
}

Word Word::concat(const Word& other) const {
  if (is_empty()) {
    if (other.dst() != vertex_) throw Error("non-composable", "junction with empty word");
    return other;
  }
  if (other.is_empty()) {
    if (other.vertex_ != src()) throw Error("non-composable", "junction with empty word");
    return *this;
  }
  std::vector<Letter> all = letters_;
  all.insert(all.end(), other.letters_.begin(), other.letters_.end());
  return from_letters(std::move(all));
}

Word Word::sub(std::size_t j, std::size_t len) const {
  if (len == 0) return empty(vertex_at(j - 1));
  Word w;
  w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(j - 1),
                    letters_.begin() + static_cast<std::ptrdiff_t>(j - 1 + len));
  return w;
}

int Word::vertex_at(std::size_t j) const noexcept {
  if (is_empty()) return vertex_;
  return j < letters_.size() ? letters_[j].dst() : letters_.back().src();
}

bool Word::all_direct() const noexcept {
  return std::none_of(letters_.begin(), letters_.end(), [](const Letter& l) { return l.inverse; });
}

bool Word::all_inverse() const noexcept {
  return std::all_of(letters_.begin(), letters_.end(), [](const Letter& l) { return l.inverse; });
}

std::string Word::str(bool oriented) const {
  if (is_empty()) {
    std::string s = "1_" + std::to_string(vertex_);
    if (oriented) s += orientation_ > 0 ? "+" : "-";
    return s;
  }
  std::string s;
  s.reserve(letters_.size());
  for (const auto& l : letters_) s += l.symbol();
  return s;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
  if (a.size() != b.size()) return a.size() <=> b.size();
  if (a.is_empty()) return a.vertex_ <=> b.vertex_;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (auto c = a.letters_[j].key() <=> b.letters_[j].key(); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const AlgebraSpec& spec) : text_(text), spec_(spec) {}

  Word run() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '1') return parse_empty();
    std::vector<Letter> letters = sequence();
    skip_ws();
    if (pos_ != text_.size()) fail("syntax", "unexpected '" + std::string(1, text_[pos_]) + "'");
    if (letters.empty()) fail("syntax", "empty word must be written 1_0 or 1_1");
    return Word::from_letters(std::move(letters));
  }

 private:
  [[noreturn]] void fail(const std::string& code, const std::string& msg) const {
    throw Error(code, msg + " at position " + std::to_string(pos_ + 1) + " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Word parse_empty() {
    ++pos_;
    if (pos_ >= text_.size() || text_[pos_] != '_') fail("syntax", "expected '_'");
    ++pos_;
    if (pos_ >= text_.size() || (text_[pos_] != '0' && text_[pos_] != '1')) fail("syntax", "expected vertex 0 or 1");
    const int v = text_[pos_++] - '0';
    int orient = +1;
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) orient = text_[pos_++] == '+' ? 1 : -1;
    skip_ws();
    if (pos_ != text_.size()) fail("syntax", "trailing text after empty word");
    return Word::empty(v, orient);
  }

  std::vector<Letter> sequence() {
    std::vector<Letter> out;
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] == ')') return out;
      const char ch = text_[pos_];
      if (ch == '(') {
        ++pos_;
        std::vector<Letter> inner = sequence();
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != ')') fail("syntax", "unbalanced '('");
        ++pos_;
        skip_ws();
        int count = 1;
        if (pos_ < text_.size() && text_[pos_] == '^') {
          ++pos_;
          skip_ws();
          const std::size_t start = pos_;
          while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
          if (start == pos_) fail("syntax", "expected exponent");
          count = std::stoi(std::string(text_.substr(start, pos_ - start)));
        }
        for (int k = 0; k < count; ++k) out.insert(out.end(), inner.begin(), inner.end());
        continue;
      }
      const bool inv = std::isupper(static_cast<unsigned char>(ch)) != 0;
      const int id = arrow_id(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
      if (!spec_.has_arrow(id)) fail("unknown-letter", "unknown letter '" + std::string(1, ch) + "'");
      Letter l{id, inv};
      if (!out.empty() && out.back().src() != l.dst()) {
        fail("non-composable", "s(" + std::string(1, out.back().symbol()) + ") != e(" + std::string(1, ch) + ")");
      }
      out.push_back(l);
      ++pos_;
    }
  }

  std::string_view text_;
  const AlgebraSpec& spec_;
  std::size_t pos_ = 0;
};

bool run_ok(const std::string& run, const std::vector<std::string>& forbidden) {
  return std::none_of(forbidden.begin(), forbidden.end(),
                      [&](const std::string& f) { return run.find(f) != std::string::npos; });
}

bool avoids(const Word& w, const std::vector<std::string>& forbidden) {
  const auto& ls = w.letters();
  std::size_t j = 0;
  while (j < ls.size()) {
    std::size_t k = j;
    std::string run;
    while (k < ls.size() && ls[k].inverse == ls[j].inverse) {
      run += kArrows[static_cast<std::size_t>(ls[k].arrow)].name;
      ++k;
    }
    if (ls[j].inverse) std::reverse(run.begin(), run.end());
    if (!run_ok(run, forbidden)) return false;
    j = k;
  }
  return true;
}

bool reduced(const Word& w) {
  const auto& ls = w.letters();
  for (std::size_t j = 0; j + 1 < ls.size(); ++j) {
    if (ls[j] == ls[j + 1].inv()) return false;
  }
  return true;
}

bool is_proper_power(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p == 0 && w.rotate(p) == w) return true;
  }
  return false;
}

}  // namespace

Word parse_word(std::string_view text, const AlgebraSpec& spec) { return Parser(text, spec).run(); }

bool avoids_forbidden(const Word& w, const AlgebraSpec& spec) { return avoids(w, spec.forbidden()); }

bool is_string(const Word& w, const AlgebraSpec& spec) {
  if (w.is_empty()) return true;
  for (const auto& l : w.letters())
    if (!spec.has_arrow(l.arrow)) return false;
  return reduced(w) && avoids_forbidden(w, spec);
}

int band_power_bound(const Word& w, const AlgebraSpec& spec) {
  const auto len = w.size();
  const auto maxf = spec.max_forbidden_length();
  return static_cast<int>((maxf + len - 1) / len) + 1;
}

bool is_band(const Word& w, const AlgebraSpec& spec) {
  if (w.is_empty() || w.dst() != w.src()) return false;
  if (w.all_direct() || w.all_inverse()) return false;
  if (w.letters().back() == w.letters().front().inv()) return false;
  if (is_proper_power(w)) return false;
  return is_string(w.power(band_power_bound(w, spec)), spec);
}

Word canonical_string(const Word& w) {
  if (w.is_empty()) return w;
  Word inv = w.inverse();
  return (inv <=> w) < 0 ? inv : w;
}

Word canonical_band(const Word& w, bool* inverted) {
  Word best = w;
  bool best_inv = false;
  const Word winv = w.inverse();
  for (std::size_t j = 0; j < w.size(); ++j) {
    Word r = w.rotate(j);
    if ((r <=> best) < 0) {
      best = r;
      best_inv = false;
    }
    Word ri = winv.rotate(j);
    if ((ri <=> best) < 0) {
      best = std::move(ri);
      best_inv = true;
    }
  }
  if (inverted) *inverted = best_inv;
  return best;
}

namespace {

void extend(const AlgebraSpec& spec, std::vector<Letter>& cur, std::size_t maxlen, WordKind kind,
            std::set<Word>& out) {
  const Word w = Word::from_letters(cur);
  if (kind == WordKind::strings) {
    out.insert(canonical_string(w));
  } else if (is_band(w, spec)) {
    out.insert(canonical_band(w));
  }
  if (cur.size() == maxlen) return;
  for (int a = 0; a < spec.num_arrows(); ++a) {
    for (bool inv : {false, true}) {
      const Letter l{a, inv};
      if (l.dst() != cur.back().src()) continue;
      cur.push_back(l);
      if (is_string(Word::from_letters(cur), spec)) extend(spec, cur, maxlen, kind, out);
      cur.pop_back();
    }
  }
}

}  // namespace

std::vector<Word> enumerate(const AlgebraSpec& spec, WordKind kind, std::size_t maxlen) {
  std::set<Word> out;
  if (kind == WordKind::strings) {
    out.insert(Word::empty(0));
    out.insert(Word::empty(1));
  }
  if (maxlen > 0) {
    std::vector<Letter> cur;
    for (int a = 0; a < spec.num_arrows(); ++a) {
      for (bool inv : {false, true}) {
        cur.assign(1, Letter{a, inv});
        extend(spec, cur, maxlen, kind, out);
      }
    }
  }
  return {out.begin(), out.end()};
}

Word named_family(std::string_view name, int param, const AlgebraSpec& spec) {
  const int N = spec.n();
  const bool one = spec.family() == 1;
  auto p = [&](const std::string& text) { return parse_word(text, spec); };
  if (name == "S_0") return Word::empty(0);
  if (name == "S_1") return Word::empty(1);
  if (name == "S_01") return p("b");
  if (name == "S_10") return p("g");
  if (name == "S_001") return p("ba");
  if (name == "S_100") return p("ag");
  if (name == "T_00") return p("a");
  if (name == "C_010") return p(one ? "BG" + repeat("ABG", N - 1) : "BG");
  if (name == "X") return one ? p("ba") : Word::empty(1);
  if (name == "Y") return one ? Word::empty(1) : p("ba");
  if (name == "Z") return one ? p("ag") : Word::empty(1);
  if (name == "Z_ext") {
    if (!one) throw Error("unknown-name", "Z_ext is defined for family 1 only");
    return p(repeat("BGA", N - 1) + "B");
  }
  if (name == "U_bar") {
    if (one) throw Error("unknown-name", "U_bar is defined for family 2 only");
    if (N == 1) return Word::empty(1);
    return p(repeat("h", N - 1));
  }
  if (name == "C") {
    if (param == 0) return Word::empty(0);
    const int k = param > 0 ? param : -param;
    std::string unit;
    if (param > 0) {
      unit = one ? "a" + repeat("BGA", N - 1) + "BG" : "aBG";
    } else {
      unit = one ? "A" + repeat("gba", N - 1) + "gb" : "Agb";
    }
    return p(repeat(unit, k));
  }
  throw Error("unknown-name", "no word family named '" + std::string(name) + "'");
}

}  // namespace strang
