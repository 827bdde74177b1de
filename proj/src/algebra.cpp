#include "strang/algebra.hpp"

#include <algorithm>

#include "strang/field.hpp"

namespace strang {

int arrow_id(char name) noexcept {
  switch (name) {
    case 'a': return 0;
    case 'b': return 1;
    case 'g': return 2;
    case 'h': return 3;
    default: return -1;
  }
}

std::string repeat(std::string_view s, int k) {
  std::string out;
  for (int i = 0; i < k; ++i) out += s;
  return out;
}

AlgebraSpec::AlgebraSpec(int family, int c, int d) : family_(family), c_(c), d_(d) {
  if (family != 1 && family != 2) throw Error("bad-spec", "family must be 1 or 2");
  if (c != 0 && c != 1) throw Error("bad-spec", "c must be 0 or 1");
  if (d < 3) throw Error("defect-too-small", "d = " + std::to_string(d) + " < 3");
  if (d > 20) throw Error("bad-spec", "d is too large");
}

std::vector<std::string> AlgebraSpec::forbidden() const {
  const int N = n();
  if (family_ == 1) {
    return {"bg", "aa", repeat("gba", N), repeat("agb", N), repeat("bag", N)};
  }
  return {"aa", "hb", "gh", "bg", "gba", "agb", "bag", repeat("h", N)};
}

std::size_t AlgebraSpec::max_forbidden_length() const {
  std::size_t m = 0;
  for (const auto& p : forbidden()) m = std::max(m, p.size());
  return m;
}

std::vector<Relation> AlgebraSpec::relations() const {
  const int N = n();
  const auto cc = static_cast<unsigned>(c_);
  if (family_ == 1) {
    return {{"bg", 0, ""}, {"aa", cc, repeat("gba", N)}, {repeat("gba", N), 1, repeat("agb", N)}};
  }
  return {{"hb", 0, ""},    {"gh", 0, ""},       {"bg", 0, ""},
          {"aa", cc, "gba"}, {"gba", 1, "agb"}, {repeat("h", N), 1, "bag"}};
}

bool AlgebraSpec::composable(std::string_view path, int* src, int* dst) const noexcept {
  if (path.empty()) return false;
  for (std::size_t k = 0; k < path.size(); ++k) {
    const int id = arrow_id(path[k]);
    if (!has_arrow(id)) return false;
    if (k + 1 < path.size()) {
      const int next = arrow_id(path[k + 1]);
      if (!has_arrow(next) || arrow(id).src != arrow(next).dst) return false;
    }
  }
  if (src) *src = arrow(arrow_id(path.back())).src;
  if (dst) *dst = arrow(arrow_id(path.front())).dst;
  return true;
}

std::optional<std::string> AlgebraSpec::reduce(std::string_view path) const {
  if (!composable(path)) return std::nullopt;
  const auto contains = [&](std::string_view pat) { return path.find(pat) != std::string_view::npos; };
  const int N = n();
  if (family_ == 1) {
    if (contains("bg")) return std::nullopt;
    if (path == "aa") {
      if (c_ == 0) return std::nullopt;
      return repeat("agb", N);
    }
    if (contains("aa")) return std::nullopt;
    if (path.size() > static_cast<std::size_t>(3 * N)) return std::nullopt;
    if (path == repeat("gba", N)) return repeat("agb", N);
    return std::string(path);
  }
  if (contains("bg") || contains("hb") || contains("gh")) return std::nullopt;
  const std::string hN = repeat("h", N);
  if (path == "aa") {
    if (c_ == 0) return std::nullopt;
    return std::string("gba");
  }
  if (contains("aa")) return std::nullopt;
  if (path == "agb" || path == "gba") return std::string("gba");
  if (path == "bag" || path == hN) return std::string("bag");
  for (std::string_view soc : {std::string_view("gba"), std::string_view("agb"), std::string_view("bag"),
                               std::string_view(hN)}) {
    if (contains(soc)) return std::nullopt;
  }
  return std::string(path);
}

std::string AlgebraSpec::socle_path(int u) const {
  if (family_ == 1) return u == 0 ? repeat("agb", n()) : repeat("bag", n());
  return u == 0 ? "gba" : "bag";
}

int AlgebraSpec::expected_radical_length(int u) const noexcept {
  if (family_ == 1) return 3 * n() + 1;
  if (u == 0 || d_ == 3) return 4;
  return n() + 1;
}

std::string AlgebraSpec::name() const {
  return "Lambda_{" + std::to_string(family_) + "," + std::to_string(c_) + "} (d=" + std::to_string(d_) + ")";
}

}  // namespace strang
