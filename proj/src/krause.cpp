#include "strang/krause.hpp"

#include <algorithm>

namespace strang {

namespace {

// s_j is 1-based; position p in [0, size] is a basis index.
bool left_ok_source(const Word& s, std::size_t a) { return a == 0 || !s[a].inverse; }
bool right_ok_source(const Word& s, std::size_t end) { return end == s.size() || s[end + 1].inverse; }
bool left_ok_target(const Word& t, std::size_t b) { return b == 0 || t[b].inverse; }
bool right_ok_target(const Word& t, std::size_t end) { return end == t.size() || !t[end + 1].inverse; }

bool forward_match(const Word& s, const Word& t, std::size_t a, std::size_t b, std::size_t len) {
  for (std::size_t k = 1; k <= len; ++k)
    if (!(s[a + k] == t[b + k])) return false;
  return true;
}

bool reversed_match(const Word& s, const Word& t, std::size_t a, std::size_t b, std::size_t len) {
  for (std::size_t k = 1; k <= len; ++k)
    if (!(s[a + k] == t[b + len + 1 - k].inv())) return false;
  return true;
}

std::vector<std::size_t> local_indices(const Word& w) {
  std::array<std::size_t, 2> count{0, 0};
  std::vector<std::size_t> loc(w.size() + 1);
  for (std::size_t j = 0; j <= w.size(); ++j) loc[j] = count[static_cast<std::size_t>(w.vertex_at(j))]++;
  return loc;
}

}  // namespace

std::vector<AdmissibleTriple> admissible_triples(const Word& s, const Word& t, const AlgebraSpec& spec) {
  if (!is_string(s, spec) || !is_string(t, spec)) throw Error("invalid-string", "admissible triples need strings");
  std::vector<AdmissibleTriple> out;
  const std::size_t m = s.size();
  const std::size_t n = t.size();
  for (std::size_t len = 0; len <= std::min(m, n); ++len) {
    for (std::size_t a = 0; a + len <= m; ++a) {
      if (!left_ok_source(s, a) || !right_ok_source(s, a + len)) continue;
      for (std::size_t b = 0; b + len <= n; ++b) {
        if (!left_ok_target(t, b) || !right_ok_target(t, b + len)) continue;
        if (len == 0) {
          if (s.vertex_at(a) == t.vertex_at(b)) out.push_back({a, b, 0, false, Word::empty(s.vertex_at(a))});
          continue;
        }
        if (forward_match(s, t, a, b, len)) out.push_back({a, b, len, false, s.sub(a + 1, len)});
        if (reversed_match(s, t, a, b, len)) out.push_back({a, b, len, true, s.sub(a + 1, len)});
      }
    }
  }
  return out;
}

ModuleMap graph_map(const Word& s, const Word& t, const AdmissibleTriple& tr, const AlgebraSpec& spec,
                    const Field& field) {
  const Representation ms = string_module(s, spec, field);
  const Representation mt = string_module(t, spec, field);
  ModuleMap f = ModuleMap::zero(ms, mt);
  const auto ls = local_indices(s);
  const auto lt = local_indices(t);
  for (std::size_t k = 0; k <= tr.len; ++k) {
    const std::size_t x = tr.a + k;
    const std::size_t y = tr.reversed ? tr.b + tr.len - k : tr.b + k;
    const int v = s.vertex_at(x);
    if (v != t.vertex_at(y)) throw Error("not-intertwiner", "vertex mismatch in graph map");
    f.f[static_cast<std::size_t>(v)](lt[y], ls[x]) = 1;
  }
  if (!is_intertwiner(ms, mt, f)) {
    throw Error("not-intertwiner", "graph map " + s.str() + " -> " + t.str() + " at (" + std::to_string(tr.a) + "," +
                                       std::to_string(tr.b) + "," + std::to_string(tr.len) + ")");
  }
  return f;
}

std::size_t krause_hom_dim(const Word& s, const Word& t, const AlgebraSpec& spec) {
  return admissible_triples(s, t, spec).size();
}

}  // namespace strang
