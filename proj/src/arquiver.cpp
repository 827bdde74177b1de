#include "strang/arquiver.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "strang/krause.hpp"

namespace strang {

namespace {

// σ and ε signs per arrow id.
constexpr std::array<int, 4> kSigma{-1, +1, -1, +1};
constexpr std::array<int, 4> kEps{-1, +1, +1, -1};

enum class Attach { right_direct, right_inverse, left_inverse, left_direct };

// The word obtained by attaching one letter of `arrow`, or nullopt if it is not a string.
std::optional<Word> attach(const Word& s, int arrow, Attach how, const AlgebraSpec& spec) {
  const Arrow& a = spec.arrow(arrow);
  if (s.is_empty()) {
    const int u = s.src();
    const int t = s.orientation();
    const auto id = static_cast<std::size_t>(arrow);
    bool ok = false;
    switch (how) {
      case Attach::right_direct: ok = a.dst == u && kEps[id] == t; break;
      case Attach::right_inverse: ok = a.src == u && kSigma[id] == t; break;
      case Attach::left_inverse: ok = a.dst == u && kEps[id] == -t; break;
      case Attach::left_direct: ok = a.src == u && kSigma[id] == -t; break;
    }
    if (!ok) return std::nullopt;
  }
  std::vector<Letter> ls = s.letters();
  const bool right = how == Attach::right_direct || how == Attach::right_inverse;
  const bool inverse = how == Attach::right_inverse || how == Attach::left_inverse;
  const Letter l{arrow, inverse};
  if (right) {
    if (!s.is_empty() && l.dst() != s.src()) return std::nullopt;
    ls.push_back(l);
  } else {
    if (!s.is_empty() && l.src() != s.dst()) return std::nullopt;
    ls.insert(ls.begin(), l);
  }
  Word w = Word::from_letters(std::move(ls));
  if (!is_string(w, spec)) return std::nullopt;
  return w;
}

bool any_attach(const Word& s, Attach how, const AlgebraSpec& spec) {
  for (int a = 0; a < spec.num_arrows(); ++a)
    if (attach(s, a, how, spec)) return true;
  return false;
}

std::optional<Word> join(const Word& x, const Word& y) {
  if (x.is_empty()) return x.src() == y.dst() ? std::optional<Word>(y) : std::nullopt;
  if (y.is_empty()) return y.dst() == x.src() ? std::optional<Word>(x) : std::nullopt;
  if (x.src() != y.dst()) return std::nullopt;
  std::vector<Letter> ls = x.letters();
  ls.insert(ls.end(), y.letters().begin(), y.letters().end());
  return Word::from_letters(std::move(ls));
}

// Hooks use M^{-1} on the far side, cohooks use M.
Word extend(const Word& s, Side side, bool hook, const AlgebraSpec& spec) {
  Attach how;
  if (side == Side::right) {
    how = hook ? Attach::right_direct : Attach::right_inverse;
  } else {
    how = hook ? Attach::left_inverse : Attach::left_direct;
  }
  std::vector<Word> found;
  for (int a = 0; a < spec.num_arrows(); ++a) {
    auto w = attach(s, a, how, spec);
    if (!w) continue;
    for (const Word& m : hook_sets(spec)) {
      const Word piece = (side == Side::right) == hook ? m.inverse() : m;
      auto full = side == Side::right ? join(*w, piece) : join(piece, *w);
      if (full && is_string(*full, spec)) found.push_back(*full);
    }
  }
  if (found.empty()) {
    const std::string what = hook ? "on-peak" : "in-deep";
    throw Error(what, s.str(true) + (side == Side::right ? " starts " : " ends ") + (hook ? "on a peak" : "in a deep"));
  }
  if (found.size() > 1) {
    std::string all;
    for (const auto& w : found) all += " " + w.str();
    throw Error("ambiguous", "several " + std::string(hook ? "hooks" : "cohooks") + " at " + s.str(true) + ":" + all);
  }
  return found.front();
}

// T with T_h = S (hook) or T_c = S (cohook) on the given side, found among the prefixes or
// suffixes of S.
std::optional<Word> shrink(const Word& s, Side side, bool hook, const AlgebraSpec& spec) {
  std::vector<Word> found;
  for (std::size_t k = 0; k < s.size(); ++k) {
    std::vector<Word> cands;
    if (k == 0) {
      const int v = side == Side::right ? s.dst() : s.src();
      cands = {Word::empty(v, +1), Word::empty(v, -1)};
    } else {
      cands = {side == Side::right ? s.sub(1, k) : s.sub(s.size() - k + 1, k)};
    }
    for (const Word& t : cands) {
      try {
        if (extend(t, side, hook, spec) == s) found.push_back(t);
      } catch (const Error&) {
      }
    }
  }
  if (found.empty()) return std::nullopt;
  if (found.size() > 1 && !(found.size() == 2 && found[0].is_empty() && found[1].is_empty())) {
    throw Error("ambiguous", "several strings shrink " + s.str() + " on one side");
  }
  return found.front();
}

// Empty words in canonical pieces keep the + orientation.
Word plain(const Word& w) { return w.is_empty() ? Word::empty(w.src()) : w; }

}  // namespace

std::vector<Word> hook_sets(const AlgebraSpec& spec) {
  const int N = spec.n();
  if (spec.family() == 1) {
    return {parse_word("ba" + repeat("gba", N - 1), spec), parse_word("gb" + repeat("agb", N - 1), spec),
            parse_word("ag" + repeat("bag", N - 1), spec), Word::empty(1)};
  }
  return {parse_word("gb", spec), parse_word("ba", spec), parse_word("ag", spec),
          N > 1 ? parse_word(repeat("h", N - 1), spec) : Word::empty(1)};
}

PeakDeep peak_deep_status(const Word& s, const AlgebraSpec& spec) {
  PeakDeep r;
  r.starts_on_peak = !any_attach(s, Attach::right_direct, spec);
  r.starts_in_deep = !any_attach(s, Attach::right_inverse, spec);
  r.ends_on_peak = !any_attach(s, Attach::left_inverse, spec);
  r.ends_in_deep = !any_attach(s, Attach::left_direct, spec);
  return r;
}

Word add_hook(const Word& s, Side side, const AlgebraSpec& spec) { return extend(s, side, true, spec); }
Word add_cohook(const Word& s, Side side, const AlgebraSpec& spec) { return extend(s, side, false, spec); }

std::string to_string(EdgeKind k) { return k == EdgeKind::hook_inclusion ? "hook-inclusion" : "cohook-projection"; }
std::string to_string(Direction d) { return d == Direction::successor ? "successor" : "predecessor"; }

Piece canonical_piece(const Piece& p, const Field& field) {
  Piece q = p;
  if (p.kind == Piece::Kind::string) {
    q.word = plain(canonical_string(p.word));
  } else {
    bool inverted = false;
    q.word = canonical_band(p.word, &inverted);
    if (inverted) q.lambda = field.inv(p.lambda);
  }
  return q;
}

std::vector<Neighbor> ar_neighbors(const Piece& m, const AlgebraSpec& spec, const Field& field) {
  std::vector<Neighbor> out;
  if (m.kind == Piece::Kind::band) {
    Piece up = m;
    up.multiplicity = m.multiplicity + 1;
    out.push_back({canonical_piece(up, field), Direction::successor, EdgeKind::hook_inclusion});
    out.push_back({canonical_piece(up, field), Direction::predecessor, EdgeKind::cohook_projection});
    if (m.multiplicity > 1) {
      Piece down = m;
      down.multiplicity = m.multiplicity - 1;
      out.push_back({canonical_piece(down, field), Direction::successor, EdgeKind::cohook_projection});
      out.push_back({canonical_piece(down, field), Direction::predecessor, EdgeKind::hook_inclusion});
    }
  } else {
    const Word s = m.word.is_empty() ? Word::empty(m.word.src(), +1) : m.word;
    const PeakDeep st = peak_deep_status(s, spec);
    auto push = [&](const Word& w, Direction d, EdgeKind k) {
      out.push_back({canonical_piece(Piece{Piece::Kind::string, w, 0, 1}, field), d, k});
    };
    // On a peak the successor on that side deletes a cohook; in a deep the predecessor deletes a hook.
    for (Side side : {Side::right, Side::left}) {
      const bool peak = side == Side::right ? st.starts_on_peak : st.ends_on_peak;
      const bool deep = side == Side::right ? st.starts_in_deep : st.ends_in_deep;
      if (!peak) {
        push(add_hook(s, side, spec), Direction::successor, EdgeKind::hook_inclusion);
      } else if (auto t = shrink(s, side, false, spec)) {
        push(*t, Direction::successor, EdgeKind::cohook_projection);
      }
      if (!deep) {
        push(add_cohook(s, side, spec), Direction::predecessor, EdgeKind::cohook_projection);
      } else if (auto t = shrink(s, side, true, spec)) {
        push(*t, Direction::predecessor, EdgeKind::hook_inclusion);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Neighbor& a, const Neighbor& b) {
    return std::make_tuple(a.direction, a.label(), a.kind) < std::make_tuple(b.direction, b.label(), b.kind);
  });
  return out;
}

ModuleMap canonical_map(const Word& from, const Word& to, const AlgebraSpec& spec, const Field& field) {
  const std::size_t full = std::min(from.size(), to.size());
  for (const auto& t : admissible_triples(from, to, spec)) {
    if (t.len == full) return graph_map(from, to, t, spec, field);
  }
  throw Error("not-irreducible", "no full-length common factor between " + from.str() + " and " + to.str());
}

std::optional<std::size_t> omega_period(const Representation& m, std::size_t maxp) {
  Representation cur = m;
  for (std::size_t l = 1; l <= maxp; ++l) {
    cur = syzygy(cur);
    if (is_isomorphic(cur, m)) return l;
  }
  return std::nullopt;
}

std::string ARComponentGraph::classification() const {
  if (tau_period) return "tube(rank " + std::to_string(*tau_period) + ")";
  return "ZA-infinity-infinity";
}

std::optional<std::size_t> ARComponentGraph::find(const std::string& label) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].label == label) return i;
  return std::nullopt;
}

bool ARComponentGraph::has_edge(std::size_t from, std::size_t to) const {
  return std::any_of(edges.begin(), edges.end(), [&](const AREdge& e) { return e.from == from && e.to == to; });
}

ARComponentGraph grow_component(const Piece& seed, const AlgebraSpec& spec, const Field& field, std::size_t radius) {
  ARComponentGraph g(spec, field);
  g.radius = radius;
  std::map<std::string, std::size_t> index;
  auto add_node = [&](const Piece& p, std::size_t layer) {
    const std::string label = p.label();
    auto it = index.find(label);
    if (it != index.end()) return it->second;
    ARNode n;
    n.piece = p;
    n.label = label;
    n.dims = build_piece(p, spec, field).dims;
    n.layer = layer;
    g.nodes.push_back(std::move(n));
    index.emplace(label, g.nodes.size() - 1);
    return g.nodes.size() - 1;
  };

  add_node(canonical_piece(seed, field), 0);
  std::deque<std::size_t> queue{0};
  std::set<std::pair<std::size_t, std::size_t>> seen_edges;
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    if (g.nodes[i].layer >= radius) continue;
    const Piece here = g.nodes[i].piece;
    const std::size_t layer = g.nodes[i].layer;
    for (const auto& nb : ar_neighbors(here, spec, field)) {
      const std::size_t before = g.nodes.size();
      const std::size_t j = add_node(nb.piece, layer + 1);
      if (g.nodes.size() > before) queue.push_back(j);
      const auto e = nb.direction == Direction::successor ? std::make_pair(i, j) : std::make_pair(j, i);
      if (seen_edges.insert(e).second) g.edges.push_back({e.first, e.second, nb.kind});
    }
  }

  g.tau_closed = true;
  std::set<std::size_t> images;
  for (auto& n : g.nodes) {
    const Representation m = build_piece(n.piece, spec, field);
    const Representation t = syzygy_power(m, 2);
    const auto p = recognize_indecomposable(t, t.dim());
    if (!p) throw Error("unrecognized", "τ of " + n.label + " matches no string or band");
    n.tau_label = canonical_piece(*p, field).label();
    n.tau = g.find(n.tau_label);
    const bool inner = n.layer + 2 <= radius;
    if (inner && (!n.tau || !images.insert(*n.tau).second)) g.tau_closed = false;
  }

  g.period_bound = std::max<std::size_t>(2 * radius, 2);
  const Representation s0 = build_piece(g.nodes[0].piece, spec, field);
  Representation cur = s0;
  for (std::size_t r = 1; r <= g.period_bound; ++r) {
    cur = syzygy_power(cur, 2);
    if (is_isomorphic(cur, s0)) {
      g.tau_period = r;
      break;
    }
  }
  return g;
}

std::string to_dot(const ARComponentGraph& g) {
  std::ostringstream os;
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '\n') {
        q += "\\n";
        continue;
      }
      if (ch == '"' || ch == '\\') q += '\\';
      q += ch;
    }
    return q + "\"";
  };
  os << "digraph ar_component {\n";
  os << "  label=" << quote(g.spec.name() + " " + g.classification()) << ";\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto& n = g.nodes[i];
    os << "  n" << i << " [label=" << quote(n.label + "\n" + dims_str(n.dims)) << "];\n";
  }
  for (const auto& e : g.edges) {
    os << "  n" << e.from << " -> n" << e.to << " [style=solid, kind=" << quote(to_string(e.kind)) << "];\n";
  }
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    if (g.nodes[i].tau) os << "  n" << i << " -> n" << *g.nodes[i].tau << " [style=dashed, label=\"τ\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace strang
