#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "strang/homology.hpp"

namespace strang {

/// Maximal directed strings used to build hooks and cohooks.
std::vector<Word> hook_sets(const AlgebraSpec& spec);

/// Right side = the start s(S), left side = the end e(S).
struct PeakDeep {
  bool starts_on_peak = false;
  bool starts_in_deep = false;
  bool ends_on_peak = false;
  bool ends_in_deep = false;
};

/// For an empty word the orientation t decides which letters attach:
/// Sζ needs ε(ζ)=t, Sζ^{-1} needs σ(ζ)=t, ξ^{-1}S needs ε(ξ)=-t, ξS needs σ(ξ)=-t,
/// with σ/ε = (-,-) for α, (+,+) for β, (-,+) for γ, (+,-) for η.
PeakDeep peak_deep_status(const Word& s, const AlgebraSpec& spec);

enum class Side { left, right };

/// S_h = SζM^{-1} (right) or _hS = Nξ^{-1}S (left). Throws Error("on-peak") or Error("ambiguous").
Word add_hook(const Word& s, Side side, const AlgebraSpec& spec);
/// S_c = Sζ^{-1}M (right) or _cS = N^{-1}ξS (left). Throws Error("in-deep") or Error("ambiguous").
Word add_cohook(const Word& s, Side side, const AlgebraSpec& spec);

enum class EdgeKind { hook_inclusion, cohook_projection };
enum class Direction { successor, predecessor };
std::string to_string(EdgeKind k);
std::string to_string(Direction d);

/// Canonical form of a string or band piece; band words are canonicalized with λ inverted
/// when the inverse word is chosen.
Piece canonical_piece(const Piece& p, const Field& field);

struct Neighbor {
  Piece piece;
  Direction direction;
  EdgeKind kind;
  std::string label() const { return piece.label(); }
};

/// Irreducible maps at a string or band module, sorted by (direction, label). A side that
/// starts on a peak (in a deep) contributes the string with a cohook (hook) deleted instead.
std::vector<Neighbor> ar_neighbors(const Piece& m, const AlgebraSpec& spec, const Field& field);

/// The canonical inclusion or projection between two string modules whose words differ by a
/// hook or cohook. Throws Error("not-irreducible") if no full-length common factor exists.
ModuleMap canonical_map(const Word& from, const Word& to, const AlgebraSpec& spec, const Field& field);

/// Least l <= maxp with Ω^l(M) ≅ M.
std::optional<std::size_t> omega_period(const Representation& m, std::size_t maxp);

struct ARNode {
  Piece piece;
  std::string label;
  std::array<std::size_t, 2> dims{0, 0};
  /// Graph distance from the seed.
  std::size_t layer = 0;
  /// Index of τM = Ω²M among the nodes, if it was grown.
  std::optional<std::size_t> tau;
  /// Label of τM as recognized.
  std::string tau_label;
};

struct AREdge {
  std::size_t from = 0;
  std::size_t to = 0;
  EdgeKind kind = EdgeKind::hook_inclusion;
};

struct ARComponentGraph {
  AlgebraSpec spec;
  Field field;
  std::size_t radius = 0;
  std::vector<ARNode> nodes;
  std::vector<AREdge> edges;
  /// τ-period of the seed, searched up to `period_bound`.
  std::optional<std::size_t> tau_period;
  std::size_t period_bound = 0;
  /// τ maps every node at layer <= radius-2 to a grown node, injectively.
  bool tau_closed = false;

  ARComponentGraph(AlgebraSpec s, Field f) : spec(s), field(std::move(f)) {}
  bool is_tube() const noexcept { return tau_period.has_value(); }
  /// "tube(rank r)" or "ZA-infinity-infinity".
  std::string classification() const;
  std::optional<std::size_t> find(const std::string& label) const;
  bool has_edge(std::size_t from, std::size_t to) const;
};

/// BFS over ar_neighbors up to `radius` steps, then τ = Ω² on every node, recognized as a
/// string or band. Not-periodic means no τ-period up to max(2·radius, 2): a bounded search,
/// not a proof.
ARComponentGraph grow_component(const Piece& seed, const AlgebraSpec& spec, const Field& field, std::size_t radius);

/// Nodes "label\n(dims)" in node order, solid irreducible maps, dashed τ.
std::string to_dot(const ARComponentGraph& g);

}  // namespace strang
