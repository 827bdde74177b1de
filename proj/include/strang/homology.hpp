#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strang/representation.hpp"

namespace strang {

/// Intertwiner basis of Hom(M, N). Each map flattens to the unknown vector
/// (f[0] row-major, then f[1] row-major); the basis is reduced echelon in that order.
struct HomSpace {
  std::vector<ModuleMap> basis;
  std::size_t dim() const noexcept { return basis.size(); }
};

/// Coefficient matrix of the intertwiner equations f_t M_ζ = N_ζ f_s.
Matrix hom_system(const Representation& m, const Representation& n);
HomSpace hom_space(const Representation& m, const Representation& n);
std::size_t hom_dim(const Representation& m, const Representation& n);

Vec flatten_map(const ModuleMap& f);
ModuleMap unflatten_map(const Representation& m, const Representation& n, const Vec& v);

struct StableHom {
  std::size_t hom = 0;
  std::size_t phom = 0;
  std::size_t stable = 0;
  /// Echelon basis (flattened) of the maps factoring through a projective.
  std::vector<Vec> projective_sub;
};

/// Maps through projectives are the maps π∘g with π the projective cover of N.
StableHom phom_and_stable(const Representation& m, const Representation& n);
std::size_t stable_end_dim(const Representation& m);

struct Cover {
  Representation module;
  ModuleMap map;
  /// Number of copies of P_0, P_1.
  std::array<std::size_t, 2> mult{0, 0};
};

/// Minimal projective cover P → M. Throws Error("zero-module") for M = 0.
Cover projective_cover(const Representation& m);
/// Minimal injective hull M → I, with I a sum of projective indecomposables.
Cover injective_hull(const Representation& m);

/// Ω(M), kernel of the minimal cover. Throws Error("zero-module") for M = 0.
Representation syzygy(const Representation& m);
/// Ω^{-1}(M), cokernel of the minimal hull.
Representation cosyzygy(const Representation& m);
/// Ω^k for any integer k (negative means cosyzygies).
Representation syzygy_power(const Representation& m, int k);

/// dim Ext^1(M, N) = dim stable Hom(ΩM, N).
std::size_t ext1_dim(const Representation& m, const Representation& n);

enum class IsoMode { fingerprint, basis_scan, exhaustive, random };

struct IsoResult {
  bool iso = false;
  IsoMode mode = IsoMode::fingerprint;
  /// False only in random mode when no isomorphism was found.
  bool decided = true;
};

IsoResult is_isomorphic_detail(const Representation& m, const Representation& n);
bool is_isomorphic(const Representation& m, const Representation& n);
std::string to_string(IsoMode mode);

/// Multiplicity of P_u as a direct summand: the rank of the socle path of P_u on M.
std::array<std::size_t, 2> projective_multiplicities(const Representation& m);

struct Stripped {
  std::array<std::size_t, 2> mult{0, 0};
  Representation rest;
};
Stripped strip_projectives(const Representation& m);

/// Splits M into pieces by Fitting decompositions of endomorphisms. Pieces that no tested
/// endomorphism splits are returned as they are.
std::vector<Representation> decompose(const Representation& m);

struct Piece {
  enum class Kind { string, band } kind = Kind::string;
  Word word;
  Elem lambda = 0;
  std::size_t multiplicity = 1;
  std::string label() const;
};

struct Recognition {
  std::array<std::size_t, 2> projectives{0, 0};
  std::vector<Piece> pieces;
  std::string label() const;
};

/// Throws Error("unrecognized") if some piece matches no string or band of length <= maxlen.
Recognition recognize(const Representation& m, std::size_t maxlen);
/// Recognition of a module already known to be a single non-projective indecomposable.
std::optional<Piece> recognize_indecomposable(const Representation& m, std::size_t maxlen);

Representation build_piece(const Piece& p, const AlgebraSpec& spec, const Field& field);

}  // namespace strang
