#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "strang/algebra.hpp"
#include "strang/field.hpp"
#include "strang/matrix.hpp"
#include "strang/word.hpp"

namespace strang {

enum class RepKind { string, band, projective, derived };

/// A finite-dimensional left module: a vector space at each vertex and one
/// dims[dst] x dims[src] matrix per arrow. Bases are vertex-local.
struct Representation {
  AlgebraSpec spec;
  Field field;
  std::array<std::size_t, 2> dims{0, 0};
  std::vector<Matrix> arrows;
  std::string label;
  RepKind kind = RepKind::derived;
  /// Known to be indecomposable by construction (strings, bands, projective indecomposables and
  /// their syzygies). False means "not known", not "decomposable".
  bool indecomposable = false;
  /// Optional names of the basis vectors at each vertex.
  std::array<std::vector<std::string>, 2> basis_labels;

  Representation(AlgebraSpec s, Field f) : spec(s), field(std::move(f)) {}

  std::size_t dim() const noexcept { return dims[0] + dims[1]; }
  bool is_zero() const noexcept { return dim() == 0; }
  const Matrix& arrow(int id) const { return arrows.at(static_cast<std::size_t>(id)); }
  /// Zero matrices of the right shapes.
  void reset_arrows();
};

/// A module homomorphism given by one matrix per vertex: f[u] is dims_N[u] x dims_M[u].
struct ModuleMap {
  std::array<Matrix, 2> f;

  static ModuleMap zero(const Representation& m, const Representation& n);
  static ModuleMap identity(const Representation& m);
  bool is_zero() const noexcept { return f[0].is_zero() && f[1].is_zero(); }
};

ModuleMap compose(const Field& field, const ModuleMap& g, const ModuleMap& f);  // g∘f
ModuleMap add(const ModuleMap& a, const ModuleMap& b);
ModuleMap scale(const Field& field, Elem c, const ModuleMap& a);
bool is_intertwiner(const Representation& m, const Representation& n, const ModuleMap& f);
std::size_t map_rank(const Field& field, const ModuleMap& f);
/// Whole-space matrix of f (block diagonal by vertex).
Matrix flatten(const ModuleMap& f);

/// Matrix of a path ("ba" = β∘α) acting on `rep`; throws on a non-composable path.
Matrix path_matrix(const Representation& rep, std::string_view path);
/// Every generator of I_{i,c} acts as an exact matrix identity on `rep`.
bool check_relations(const Representation& rep);

Representation string_module(const Word& w, const AlgebraSpec& spec, const Field& field);
Representation band_module(const Word& w, Elem lambda, std::size_t m, const AlgebraSpec& spec, const Field& field);

Representation zero_module(const AlgebraSpec& spec, const Field& field);
Representation simple_module(const AlgebraSpec& spec, const Field& field, int u);
Representation direct_sum(const std::vector<Representation>& parts);

/// A subspace given by a basis (columns) at each vertex.
struct Subspace {
  std::array<std::vector<Vec>, 2> basis;
  std::size_t dim() const noexcept { return basis[0].size() + basis[1].size(); }
};

/// Smallest submodule containing the given vectors.
Subspace generated_submodule(const Representation& rep, const Subspace& gens);
/// Inclusion of an invariant subspace; throws Error("not-invariant") otherwise.
struct SubResult {
  Representation sub;
  ModuleMap inclusion;
};
SubResult submodule(const Representation& rep, const Subspace& sub);
struct QuotientResult {
  Representation quotient;
  ModuleMap projection;
};
QuotientResult quotient(const Representation& rep, const Subspace& sub);

Subspace kernel_of(const Representation& m, const ModuleMap& f);
Subspace image_of(const Representation& n, const ModuleMap& f);

/// Span of all arrow images.
Subspace radical_space(const Representation& rep);
/// Joint kernel of all arrows.
Subspace socle_space(const Representation& rep);

Representation radical(const Representation& rep);
Representation socle(const Representation& rep);
Representation top(const Representation& rep);
/// Number of nonzero layers of the radical series.
std::size_t radical_length(const Representation& rep);
/// Dimensions of top (per vertex).
std::array<std::size_t, 2> top_dims(const Representation& rep);
std::array<std::size_t, 2> socle_dims(const Representation& rep);

std::string dims_str(const std::array<std::size_t, 2>& d);

}  // namespace strang
