#pragma once

#include <map>
#include <string>
#include <vector>

#include "strang/representation.hpp"

namespace strang {

/// Normal-form paths starting at one vertex, ordered by (length, a<b<g<h).
/// The empty path stands for the idempotent e_u.
struct PathBasis {
  int vertex = 0;
  std::vector<std::string> paths;
  /// Nonzero non-normal paths met during construction, mapped to their normal form.
  std::map<std::string, std::string> identifications;
};

struct Projective {
  Representation rep;
  PathBasis basis;
};

/// Λ·e_u with arrows acting by left multiplication on normal forms.
Projective projective_module(const AlgebraSpec& spec, const Field& field, int u);

std::size_t algebra_dim(const AlgebraSpec& spec, const Field& field);

struct SanityCheck {
  std::string id;
  bool pass;
  std::string observed;
  std::string expected;
};

/// Relations, simple top and socle matching the vertex, and radical lengths for both projectives.
std::vector<SanityCheck> symmetric_sanity(const AlgebraSpec& spec, const Field& field);

}  // namespace strang
