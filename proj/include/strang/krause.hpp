#pragma once

#include <cstddef>
#include <vector>

#include "strang/representation.hpp"

namespace strang {

/// A common factor string C sitting at basis positions [a, a+len] of S (canonical basis x_0..x_m)
/// and [b, b+len] of T (y_0..y_n). In S, C is a factor whose neighbours point away from it
/// (a quotient); in T its neighbours point into it (a submodule). `reversed` means C runs
/// against T's orientation, so x_{a+t} goes to y_{b+len-t}.
struct AdmissibleTriple {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t len = 0;
  bool reversed = false;
  Word common;
};

/// All admissible triples, ordered by (len, a, b, reversed).
std::vector<AdmissibleTriple> admissible_triples(const Word& s, const Word& t, const AlgebraSpec& spec);

/// The 0/1 map M(S) → M(T) of a triple. Throws Error("not-intertwiner") if the result is not a
/// module homomorphism.
ModuleMap graph_map(const Word& s, const Word& t, const AdmissibleTriple& triple, const AlgebraSpec& spec,
                    const Field& field);

std::size_t krause_hom_dim(const Word& s, const Word& t, const AlgebraSpec& spec);

}  // namespace strang
