#pragma once

#include <cstddef>
#include <string_view>

#include "strang/field.hpp"

/// Row kernels over GF(2^e) byte vectors. Every kernel has a scalar reference and,
/// on x86-64 builds, an AVX2 variant using pshufb nibble lookups. The variant is chosen
/// once at first use from cpuid; STRANG_ISA=scalar in the environment pins the reference.
namespace strang::kernels {

enum class Isa { scalar, avx2 };

struct RowOps {
  /// dst[i] ^= c * src[i], with c given by its nibble tables.
  void (*axpy)(Elem* dst, const Elem* src, std::size_t n, const NibbleTables& c);
  /// dst[i] ^= src[i].
  void (*add)(Elem* dst, const Elem* src, std::size_t n);
  /// dst[i] = c * dst[i].
  void (*scale)(Elem* dst, std::size_t n, const NibbleTables& c);
  Isa isa;
};

/// Reference kernels.
const RowOps& scalar_ops() noexcept;

/// True when the binary carries the variant and the CPU supports it.
bool available(Isa isa) noexcept;

/// Kernel table for `isa`; falls back to scalar when unavailable.
const RowOps& ops_for(Isa isa) noexcept;

/// Table used by the matrix layer.
const RowOps& active() noexcept;

/// Overrides the dispatch choice (tests and benchmarking). Unavailable ISAs are ignored.
void force(Isa isa) noexcept;

std::string_view name(Isa isa) noexcept;

namespace detail {
#if defined(STRANG_WITH_AVX2)
const RowOps& avx2_ops() noexcept;
#endif
}  // namespace detail

}  // namespace strang::kernels
