#include "strang/kernels.hpp"

namespace strang::kernels {

namespace {

inline Elem lookup(const NibbleTables& t, Elem x) noexcept {
  return static_cast<Elem>(t.lo[x & 15u] ^ t.hi[x >> 4]);
}

void axpy(Elem* dst, const Elem* src, std::size_t n, const NibbleTables& c) {
  for (std::size_t i = 0; i < n; ++i) dst[i] ^= lookup(c, src[i]);
}

void add(Elem* dst, const Elem* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

void scale(Elem* dst, std::size_t n, const NibbleTables& c) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = lookup(c, dst[i]);
}

}  // namespace

const RowOps& scalar_ops() noexcept {
  static const RowOps ops{&axpy, &add, &scale, Isa::scalar};
  return ops;
}

}  // namespace strang::kernels
