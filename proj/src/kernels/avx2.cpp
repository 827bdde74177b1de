#include <immintrin.h>

#include "strang/kernels.hpp"

namespace strang::kernels::detail {

namespace {

struct Lanes {
  __m256i lo;
  __m256i hi;
};

inline Lanes load_tables(const NibbleTables& c) noexcept {
  const __m128i lo = _mm_loadu_si128(reinterpret_cast<const __m128i*>(c.lo.data()));
  const __m128i hi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(c.hi.data()));
  return {_mm256_broadcastsi128_si256(lo), _mm256_broadcastsi128_si256(hi)};
}

inline __m256i mul32(const Lanes& t, __m256i x) noexcept {
  const __m256i mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(x, mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(x, 4), mask);
  return _mm256_xor_si256(_mm256_shuffle_epi8(t.lo, lo), _mm256_shuffle_epi8(t.hi, hi));
}

void axpy(Elem* dst, const Elem* src, std::size_t n, const NibbleTables& c) {
  const Lanes t = load_tables(c);
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, mul32(t, s)));
  }
  if (i < n) scalar_ops().axpy(dst + i, src + i, n - i, c);
}

void add(Elem* dst, const Elem* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, s));
  }
  if (i < n) scalar_ops().add(dst + i, src + i, n - i);
}

void scale(Elem* dst, std::size_t n, const NibbleTables& c) {
  const Lanes t = load_tables(c);
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), mul32(t, d));
  }
  if (i < n) scalar_ops().scale(dst + i, n - i, c);
}

}  // namespace

const RowOps& avx2_ops() noexcept {
  static const RowOps ops{&axpy, &add, &scale, Isa::avx2};
  return ops;
}

}  // namespace strang::kernels::detail
