#include <atomic>
#include <cstdlib>
#include <string>

#include "strang/kernels.hpp"

namespace strang::kernels {

namespace {

Isa detect() noexcept {
  if (const char* env = std::getenv("STRANG_ISA"); env != nullptr && std::string(env) == "scalar") {
    return Isa::scalar;
  }
  return available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

std::atomic<const RowOps*>& slot() noexcept {
  static std::atomic<const RowOps*> current{&ops_for(detect())};
  return current;
}

}  // namespace

bool available(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(STRANG_WITH_AVX2)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
  }
  return false;
}

const RowOps& ops_for(Isa isa) noexcept {
#if defined(STRANG_WITH_AVX2)
  if (isa == Isa::avx2 && available(Isa::avx2)) return detail::avx2_ops();
#endif
  (void)isa;
  return scalar_ops();
}

const RowOps& active() noexcept { return *slot().load(std::memory_order_relaxed); }

void force(Isa isa) noexcept {
  if (available(isa)) slot().store(&ops_for(isa), std::memory_order_relaxed);
}

std::string_view name(Isa isa) noexcept { return isa == Isa::avx2 ? "avx2" : "scalar"; }

}  // namespace strang::kernels
