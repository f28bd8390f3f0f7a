// Built with -mpclmul on x86-64; selected at run time.
#include "kernels.hpp"

#if defined(__x86_64__) && defined(__PCLMUL__)
#include <immintrin.h>

namespace trinomial::detail {
namespace {

struct HardwareClmul {
  static Wide mul(std::uint64_t a, std::uint64_t b) noexcept {
    const __m128i r = _mm_clmulepi64_si128(_mm_cvtsi64_si128(static_cast<long long>(a)),
                                           _mm_cvtsi64_si128(static_cast<long long>(b)), 0x00);
    return {static_cast<std::uint64_t>(_mm_cvtsi128_si64(r)),
            static_cast<std::uint64_t>(_mm_cvtsi128_si64(_mm_unpackhi_epi64(r, r)))};
  }
  static Wide square(std::uint64_t a) noexcept { return mul(a, a); }
};

}  // namespace

KernelSet hardware_kernels() noexcept { return Kernels<HardwareClmul>::set(); }
bool have_hardware_clmul() noexcept { return __builtin_cpu_supports("pclmul"); }

}  // namespace trinomial::detail

#else

namespace trinomial::detail {

KernelSet hardware_kernels() noexcept { return portable_kernels(); }
bool have_hardware_clmul() noexcept { return false; }

}  // namespace trinomial::detail

#endif
