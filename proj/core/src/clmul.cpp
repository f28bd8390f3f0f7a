#include "clmul.hpp"

#include "kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define TRINOMIAL_HAVE_X86 1
#endif

namespace trinomial::detail {
namespace {

#ifdef TRINOMIAL_HAVE_X86
__attribute__((target("pclmul,sse2"))) Wide clmul64_hw(std::uint64_t a, std::uint64_t b) noexcept {
  const __m128i va = _mm_set_epi64x(0, static_cast<long long>(a));
  const __m128i vb = _mm_set_epi64x(0, static_cast<long long>(b));
  const __m128i r = _mm_clmulepi64_si128(va, vb, 0x00);
  return {static_cast<std::uint64_t>(_mm_cvtsi128_si64(r)),
          static_cast<std::uint64_t>(_mm_cvtsi128_si64(_mm_unpackhi_epi64(r, r)))};
}

const bool kHavePclmul = __builtin_cpu_supports("pclmul");
#endif

}  // namespace

Wide clmul64(std::uint64_t a, std::uint64_t b) noexcept {
#ifdef TRINOMIAL_HAVE_X86
  if (kHavePclmul) return clmul64_hw(a, b);
#endif
  return clmul64_portable(a, b);
}

Wide clsquare64(std::uint64_t x) noexcept {
  return {spread32(static_cast<std::uint32_t>(x)), spread32(static_cast<std::uint32_t>(x >> 32))};
}

}  // namespace trinomial::detail
