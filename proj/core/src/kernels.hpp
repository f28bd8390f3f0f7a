#pragma once

#include <algorithm>
#include <array>
#include <cstdint>

#include "clmul.hpp"
#include "trinomial/field.hpp"

namespace trinomial::detail {

KernelSet portable_kernels() noexcept;
/// Same kernels built on PCLMULQDQ; only valid when have_hardware_clmul().
KernelSet hardware_kernels() noexcept;
bool have_hardware_clmul() noexcept;

inline Wide clmul64_portable(std::uint64_t a, std::uint64_t b) noexcept {
  // 4-bit window over b, table of a * {0..15}.
  std::uint64_t table_lo[16];
  std::uint64_t table_hi[16];
  table_lo[0] = 0;
  table_hi[0] = 0;
  for (int i = 1; i < 16; ++i) {
    std::uint64_t lo = 0, hi = 0;
    for (int bit = 0; bit < 4; ++bit) {
      if (i & (1 << bit)) {
        lo ^= a << bit;
        hi ^= bit ? a >> (64 - bit) : 0;
      }
    }
    table_lo[i] = lo;
    table_hi[i] = hi;
  }
  std::uint64_t lo = 0, hi = 0;
  for (int shift = 60; shift >= 0; shift -= 4) {
    hi = (hi << 4) | (lo >> 60);
    lo <<= 4;
    const unsigned nib = (b >> shift) & 0xF;
    lo ^= table_lo[nib];
    hi ^= table_hi[nib];
  }
  return {lo, hi};
}

inline std::uint64_t spread32(std::uint32_t x) noexcept {
  std::uint64_t v = x;
  v = (v | (v << 16)) & 0x0000FFFF0000FFFFull;
  v = (v | (v << 8)) & 0x00FF00FF00FF00FFull;
  v = (v | (v << 4)) & 0x0F0F0F0F0F0F0F0Full;
  v = (v | (v << 2)) & 0x3333333333333333ull;
  v = (v | (v << 1)) & 0x5555555555555555ull;
  return v;
}

/// Field kernels over a carryless 64x64 multiply C::mul and square C::square.
template <class C>
struct Kernels {
  using Wide2 = std::array<std::uint64_t, 2 * kMaxWords>;

  // n <= 64: fold (hi:lo) >> n back with the low part of the modulus.
  static std::uint64_t reduce1(const FieldShape& s, std::uint64_t lo, std::uint64_t hi) noexcept {
    const unsigned n = s.n;
    for (;;) {
      const std::uint64_t t = n == 64 ? hi : (lo >> n) | (hi << (64 - n));
      if (t == 0) return lo;
      lo &= s.top_mask;
      const Wide p = C::mul(t, s.low[0]);
      lo ^= p.lo;
      hi = p.hi;
    }
  }

  static Words reduce(const FieldShape& s, Wide2& r) noexcept {
    const unsigned sw = s.n / 64, sb = s.n % 64;
    unsigned len = 2 * s.words;
    for (;;) {
      Wide2 hi;
      unsigned hi_len = 0;
      for (unsigned i = 0; i + sw < len; ++i) {
        std::uint64_t v = r[i + sw] >> sb;
        if (sb != 0 && i + sw + 1 < len) v |= r[i + sw + 1] << (64 - sb);
        hi[i] = v;
        if (v != 0) hi_len = i + 1;
      }
      if (hi_len == 0) break;
      r[sw] &= sb == 0 ? 0 : ((std::uint64_t{1} << sb) - 1);
      for (unsigned i = sw + 1; i < len; ++i) r[i] = 0;
      for (unsigned i = 0; i < hi_len; ++i) {
        for (unsigned j = 0; j < s.low_words; ++j) {
          const Wide p = C::mul(hi[i], s.low[j]);
          r[i + j] ^= p.lo;
          r[i + j + 1] ^= p.hi;
        }
      }
      len = std::max(sw + 1, hi_len + s.low_words + 1);
    }
    Words out{};
    for (unsigned i = 0; i < s.words; ++i) out[i] = r[i];
    return out;
  }

  static Words mul(const FieldShape& s, const Words& a, const Words& b) noexcept {
    Words out{};
    if (s.words == 1) {
      const Wide p = C::mul(a[0], b[0]);
      out[0] = reduce1(s, p.lo, p.hi);
      return out;
    }
    Wide2 r{};
    for (unsigned i = 0; i < s.words; ++i) {
      if (a[i] == 0) continue;
      for (unsigned j = 0; j < s.words; ++j) {
        const Wide p = C::mul(a[i], b[j]);
        r[i + j] ^= p.lo;
        r[i + j + 1] ^= p.hi;
      }
    }
    return reduce(s, r);
  }

  static Words square(const FieldShape& s, const Words& a) noexcept {
    if (s.words == 1) {
      Words out{};
      const Wide p = C::square(a[0]);
      out[0] = reduce1(s, p.lo, p.hi);
      return out;
    }
    Wide2 r{};
    for (unsigned i = 0; i < s.words; ++i) {
      const Wide p = C::square(a[i]);
      r[2 * i] = p.lo;
      r[2 * i + 1] = p.hi;
    }
    return reduce(s, r);
  }

  static KernelSet set() noexcept { return {&Kernels::mul, &Kernels::square}; }
};

}  // namespace trinomial::detail
