#pragma once

#include <cstdint>

namespace trinomial::detail {

struct Wide {
  std::uint64_t lo;
  std::uint64_t hi;
};

Wide clmul64(std::uint64_t a, std::uint64_t b) noexcept;

/// Spreads the 32 low bits of each half of x into alternating positions,
/// i.e. the carryless square of a 64-bit word.
Wide clsquare64(std::uint64_t x) noexcept;

}  // namespace trinomial::detail
