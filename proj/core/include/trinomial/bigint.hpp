#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace trinomial {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(unsigned e) {
  BigInt r = 1;
  r <<= e;
  return r;
}

BigInt gcd(const BigInt& a, const BigInt& b);

/// Inverse of `a` modulo `m` (m > 0), reduced into [0, m). Throws BadParams
/// when gcd(a, m) != 1.
BigInt mod_inverse(const BigInt& a, const BigInt& m);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

}  // namespace trinomial
