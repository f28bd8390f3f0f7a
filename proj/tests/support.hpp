#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "trinomial/field.hpp"
#include "trinomial/tower.hpp"

namespace testing_support {

using namespace trinomial;

inline std::shared_ptr<const TowerField> tower_of(unsigned n) { return build_tower(build_base_field(n)); }

/// Shift-and-add arithmetic on raw encodings, independent of the library
/// kernels. Valid for n <= 32.
struct NaiveField {
  unsigned n;
  std::uint64_t modulus;

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t r = 0;
    for (unsigned i = 0; i < n; ++i) {
      if ((b >> i) & 1) r ^= a;
      a <<= 1;
      if ((a >> n) & 1) a ^= modulus;
    }
    return r;
  }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e != 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  std::uint64_t trace(std::uint64_t a) const {
    std::uint64_t acc = 0;
    for (unsigned i = 0; i < n; ++i) {
      acc ^= a;
      a = mul(a, a);
    }
    return acc;
  }
};

/// Irreducibility by trial division over all polynomials of degree <= d/2.
inline bool naive_irreducible(std::uint64_t p) {
  const int d = 63 - __builtin_clzll(p);
  auto mod = [](std::uint64_t a, std::uint64_t b) {
    const int db = 63 - __builtin_clzll(b);
    for (int da = 63 - __builtin_clzll(a | 1); a != 0 && da >= db; da = 63 - __builtin_clzll(a | 1)) {
      a ^= b << (da - db);
    }
    return a;
  };
  for (std::uint64_t q = 2; q < (std::uint64_t{1} << (d / 2 + 1)); ++q) {
    if (mod(p, q) == 0) return false;
  }
  return true;
}

inline std::set<std::string> hex_set(const std::vector<BaseElt>& xs) {
  std::set<std::string> out;
  for (const auto& x : xs) out.insert(x.to_hex());
  return out;
}

inline BaseElt elt(const BaseField& f, std::uint64_t bits) { return f.from_u64(bits); }

}  // namespace testing_support
