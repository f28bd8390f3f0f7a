#include "trinomial/classic_polys.hpp"

namespace trinomial {

PolyParams make_poly_params(unsigned n, unsigned k) {
  if (n == 0 || k == 0) throw Error(ErrorCode::BadParams, "n and k must be positive");
  const std::uint64_t two_n = 2ull * n;
  if (gcd_u64(k, two_n) != 1) {
    throw Error(ErrorCode::BadParams, "k = " + std::to_string(k) + " is not invertible modulo 2n = " +
                                          std::to_string(two_n));
  }
  const auto k_prime = static_cast<unsigned>(mod_inverse(BigInt(k), BigInt(two_n)));
  return {n, k, k_prime};
}

}  // namespace trinomial
