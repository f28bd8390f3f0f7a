#include "trinomial/bigint.hpp"

#include "trinomial/errors.hpp"

namespace trinomial {

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt x = abs(a), y = abs(b);
  while (y != 0) {
    BigInt r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  if (m <= 0) throw Error(ErrorCode::BadParams, "modulus must be positive");
  BigInt old_r = a % m, r = m;
  if (old_r < 0) old_r += m;
  BigInt old_s = 1, s = 0;
  while (r != 0) {
    BigInt quot = old_r / r;
    BigInt tmp = old_r - quot * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - quot * s;
    old_s = std::move(s);
    s = std::move(tmp);
  }
  if (old_r != 1) throw Error(ErrorCode::BadParams, "value is not invertible modulo " + m.str());
  BigInt inv = old_s % m;
  if (inv < 0) inv += m;
  return inv;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace trinomial
