#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace trinomial {

/// Polynomial over GF(2) stored as a little-endian bitset: bit i of the
/// word array is the coefficient of x^i. The word array never carries
/// trailing zero words, so the zero polynomial is the empty array.
class BinPoly {
 public:
  BinPoly() = default;
  explicit BinPoly(std::uint64_t bits);
  explicit BinPoly(std::vector<std::uint64_t> words);

  static BinPoly monomial(unsigned degree);

  /// Parses "0x..." (or bare) hexadecimal.
  static BinPoly from_hex(std::string_view text);
  std::string to_hex() const;

  /// Degree, or -1 for the zero polynomial.
  int degree() const noexcept;
  bool is_zero() const noexcept { return words_.empty(); }
  bool bit(unsigned i) const noexcept;
  void set_bit(unsigned i, bool value = true);

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  BinPoly operator+(const BinPoly& rhs) const;
  BinPoly& operator+=(const BinPoly& rhs);
  BinPoly operator*(const BinPoly& rhs) const;
  BinPoly operator<<(unsigned shift) const;

  /// Remainder modulo a nonzero polynomial.
  BinPoly operator%(const BinPoly& rhs) const;

  bool operator==(const BinPoly& rhs) const = default;
  /// Orders by integer value of the encoding.
  std::strong_ordering operator<=>(const BinPoly& rhs) const noexcept;

 private:
  void trim();

  std::vector<std::uint64_t> words_;
};

BinPoly gcd(BinPoly a, BinPoly b);

/// (a * b) mod m.
BinPoly mul_mod(const BinPoly& a, const BinPoly& b, const BinPoly& m);

/// Rabin's irreducibility test over GF(2).
bool is_irreducible(const BinPoly& f);

/// Smallest irreducible polynomial of the given degree by integer encoding.
BinPoly smallest_irreducible(unsigned degree);

}  // namespace trinomial
