#include "trinomial/binpoly.hpp"

#include <algorithm>
#include <bit>

#include "clmul.hpp"
#include "trinomial/errors.hpp"

namespace trinomial {

BinPoly::BinPoly(std::uint64_t bits) {
  if (bits != 0) words_.push_back(bits);
}

BinPoly::BinPoly(std::vector<std::uint64_t> words) : words_(std::move(words)) { trim(); }

BinPoly BinPoly::monomial(unsigned degree) {
  BinPoly p;
  p.set_bit(degree);
  return p;
}

BinPoly BinPoly::from_hex(std::string_view text) {
  if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty hex literal");
  BinPoly p;
  unsigned pos = 0;
  for (auto it = text.rbegin(); it != text.rend(); ++it, pos += 4) {
    const char c = *it;
    unsigned nib;
    if (c >= '0' && c <= '9') {
      nib = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      nib = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      nib = c - 'A' + 10;
    } else {
      throw Error(ErrorCode::ParseError, "bad hex digit in '" + std::string(text) + "'");
    }
    for (unsigned b = 0; b < 4; ++b) {
      if (nib & (1u << b)) p.set_bit(pos + b);
    }
  }
  return p;
}

std::string BinPoly::to_hex() const {
  if (words_.empty()) return "0x0";
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  const int top_nibble = degree() / 4;
  for (int nib = top_nibble; nib >= 0; --nib) {
    const unsigned shift = static_cast<unsigned>(nib) * 4;
    out.push_back(kDigits[(words_[shift / 64] >> (shift % 64)) & 0xF]);
  }
  return "0x" + out;
}

int BinPoly::degree() const noexcept {
  if (words_.empty()) return -1;
  return static_cast<int>(64 * (words_.size() - 1)) + 63 - std::countl_zero(words_.back());
}

bool BinPoly::bit(unsigned i) const noexcept {
  const std::size_t w = i / 64;
  return w < words_.size() && ((words_[w] >> (i % 64)) & 1u);
}

void BinPoly::set_bit(unsigned i, bool value) {
  const std::size_t w = i / 64;
  if (value) {
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << (i % 64);
  } else if (w < words_.size()) {
    words_[w] &= ~(std::uint64_t{1} << (i % 64));
    trim();
  }
}

BinPoly BinPoly::operator+(const BinPoly& rhs) const {
  BinPoly r = *this;
  r += rhs;
  return r;
}

BinPoly& BinPoly::operator+=(const BinPoly& rhs) {
  if (rhs.words_.size() > words_.size()) words_.resize(rhs.words_.size(), 0);
  for (std::size_t i = 0; i < rhs.words_.size(); ++i) words_[i] ^= rhs.words_[i];
  trim();
  return *this;
}

BinPoly BinPoly::operator*(const BinPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  std::vector<std::uint64_t> out(words_.size() + rhs.words_.size(), 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.words_.size(); ++j) {
      const auto p = detail::clmul64(words_[i], rhs.words_[j]);
      out[i + j] ^= p.lo;
      out[i + j + 1] ^= p.hi;
    }
  }
  return BinPoly(std::move(out));
}

BinPoly BinPoly::operator<<(unsigned shift) const {
  if (is_zero()) return {};
  const unsigned ws = shift / 64, bs = shift % 64;
  std::vector<std::uint64_t> out(words_.size() + ws + 1, 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out[i + ws] ^= words_[i] << bs;
    if (bs) out[i + ws + 1] ^= words_[i] >> (64 - bs);
  }
  return BinPoly(std::move(out));
}

BinPoly BinPoly::operator%(const BinPoly& rhs) const {
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial remainder by zero");
  BinPoly r = *this;
  const int dm = rhs.degree();
  for (int d = r.degree(); d >= dm; d = r.degree()) r += rhs << static_cast<unsigned>(d - dm);
  return r;
}

std::strong_ordering BinPoly::operator<=>(const BinPoly& rhs) const noexcept {
  if (words_.size() != rhs.words_.size()) return words_.size() <=> rhs.words_.size();
  for (std::size_t i = words_.size(); i-- > 0;) {
    if (words_[i] != rhs.words_[i]) return words_[i] <=> rhs.words_[i];
  }
  return std::strong_ordering::equal;
}

void BinPoly::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

BinPoly gcd(BinPoly a, BinPoly b) {
  while (!b.is_zero()) {
    BinPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BinPoly mul_mod(const BinPoly& a, const BinPoly& b, const BinPoly& m) { return (a * b) % m; }

namespace {

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> primes;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

// x^(2^e) mod f by e squarings.
BinPoly frobenius_of_x(unsigned e, const BinPoly& f) {
  BinPoly r = BinPoly::monomial(1) % f;
  for (unsigned i = 0; i < e; ++i) r = mul_mod(r, r, f);
  return r;
}

}  // namespace

bool is_irreducible(const BinPoly& f) {
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  if (!f.bit(0)) return false;
  const BinPoly x = BinPoly::monomial(1);
  if (frobenius_of_x(static_cast<unsigned>(n), f) != x) return false;
  for (unsigned p : prime_divisors(static_cast<unsigned>(n))) {
    const BinPoly h = frobenius_of_x(static_cast<unsigned>(n) / p, f) + x;
    if (gcd(f, h).degree() != 0) return false;
  }
  return true;
}

BinPoly smallest_irreducible(unsigned degree) {
  if (degree == 0) throw Error(ErrorCode::UnsupportedDegree, "degree must be positive");
  BinPoly candidate = BinPoly::monomial(degree);
  if (degree == 1) return BinPoly::monomial(1);
  candidate.set_bit(0);
  // Enumerate odd encodings upward; the low-order bits form a binary counter.
  for (;;) {
    if (is_irreducible(candidate)) return candidate;
    unsigned i = 1;
    while (candidate.bit(i)) candidate.set_bit(i++, false);
    if (i >= degree) throw Error(ErrorCode::InternalInvariant, "no irreducible polynomial found");
    candidate.set_bit(i);
  }
}

}  // namespace trinomial
