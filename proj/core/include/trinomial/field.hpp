#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "trinomial/bigint.hpp"
#include "trinomial/binpoly.hpp"

namespace trinomial {

inline constexpr unsigned kMaxDegree = 512;
inline constexpr unsigned kMaxWords = kMaxDegree / 64;

using Words = std::array<std::uint64_t, kMaxWords>;

class BaseField;

namespace detail {

/// Layout of GF(2^n) as seen by the word kernels.
struct FieldShape {
  unsigned n = 0;
  unsigned words = 0;
  std::uint64_t top_mask = 0;
  unsigned low_words = 0;
  Words low{};  // modulus minus x^n
};

struct KernelSet {
  Words (*mul)(const FieldShape&, const Words&, const Words&) noexcept;
  Words (*square)(const FieldShape&, const Words&) noexcept;
};

}  // namespace detail

/// Element of GF(2^n) in polynomial basis. Holds a non-owning pointer to its
/// field; the field must outlive the element. A default-constructed element is
/// unbound and only usable as a placeholder.
class BaseElt {
 public:
  BaseElt() = default;
  BaseElt(const BaseField* field, const Words& words) : field_(field), words_(words) {}

  const BaseField& field() const;
  const BaseField* field_ptr() const noexcept { return field_; }
  const Words& words() const noexcept { return words_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  BaseElt operator+(const BaseElt& rhs) const;
  BaseElt operator-(const BaseElt& rhs) const { return *this + rhs; }
  BaseElt operator*(const BaseElt& rhs) const;
  BaseElt operator/(const BaseElt& rhs) const { return *this * rhs.inv(); }
  BaseElt& operator+=(const BaseElt& rhs) { return *this = *this + rhs; }
  BaseElt& operator*=(const BaseElt& rhs) { return *this = *this * rhs; }

  BaseElt square() const;
  /// x^(2^j) for any integer j (negative j means repeated square roots).
  BaseElt frob(long long j) const;
  BaseElt inv() const;
  BaseElt pow(const BigInt& e) const;
  BaseElt zero_like() const;
  BaseElt one_like() const;

  /// Absolute trace to GF(2), 0 or 1.
  int trace() const;

  BinPoly to_poly() const;
  std::string to_hex() const { return to_poly().to_hex(); }

  bool operator==(const BaseElt& rhs) const noexcept { return words_ == rhs.words_; }
  /// Orders by integer value of the encoding.
  std::strong_ordering operator<=>(const BaseElt& rhs) const noexcept;

 private:
  const BaseField* field_ = nullptr;
  Words words_{};
};

/// GF(2^n) = GF(2)[x]/(m(x)). Immutable after construction; share it through
/// the shared_ptr returned by build_base_field.
class BaseField {
 public:
  BaseField(unsigned n, BinPoly modulus);
  BaseField(const BaseField&) = delete;
  BaseField& operator=(const BaseField&) = delete;

  unsigned degree() const noexcept { return n_; }
  unsigned word_count() const noexcept { return shape_.words; }
  const BinPoly& modulus() const noexcept { return modulus_; }
  /// 2^n - 1
  const BigInt& group_order() const noexcept { return group_order_; }
  /// 2^n + 1
  const BigInt& circle_order() const noexcept { return circle_order_; }

  BaseElt zero() const { return {this, Words{}}; }
  BaseElt one() const;
  /// Reduces an arbitrary polynomial modulo the field modulus.
  BaseElt from_poly(const BinPoly& p) const;
  BaseElt from_hex(std::string_view text) const;
  /// Element whose encoding is `bits`; requires n <= 64 or the value to fit.
  BaseElt from_u64(std::uint64_t bits) const;

  template <class Urbg>
  BaseElt random(Urbg& gen) const {
    Words w{};
    for (unsigned i = 0; i < shape_.words; ++i) w[i] = static_cast<std::uint64_t>(gen());
    w[shape_.words - 1] &= shape_.top_mask;
    return {this, w};
  }

  bool operator==(const BaseField& rhs) const noexcept { return modulus_ == rhs.modulus_; }

  // Word-level kernels, exposed for the tower.
  Words add(const Words& a, const Words& b) const noexcept;
  Words mul(const Words& a, const Words& b) const noexcept { return kernels_.mul(shape_, a, b); }
  Words square(const Words& a) const noexcept { return kernels_.square(shape_, a); }
  Words inv(const Words& a) const;

 private:
  unsigned n_;
  BinPoly modulus_;
  detail::FieldShape shape_;
  detail::KernelSet kernels_;
  BigInt group_order_;
  BigInt circle_order_;
};

/// Builds GF(2^n). Without a modulus the smallest irreducible polynomial of
/// degree n by integer encoding is used.
std::shared_ptr<const BaseField> build_base_field(unsigned n,
                                                  const std::optional<BinPoly>& modulus = std::nullopt);

}  // namespace trinomial
