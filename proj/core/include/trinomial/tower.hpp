#pragma once

#include <compare>
#include <memory>
#include <string>
#include <string_view>

#include "trinomial/field.hpp"

namespace trinomial {

class TowerField;

/// Element c0 + c1*u of GF(2^(2n)) = GF(2^n)[u]/(u^2 + u + delta).
class TowerElt {
 public:
  TowerElt() = default;
  TowerElt(const TowerField* tower, BaseElt c0, BaseElt c1) : tower_(tower), c0_(c0), c1_(c1) {}

  const TowerField& tower() const;
  const TowerField* tower_ptr() const noexcept { return tower_; }
  const BaseElt& c0() const noexcept { return c0_; }
  const BaseElt& c1() const noexcept { return c1_; }

  bool is_zero() const noexcept { return c0_.is_zero() && c1_.is_zero(); }
  bool is_one() const noexcept { return c0_.is_one() && c1_.is_zero(); }
  /// True when the element lies in the embedded copy of GF(2^n).
  bool is_base() const noexcept { return c1_.is_zero(); }
  /// The GF(2^n) coordinate; throws InternalInvariant when !is_base().
  BaseElt as_base() const;

  TowerElt operator+(const TowerElt& rhs) const;
  TowerElt operator-(const TowerElt& rhs) const { return *this + rhs; }
  TowerElt operator*(const TowerElt& rhs) const;
  TowerElt operator/(const TowerElt& rhs) const { return *this * rhs.inv(); }
  TowerElt& operator+=(const TowerElt& rhs) { return *this = *this + rhs; }
  TowerElt& operator*=(const TowerElt& rhs) { return *this = *this * rhs; }
  TowerElt operator*(const BaseElt& rhs) const;

  TowerElt square() const;
  /// x^(2^j), j taken modulo 2n.
  TowerElt frob(long long j) const;
  /// x^(2^n): (c0 + c1) + c1*u.
  TowerElt conj() const;
  /// x * conj(x), always in GF(2^n).
  BaseElt norm() const;
  TowerElt inv() const;
  TowerElt pow(const BigInt& e) const;
  TowerElt zero_like() const;
  TowerElt one_like() const;

  /// "[0x.., 0x..]"
  std::string to_string() const;

  bool operator==(const TowerElt& rhs) const noexcept { return c0_ == rhs.c0_ && c1_ == rhs.c1_; }
  /// Orders by the encoding c0 + c1 * 2^n.
  std::strong_ordering operator<=>(const TowerElt& rhs) const noexcept;

 private:
  const TowerField* tower_ = nullptr;
  BaseElt c0_;
  BaseElt c1_;
};

/// The quadratic extension GF(2^(2n)) together with the fixed constants the
/// solver needs: delta (first trace-one element), zeta (a unit-circle element
/// other than 1) and omega (a primitive cube root of unity).
class TowerField {
 public:
  explicit TowerField(std::shared_ptr<const BaseField> base);
  TowerField(const TowerField&) = delete;
  TowerField& operator=(const TowerField&) = delete;

  const BaseField& base() const noexcept { return *base_; }
  const std::shared_ptr<const BaseField>& base_ptr() const noexcept { return base_; }
  unsigned degree() const noexcept { return 2 * base_->degree(); }

  const BaseElt& delta() const noexcept { return delta_; }
  const TowerElt& zeta() const noexcept { return zeta_; }
  const TowerElt& omega() const noexcept { return omega_; }
  /// 1 / (zeta + 1)
  const TowerElt& inv_zeta_plus_one() const noexcept { return inv_zeta_plus_one_; }
  /// 2^(2n) - 1
  const BigInt& group_order() const noexcept { return order_; }

  TowerElt zero() const;
  TowerElt one() const;
  TowerElt u() const;
  TowerElt embed(const BaseElt& x) const;
  TowerElt make(const BaseElt& c0, const BaseElt& c1) const;
  /// Parses "[0x.., 0x..]".
  TowerElt parse(std::string_view text) const;

  template <class Urbg>
  TowerElt random(Urbg& gen) const {
    BaseElt c0 = base_->random(gen);
    BaseElt c1 = base_->random(gen);
    return make(c0, c1);
  }

  /// One root y of y^2 + y = b for b in GF(2^n), namely
  /// sum_{i<n} (b/(zeta+1))^(2^i); the other root is y + 1.
  TowerElt artin_schreier_root(const BaseElt& b) const;

 private:
  std::shared_ptr<const BaseField> base_;
  BaseElt delta_;
  bool delta_is_one_ = false;
  TowerElt zeta_;
  TowerElt omega_;
  TowerElt inv_zeta_plus_one_;
  BigInt order_;

  friend class TowerElt;
};

std::shared_ptr<const TowerField> build_tower(std::shared_ptr<const BaseField> base);

}  // namespace trinomial
