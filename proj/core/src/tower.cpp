#include "trinomial/tower.hpp"

#include "trinomial/errors.hpp"

namespace trinomial {
namespace {

const TowerField& common_tower(const TowerElt& a, const TowerElt& b) {
  if (a.tower_ptr() != b.tower_ptr()) {
    throw Error(ErrorCode::FieldMismatch, "operands belong to different towers");
  }
  return a.tower();
}

}  // namespace

// ---------------------------------------------------------------------------
// TowerField

TowerField::TowerField(std::shared_ptr<const BaseField> base) : base_(std::move(base)) {
  const BaseField& f = *base_;
  const unsigned n = f.degree();
  order_ = pow2(2 * n) - 1;

  // The trace is linear, so the smallest trace-1 element is the lowest basis
  // monomial x^j with Tr(x^j) = 1.
  const BaseElt x = f.from_u64(2);
  for (BaseElt cand = f.one();; cand = cand * x) {
    if (cand.trace() == 1) {
      delta_ = cand;
      break;
    }
  }
  delta_is_one_ = delta_.is_one();

  // Every nonzero base element has x^(2^n - 1) = 1, so in encoding order the
  // first hit of the scan is u itself.
  zeta_ = u().pow(f.group_order());
  if (zeta_.is_one() || !zeta_.norm().is_one()) {
    throw Error(ErrorCode::InternalInvariant, "zeta is not a nontrivial unit-circle element");
  }
  inv_zeta_plus_one_ = (zeta_ + one()).inv();

  TowerElt w;
  if (n % 2 == 1) {
    // delta = 1, so u^2 + u + 1 = 0.
    w = u();
  } else {
    // GF(4) sits inside GF(2^n); x^((2^n - 1)/3) != 1 for any non-cube x.
    const BigInt third = f.group_order() / 3;
    for (std::uint64_t i = 2;; ++i) {
      const BaseElt r = f.from_u64(i).pow(third);
      if (!r.is_one()) {
        w = embed(r);
        break;
      }
    }
  }
  const TowerElt w2 = w + one();
  omega_ = w2 < w ? w2 : w;
  if (omega_.is_one() || !(omega_ * omega_ * omega_).is_one()) {
    throw Error(ErrorCode::InternalInvariant, "omega is not a primitive cube root of unity");
  }
}

TowerElt TowerField::zero() const { return {this, base_->zero(), base_->zero()}; }
TowerElt TowerField::one() const { return {this, base_->one(), base_->zero()}; }
TowerElt TowerField::u() const { return {this, base_->zero(), base_->one()}; }

TowerElt TowerField::embed(const BaseElt& x) const {
  if (x.field_ptr() != base_.get()) throw Error(ErrorCode::FieldMismatch, "element is not from the base field");
  return {this, x, base_->zero()};
}

TowerElt TowerField::make(const BaseElt& c0, const BaseElt& c1) const {
  if (c0.field_ptr() != base_.get() || c1.field_ptr() != base_.get()) {
    throw Error(ErrorCode::FieldMismatch, "coordinates are not from the base field");
  }
  return {this, c0, c1};
}

TowerElt TowerField::parse(std::string_view text) const {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw Error(ErrorCode::ParseError, "tower element must look like [0x.., 0x..]");
  }
  text = text.substr(1, text.size() - 2);
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw Error(ErrorCode::ParseError, "tower element needs two coordinates");
  return make(base_->from_hex(trim(text.substr(0, comma))), base_->from_hex(trim(text.substr(comma + 1))));
}

TowerElt TowerField::artin_schreier_root(const BaseElt& b) const {
  const TowerElt x = embed(b) * inv_zeta_plus_one_;
  TowerElt acc = x, t = x;
  for (unsigned i = 1; i < base_->degree(); ++i) {
    t = t.square();
    acc += t;
  }
  return acc;
}

std::shared_ptr<const TowerField> build_tower(std::shared_ptr<const BaseField> base) {
  if (!base) throw Error(ErrorCode::BadParams, "null base field");
  return std::make_shared<const TowerField>(std::move(base));
}

// ---------------------------------------------------------------------------
// TowerElt

const TowerField& TowerElt::tower() const {
  if (tower_ == nullptr) throw Error(ErrorCode::FieldMismatch, "element is not bound to a tower");
  return *tower_;
}

BaseElt TowerElt::as_base() const {
  if (!is_base()) throw Error(ErrorCode::InternalInvariant, "tower element " + to_string() + " is not in GF(2^n)");
  return c0_;
}

TowerElt TowerElt::operator+(const TowerElt& rhs) const {
  const TowerField& t = common_tower(*this, rhs);
  return {&t, c0_ + rhs.c0_, c1_ + rhs.c1_};
}

TowerElt TowerElt::operator*(const TowerElt& rhs) const {
  const TowerField& t = common_tower(*this, rhs);
  const BaseField& f = *t.base_;
  // u^2 = u + delta; Karatsuba on the coordinates.
  const Words m0 = f.mul(c0_.words(), rhs.c0_.words());
  const Words m1 = f.mul(c1_.words(), rhs.c1_.words());
  const Words m2 = f.mul(f.add(c0_.words(), c1_.words()), f.add(rhs.c0_.words(), rhs.c1_.words()));
  const Words d1 = t.delta_is_one_ ? m1 : f.mul(m1, t.delta_.words());
  return {&t, BaseElt(&f, f.add(m0, d1)), BaseElt(&f, f.add(m2, m0))};
}

TowerElt TowerElt::operator*(const BaseElt& rhs) const {
  const TowerField& t = tower();
  return {&t, c0_ * rhs, c1_ * rhs};
}

TowerElt TowerElt::square() const {
  const TowerField& t = tower();
  const BaseField& f = *t.base_;
  const Words s0 = f.square(c0_.words());
  const Words s1 = f.square(c1_.words());
  const Words d1 = t.delta_is_one_ ? s1 : f.mul(s1, t.delta_.words());
  return {&t, BaseElt(&f, f.add(s0, d1)), BaseElt(&f, s1)};
}

TowerElt TowerElt::frob(long long j) const {
  const auto n = static_cast<long long>(tower().base_->degree());
  j %= 2 * n;
  if (j < 0) j += 2 * n;
  TowerElt r = *this;
  if (j >= n) {
    r = r.conj();
    j -= n;
  }
  for (long long i = 0; i < j; ++i) r = r.square();
  return r;
}

TowerElt TowerElt::conj() const { return {&tower(), c0_ + c1_, c1_}; }

BaseElt TowerElt::norm() const {
  const TowerField& t = tower();
  BaseElt d1 = c1_.square();
  if (!t.delta_is_one_) d1 *= t.delta_;
  return c0_.square() + c0_ * c1_ + d1;
}

TowerElt TowerElt::inv() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const BaseElt nrm_inv = norm().inv();
  return conj() * nrm_inv;
}

TowerElt TowerElt::pow(const BigInt& e) const {
  const TowerField& t = tower();
  if (e == 0) return t.one();
  const TowerElt base = e < 0 ? inv() : *this;
  const BigInt mag = e < 0 ? BigInt(-e) : e;
  TowerElt acc = base;
  for (long long bit = static_cast<long long>(msb(mag)) - 1; bit >= 0; --bit) {
    acc = acc.square();
    if (bit_test(mag, static_cast<unsigned>(bit))) acc = acc * base;
  }
  return acc;
}

TowerElt TowerElt::zero_like() const { return tower().zero(); }
TowerElt TowerElt::one_like() const { return tower().one(); }

std::string TowerElt::to_string() const { return "[" + c0_.to_hex() + ", " + c1_.to_hex() + "]"; }

std::strong_ordering TowerElt::operator<=>(const TowerElt& rhs) const noexcept {
  if (auto c = c1_ <=> rhs.c1_; c != 0) return c;
  return c0_ <=> rhs.c0_;
}

}  // namespace trinomial
