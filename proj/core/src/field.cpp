#include "trinomial/field.hpp"

#include <bit>

#include "kernels.hpp"
#include "trinomial/errors.hpp"

namespace trinomial {
namespace {

const BaseField& common_field(const BaseElt& a, const BaseElt& b) {
  if (a.field_ptr() != b.field_ptr()) {
    if (a.field_ptr() == nullptr || b.field_ptr() == nullptr || !(*a.field_ptr() == *b.field_ptr())) {
      throw Error(ErrorCode::FieldMismatch, "operands belong to different fields");
    }
  }
  return a.field();
}

}  // namespace

// ---------------------------------------------------------------------------
// BaseField

BaseField::BaseField(unsigned n, BinPoly modulus) : n_(n), modulus_(std::move(modulus)) {
  if (n < 2) throw Error(ErrorCode::UnsupportedDegree, "extension degree must be at least 2");
  if (n > kMaxDegree) {
    throw Error(ErrorCode::UnsupportedDegree, "extension degree above " + std::to_string(kMaxDegree));
  }
  if (modulus_.degree() != static_cast<int>(n)) {
    throw Error(ErrorCode::BadParams, "modulus " + modulus_.to_hex() + " does not have degree " + std::to_string(n));
  }
  if (!is_irreducible(modulus_)) {
    throw Error(ErrorCode::NonIrreducible, "modulus " + modulus_.to_hex() + " is reducible");
  }
  shape_.n = n;
  shape_.words = (n + 63) / 64;
  shape_.top_mask = (n % 64 == 0) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n % 64)) - 1);
  BinPoly low = modulus_;
  low.set_bit(n, false);
  shape_.low_words = static_cast<unsigned>(low.words().size());
  for (unsigned i = 0; i < shape_.low_words; ++i) shape_.low[i] = low.words()[i];
  kernels_ = detail::have_hardware_clmul() ? detail::hardware_kernels() : detail::portable_kernels();
  group_order_ = pow2(n) - 1;
  circle_order_ = pow2(n) + 1;
}

BaseElt BaseField::one() const {
  Words w{};
  w[0] = 1;
  return {this, w};
}

BaseElt BaseField::from_poly(const BinPoly& p) const {
  const BinPoly r = p.degree() >= static_cast<int>(n_) ? p % modulus_ : p;
  Words w{};
  for (std::size_t i = 0; i < r.words().size(); ++i) w[i] = r.words()[i];
  return {this, w};
}

BaseElt BaseField::from_hex(std::string_view text) const {
  const BinPoly p = BinPoly::from_hex(text);
  if (p.degree() >= static_cast<int>(n_)) {
    throw Error(ErrorCode::ParseError, "element " + p.to_hex() + " has degree >= " + std::to_string(n_));
  }
  return from_poly(p);
}

BaseElt BaseField::from_u64(std::uint64_t bits) const {
  if (n_ >= 64 || (bits >> n_) == 0) {
    Words w{};
    w[0] = bits;
    return {this, w};
  }
  return from_poly(BinPoly(bits));
}

Words BaseField::add(const Words& a, const Words& b) const noexcept {
  Words r{};
  for (unsigned i = 0; i < shape_.words; ++i) r[i] = a[i] ^ b[i];
  return r;
}

Words BaseField::inv(const Words& a) const {
  // Itoh-Tsujii: a^-1 = (a^(2^(n-1) - 1))^2, with beta(m) = a^(2^m - 1) and
  // beta(s + t) = beta(s)^(2^t) * beta(t).
  bool nonzero = false;
  for (unsigned i = 0; i < shape_.words; ++i) nonzero |= a[i] != 0;
  if (!nonzero) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const unsigned e = n_ - 1;
  Words beta = a;
  unsigned cur = 1;
  for (int bit = std::bit_width(e) - 2; bit >= 0; --bit) {
    Words t = beta;
    for (unsigned i = 0; i < cur; ++i) t = square(t);
    beta = mul(t, beta);
    cur *= 2;
    if ((e >> bit) & 1u) {
      beta = mul(square(beta), a);
      cur += 1;
    }
  }
  return square(beta);
}

std::shared_ptr<const BaseField> build_base_field(unsigned n, const std::optional<BinPoly>& modulus) {
  if (n < 2) throw Error(ErrorCode::UnsupportedDegree, "extension degree must be at least 2");
  if (n > kMaxDegree) {
    throw Error(ErrorCode::UnsupportedDegree, "extension degree above " + std::to_string(kMaxDegree));
  }
  return std::make_shared<const BaseField>(n, modulus ? *modulus : smallest_irreducible(n));
}

// ---------------------------------------------------------------------------
// BaseElt

const BaseField& BaseElt::field() const {
  if (field_ == nullptr) throw Error(ErrorCode::FieldMismatch, "element is not bound to a field");
  return *field_;
}

bool BaseElt::is_zero() const noexcept {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool BaseElt::is_one() const noexcept {
  if (words_[0] != 1) return false;
  for (unsigned i = 1; i < kMaxWords; ++i) {
    if (words_[i] != 0) return false;
  }
  return true;
}

BaseElt BaseElt::operator+(const BaseElt& rhs) const {
  const BaseField& f = common_field(*this, rhs);
  return {&f, f.add(words_, rhs.words_)};
}

BaseElt BaseElt::operator*(const BaseElt& rhs) const {
  const BaseField& f = common_field(*this, rhs);
  return {&f, f.mul(words_, rhs.words_)};
}

BaseElt BaseElt::square() const { return {&field(), field().square(words_)}; }

BaseElt BaseElt::frob(long long j) const {
  const auto n = static_cast<long long>(field().degree());
  j %= n;
  if (j < 0) j += n;
  Words w = words_;
  for (long long i = 0; i < j; ++i) w = field_->square(w);
  return {field_, w};
}

BaseElt BaseElt::inv() const { return {&field(), field().inv(words_)}; }

BaseElt BaseElt::pow(const BigInt& e) const {
  const BaseField& f = field();
  if (e == 0) return f.one();
  BaseElt base = e < 0 ? inv() : *this;
  const BigInt mag = e < 0 ? BigInt(-e) : e;
  Words acc = base.words_;
  for (long long bit = static_cast<long long>(msb(mag)) - 1; bit >= 0; --bit) {
    acc = f.square(acc);
    if (bit_test(mag, static_cast<unsigned>(bit))) acc = f.mul(acc, base.words_);
  }
  return {&f, acc};
}

BaseElt BaseElt::zero_like() const { return field().zero(); }
BaseElt BaseElt::one_like() const { return field().one(); }

int BaseElt::trace() const {
  const BaseField& f = field();
  Words acc = words_, t = words_;
  for (unsigned i = 1; i < f.degree(); ++i) {
    t = f.square(t);
    acc = f.add(acc, t);
  }
  return static_cast<int>(acc[0] & 1u);
}

BinPoly BaseElt::to_poly() const { return BinPoly(std::vector<std::uint64_t>(words_.begin(), words_.end())); }

std::strong_ordering BaseElt::operator<=>(const BaseElt& rhs) const noexcept {
  for (unsigned i = kMaxWords; i-- > 0;) {
    if (words_[i] != rhs.words_[i]) return words_[i] <=> rhs.words_[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace trinomial
