#include "trinomial/cyclic.hpp"

#include "trinomial/errors.hpp"

namespace trinomial {

const char* to_string(CyclicGroup g) noexcept { return g == CyclicGroup::MultBase ? "mult-base" : "circle"; }

const char* to_string(Locus l) noexcept { return l == Locus::BaseStar ? "base" : "circle"; }

const BigInt& group_order(const TowerField& tower, CyclicGroup group) {
  return group == CyclicGroup::MultBase ? tower.base().group_order() : tower.base().circle_order();
}

bool in_unit_circle(const TowerElt& c) {
  if (c.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero is not in any multiplicative group");
  return c.norm().is_one();
}

namespace {

void require_member(const TowerElt& t, CyclicGroup group) {
  if (group == CyclicGroup::MultBase) {
    if (t.is_zero() || !t.is_base()) throw Error(ErrorCode::BadGroup, t.to_string() + " is not in GF(2^n)^*");
  } else if (t.is_zero() || !in_unit_circle(t)) {
    throw Error(ErrorCode::BadGroup, t.to_string() + " is not on the unit circle");
  }
}

unsigned strip_threes(BigInt& m) {
  unsigned s = 0;
  while (m % 3 == 0) {
    m /= 3;
    ++s;
  }
  return s;
}

}  // namespace

bool is_cube(const TowerElt& t, CyclicGroup group) {
  const unsigned n = t.tower().base().degree();
  const bool needs_even = group == CyclicGroup::MultBase;
  if ((n % 2 == 0) != needs_even) {
    throw Error(ErrorCode::BadGroup, std::string("3 does not divide the order of ") + to_string(group) +
                                         " for n = " + std::to_string(n));
  }
  require_member(t, group);
  return t.pow(group_order(t.tower(), group) / 3).is_one();
}

TowerElt find_non_cube(const TowerField& tower, CyclicGroup group) {
  const BigInt& order = group_order(tower, group);
  if (order % 3 != 0) throw Error(ErrorCode::BadGroup, "group order is prime to 3");
  const BigInt third = order / 3;
  const BaseField& f = tower.base();
  for (std::uint64_t i = 2;; ++i) {
    TowerElt cand;
    if (group == CyclicGroup::MultBase) {
      cand = tower.embed(f.from_u64(i));
    } else {
      // (u + i)^(2^n - 1) lands on the unit circle.
      const TowerElt x = tower.make(f.from_u64(i - 2), f.one());
      cand = x.conj() / x;
    }
    if (!cand.pow(third).is_one()) return cand;
  }
}

TowerElt amm_cube_root(const TowerElt& t, const BigInt& order, const TowerElt& non_cube) {
  // order = 3^e * s with 3 !| s.
  BigInt s = order;
  const unsigned e = strip_threes(s);
  if (e == 0) throw Error(ErrorCode::BadGroup, "group order is prime to 3");
  if (!t.pow(order / 3).is_one()) throw Error(ErrorCode::NoRoot, t.to_string() + " is not a cube");

  // Only s | 3 * alpha - 1 is needed; for s = 1 any alpha works.
  const BigInt alpha = s == 1 ? BigInt(1) : mod_inverse(3, s);
  const BigInt pow3_e1 = boost::multiprecision::pow(BigInt(3), e - 1);

  const TowerElt a = non_cube.pow(pow3_e1 * s);  // primitive cube root of unity
  TowerElt b = t.pow(3 * alpha - 1);             // lies in the Sylow-3 subgroup
  TowerElt c = non_cube.pow(s);                  // generator of the Sylow-3 subgroup
  TowerElt h = t.one_like();
  const TowerElt a2 = a * a;

  BigInt pow3 = pow3_e1;
  for (unsigned i = 1; i < e; ++i) {
    pow3 /= 3;  // 3^(e-1-i)
    const TowerElt d = b.pow(pow3);
    unsigned j;
    if (d.is_one()) {
      j = 0;
    } else if (d == a) {
      j = 2;
    } else if (d == a2) {
      j = 1;
    } else {
      throw Error(ErrorCode::InternalInvariant, "AMM digit is not a cube root of unity");
    }
    const TowerElt c3 = c * c * c;
    for (unsigned r = 0; r < j; ++r) {
      b = b * c3;
      h = h * c;
    }
    c = c3;
  }
  if (!b.is_one()) throw Error(ErrorCode::InternalInvariant, "AMM did not clear the Sylow-3 part");
  return t.pow(alpha) * h;
}

TowerElt cyclic_root(const TowerElt& t, const BigInt& m, CyclicGroup group) {
  require_member(t, group);
  if (m <= 0) throw Error(ErrorCode::BadParams, "root index must be positive");
  const TowerField& tower = t.tower();
  const BigInt& order = group_order(tower, group);
  const BigInt d = gcd(m, order);
  if (d == 1) return t.pow(mod_inverse(m, order));
  if (d != 3) throw Error(ErrorCode::BadParams, "gcd(m, order) = " + d.str() + " is not supported");
  if (!t.pow(order / 3).is_one()) throw Error(ErrorCode::NoRoot, t.to_string() + " is not a cube");

  // m = 3^s * m1: undo m1 by an exponent inverse, then take s cube roots.
  // With s >= 2 the group order carries a single factor 3, and each AMM
  // root lands in the 3-free part, so it is again a cube.
  BigInt m1 = m;
  const unsigned s = strip_threes(m1);
  TowerElt r = t.pow(mod_inverse(m1, order));
  const TowerElt non_cube = find_non_cube(tower, group);
  for (unsigned i = 0; i < s; ++i) r = amm_cube_root(r, order, non_cube);
  return r;
}

Decomposition decompose(const TowerField& tower, const BaseElt& z) {
  if (z.is_zero()) throw Error(ErrorCode::DivisionByZero, "cannot decompose zero");
  const BaseElt zi = z.inv();
  // c + 1/c = z  <=>  (c/z)^2 + c/z = 1/z^2.
  const TowerElt y = tower.artin_schreier_root(zi.square());
  const TowerElt c = y * z;
  const Locus locus = zi.trace() == 0 ? Locus::BaseStar : Locus::CircleStar;
  if ((locus == Locus::BaseStar) != c.is_base()) {
    throw Error(ErrorCode::InternalInvariant, "decomposition landed outside the predicted locus");
  }
  return {c, locus};
}

}  // namespace trinomial
