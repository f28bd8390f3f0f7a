#pragma once

#include <concepts>
#include <utility>
#include <vector>

#include "trinomial/bigint.hpp"
#include "trinomial/errors.hpp"
#include "trinomial/field.hpp"
#include "trinomial/tower.hpp"

namespace trinomial {

template <class E>
concept FieldElement = requires(const E& a, const E& b, long long j, const BigInt& e) {
  { a + b } -> std::same_as<E>;
  { a * b } -> std::same_as<E>;
  { a.square() } -> std::same_as<E>;
  { a.frob(j) } -> std::same_as<E>;
  { a.inv() } -> std::same_as<E>;
  { a.pow(e) } -> std::same_as<E>;
  { a.zero_like() } -> std::same_as<E>;
  { a.one_like() } -> std::same_as<E>;
  { a.is_zero() } -> std::same_as<bool>;
};

/// Order of x -> x^2 on the field holding the element.
inline unsigned frobenius_period(const BaseElt& x) { return x.field().degree(); }
inline unsigned frobenius_period(const TowerElt& x) { return x.tower().degree(); }

/// k, its inverse k' modulo 2n, and n. q = 2^k is never materialised; every
/// x^(q^i) is a Frobenius power.
struct PolyParams {
  unsigned n;
  unsigned k;
  unsigned k_prime;
};

/// Requires gcd(k, 2n) = 1 (BadParams otherwise).
PolyParams make_poly_params(unsigned n, unsigned k);

/// Table of x^(2^j) for one full Frobenius period.
template <FieldElement E>
class FrobeniusOrbit {
 public:
  explicit FrobeniusOrbit(const E& x) {
    const unsigned p = frobenius_period(x);
    powers_.reserve(p);
    powers_.push_back(x);
    for (unsigned j = 1; j < p; ++j) powers_.push_back(powers_.back().square());
  }

  /// x^(2^j) for any j >= 0.
  const E& at(unsigned long long j) const { return powers_[j % powers_.size()]; }

 private:
  std::vector<E> powers_;
};

/// T_k(x) = sum_{i<k} x^(2^i)
template <FieldElement E>
E tk_eval(const E& x, unsigned k) {
  E acc = x.zero_like();
  E t = x;
  for (unsigned i = 0; i < k; ++i) {
    acc = acc + t;
    t = t.square();
  }
  return acc;
}

/// S_{n,k}(x) = sum_{i<n} x^(2^(k i))
template <FieldElement E>
E snk_eval(const E& x, unsigned n, unsigned k) {
  const FrobeniusOrbit<E> orbit(x);
  E acc = x.zero_like();
  for (unsigned i = 0; i < n; ++i) acc = acc + orbit.at(static_cast<unsigned long long>(k) * i);
  return acc;
}

/// Dickson polynomial D_m(z) with parameter 1, by the ladder
/// D_{2i} = D_i^2, D_{2i+1} = D_i D_{i+1} + z.
template <FieldElement E>
E dickson_eval(const E& z, const BigInt& m) {
  if (m < 0) throw Error(ErrorCode::BadParams, "Dickson index must be non-negative");
  if (m == 0) return z.zero_like();
  E lo = z.zero_like();  // D_i
  E hi = z;              // D_{i+1}
  for (long long bit = static_cast<long long>(msb(m)); bit >= 0; --bit) {
    const E mid = lo * hi + z;
    if (bit_test(m, static_cast<unsigned>(bit))) {
      lo = mid;
      hi = hi.square();
    } else {
      hi = mid;
      lo = lo.square();
    }
  }
  return lo;
}

/// Mueller-Cohen-Matthews f_{k,d}(x) = T_k(x^c)^d / x^(2^k) with c d = 2^k + 1.
template <FieldElement E>
E mcm_eval(const E& x, unsigned k, const BigInt& d) {
  const BigInt full = pow2(k) + 1;
  if (d <= 0 || full % d != 0) throw Error(ErrorCode::BadParams, "d must divide 2^k + 1");
  if (x.is_zero()) throw Error(ErrorCode::DivisionByZero, "f_{k,d} evaluated at zero");
  const BigInt c = full / d;
  const E xc = c == 1 ? x : x.pow(c);
  const E tk = tk_eval(xc, k);
  // d = 2^k + 1 is the only case on the solver path: T^(q+1) = T^q * T.
  const E num = d == full ? tk.frob(k) * tk : tk.pow(d);
  return num * x.frob(k).inv();
}

/// Dobbertin's Q'_{k,k'}(x) = x^(q+1) / sum_{i=1}^{k'} x^(q^i).
template <FieldElement E>
E qprime_eval(const E& x, const PolyParams& p) {
  const FrobeniusOrbit<E> orbit(x);
  E den = x.zero_like();
  for (unsigned i = 1; i <= p.k_prime; ++i) den = den + orbit.at(static_cast<unsigned long long>(p.k) * i);
  if (den.is_zero()) throw Error(ErrorCode::PoleHit, "Q' denominator vanishes");
  return orbit.at(p.k) * x * den.inv();
}

namespace detail {

/// Runs the A/B recurrences up to index `last`, calling visit(i, A_i, B_i).
template <FieldElement E, class Visit>
void walk_ab(const E& x, unsigned k, unsigned last, Visit&& visit) {
  if (x.is_zero()) {
    for (unsigned i = 1; i <= last; ++i) visit(i, x, x);
    return;
  }
  const FrobeniusOrbit<E> fwd(x);
  const FrobeniusOrbit<E> bwd(x.inv());
  auto f = [&](unsigned i) -> const E& { return fwd.at(static_cast<unsigned long long>(k) * i); };
  auto g = [&](unsigned i) -> const E& { return bwd.at(static_cast<unsigned long long>(k) * i); };

  E a_prev = x, b_prev = x.zero_like();  // index 1
  visit(1, a_prev, b_prev);
  if (last < 2) return;
  E a_cur = f(1) * x, b_cur = f(1) * g(0);  // index 2
  visit(2, a_cur, b_cur);
  for (unsigned i = 1; i + 2 <= last; ++i) {
    // x^(q^(i+1) - q^i) = x^(q^(i+1)) * (1/x)^(q^i)
    const E lead = f(i + 1);
    const E ratio = lead * g(i);
    E a_next = lead * a_cur + ratio * a_prev;
    E b_next = lead * b_cur + ratio * b_prev;
    a_prev = std::move(a_cur);
    b_prev = std::move(b_cur);
    a_cur = std::move(a_next);
    b_cur = std::move(b_next);
    visit(i + 2, a_cur, b_cur);
  }
}

}  // namespace detail

/// (A_i(x), B_i(x)) for i >= 1, with q = 2^k.
template <FieldElement E>
std::pair<E, E> ab_sequences(const E& x, unsigned k, unsigned i) {
  if (i < 1) throw Error(ErrorCode::BadParams, "A_i/B_i are indexed from 1");
  std::pair<E, E> out{x, x};
  detail::walk_ab(x, k, i, [&](unsigned idx, const E& a, const E& b) {
    if (idx == i) out = {a, b};
  });
  return out;
}

/// R_{k,k'}(x) = sum_{i=1}^{k'} A_i(x) + B_{k'}(x), the inverse of Q'.
template <FieldElement E>
E r_eval(const E& x, const PolyParams& p) {
  E acc = x.zero_like();
  E last_b = x.zero_like();
  detail::walk_ab(x, p.k, p.k_prime, [&](unsigned idx, const E& a, const E& b) {
    acc = acc + a;
    if (idx == p.k_prime) last_b = b;
  });
  return acc + last_b;
}

}  // namespace trinomial
