#include "trinomial/solver.hpp"

#include <algorithm>

#include "trinomial/classic_polys.hpp"
#include "trinomial/cyclic.hpp"
#include "trinomial/errors.hpp"

namespace trinomial {

const char* to_string(WitnessCase c) noexcept {
  switch (c) {
    case WitnessCase::NonCube: return "non-cube";
    case WitnessCase::Cube: return "cube";
    case WitnessCase::Rational: return "rational";
  }
  return "?";
}

const char* to_string(Branch b) noexcept { return b == Branch::OddK ? "odd-k" : "even-k-reduced"; }

ProblemInstance make_instance(std::shared_ptr<const TowerField> tower, unsigned k, const BaseElt& a) {
  if (!tower) throw Error(ErrorCode::BadParams, "null tower");
  const unsigned n = tower->base().degree();
  if (k == 0 || gcd_u64(k, n) != 1) {
    throw Error(ErrorCode::BadParams, "gcd(n, k) must be 1 (n = " + std::to_string(n) + ", k = " + std::to_string(k) + ")");
  }
  if (a.field_ptr() != &tower->base()) throw Error(ErrorCode::FieldMismatch, "a is not from the tower's base field");
  if (a.is_zero()) throw Error(ErrorCode::BadParams, "a must be nonzero");
  return {std::move(tower), k, a};
}

unsigned normalize_k(unsigned n, unsigned k) {
  if (n == 0 || k == 0 || gcd_u64(k, n) != 1) throw Error(ErrorCode::BadParams, "gcd(n, k) must be 1");
  if (n == 1) return 1;
  return k % n;
}

BaseElt eval_pa(const BaseElt& x, unsigned k, const BaseElt& a) { return x.frob(k) * x + x + a; }

std::pair<TowerElt, TowerElt> solve_affine(const TowerField& tower, const BaseElt& b, unsigned k) {
  const unsigned n = tower.base().degree();
  if (gcd_u64(k, 2ull * n) != 1) throw Error(ErrorCode::BadParams, "solve_affine needs k odd and prime to n");
  const TowerElt x = snk_eval(tower.embed(b) * tower.inv_zeta_plus_one(), n, k);
  return {x, x + tower.one()};
}

ProblemAResult problem_a(const TowerField& tower, const BaseElt& a, unsigned k) {
  const unsigned n = tower.base().degree();
  if (a.is_zero()) throw Error(ErrorCode::BadParams, "a must be nonzero");
  const PolyParams params = make_poly_params(n, k);
  // a^(-q/2) = (1/a)^(2^(k-1))
  const BaseElt b = r_eval(a.inv().frob(static_cast<long long>(k) - 1), params);
  const TowerElt x = solve_affine(tower, b, k).first;
  if (x.is_zero() || x.is_one()) throw Error(ErrorCode::InternalInvariant, "affine solution fell in GF(2)");
  const TowerElt t = tower.one() + x.inv();
  const TowerElt y = t + t.inv();
  if (!y.is_base() || y.is_zero()) throw Error(ErrorCode::InternalInvariant, "Y = T + 1/T is not in GF(2^n)^*");
  return {t, y.as_base(), x};
}

namespace {

std::vector<BaseElt> circle_pairs(const TowerElt& c, const TowerElt& omega, bool three) {
  std::vector<BaseElt> out;
  TowerElt cw = c;
  for (int i = 0; i < (three ? 3 : 1); ++i) {
    out.push_back((cw + cw.inv()).as_base());
    cw = cw * omega;
  }
  return out;
}

}  // namespace

DicksonPreimages dickson_preimages(const TowerElt& t, const BaseElt& y, unsigned k) {
  const TowerField& tower = t.tower();
  const unsigned n = tower.base().degree();
  if (k % 2 == 0 || gcd_u64(k, n) != 1) throw Error(ErrorCode::BadParams, "k must be odd and prime to n");
  if (y.is_zero()) throw Error(ErrorCode::BadParams, "Y must be nonzero");
  if (t.is_zero() || t + t.inv() != tower.embed(y)) throw Error(ErrorCode::BadParams, "Y != T + 1/T");

  const BigInt m = pow2(k) + 1;
  // Exactly one of the two groups has order divisible by 3; T lies in
  // GF(2^n)^* or on the unit circle.
  const CyclicGroup group = t.is_base() ? CyclicGroup::MultBase : CyclicGroup::Circle;
  const bool three_divides = (group == CyclicGroup::MultBase) == (n % 2 == 0);

  DicksonPreimages out;
  if (three_divides) {
    if (!is_cube(t, group)) {
      out.kase = WitnessCase::NonCube;
      return out;
    }
    out.kase = WitnessCase::Cube;
    out.z = circle_pairs(cyclic_root(t, m, group), tower.omega(), true);
  } else {
    out.kase = WitnessCase::Rational;
    const TowerElt c = t.pow(mod_inverse(m, group_order(tower, group)));
    out.z = circle_pairs(c, tower.omega(), false);
  }
  std::sort(out.z.begin(), out.z.end());
  return out;
}

DicksonPreimages dickson_preimages(const TowerField& tower, const BaseElt& y, unsigned k) {
  if (y.is_zero()) throw Error(ErrorCode::BadParams, "Y must be nonzero");
  // T = Y * S_{n,1}(1 / (Y^2 (zeta + 1)))
  const TowerElt t = tower.artin_schreier_root(y.square().inv()) * y;
  return dickson_preimages(t, y, k);
}

namespace {

SolveOutcome solve_odd(const TowerField& tower, const BaseElt& a, unsigned k) {
  const ProblemAResult pa = problem_a(tower, a, k);
  const DicksonPreimages pre = dickson_preimages(pa.t, pa.y, k);

  // Y * T_k(1/Y)^(2/q), the fractional power being 2^(1-k).
  const BaseElt denom = pa.y * tk_eval(pa.y.inv(), k).frob(1 - static_cast<long long>(k));
  const BaseElt denom_inv = denom.inv();

  SolveOutcome out;
  out.witness = {pa.t, pa.y, pre.kase, Branch::OddK, k};
  for (const BaseElt& z : pre.z) out.roots.push_back(z.frob(k) * z.inv() * denom_inv);
  return out;
}

}  // namespace

SolveOutcome solve_pa(const ProblemInstance& inst) {
  const unsigned n = inst.n();
  const unsigned k0 = normalize_k(n, inst.k);
  SolveOutcome out;
  if (k0 % 2 == 1) {
    out = solve_odd(*inst.tower, inst.a, k0);
  } else {
    // n is odd here, so l = n - k0 is odd; roots shift by 1.
    const unsigned l = n - k0;
    out = solve_odd(*inst.tower, inst.a.frob(l), l);
    for (BaseElt& r : out.roots) r += inst.field().one();
    out.witness.branch = Branch::EvenKReduced;
  }
  std::sort(out.roots.begin(), out.roots.end());
  if (std::adjacent_find(out.roots.begin(), out.roots.end()) != out.roots.end()) {
    throw Error(ErrorCode::InternalInvariant, "repeated root");
  }
  for (const BaseElt& r : out.roots) {
    if (!eval_pa(r, inst.k, inst.a).is_zero()) {
      throw Error(ErrorCode::InternalInvariant, "root " + r.to_hex() + " fails substitution");
    }
  }
  return out;
}

namespace {

unsigned odd_representative(unsigned n, unsigned k) {
  const unsigned k0 = normalize_k(n, k);
  return k0 % 2 == 1 ? k0 : n - k0;
}

}  // namespace

int unique_root_trace(const ProblemInstance& inst) {
  const unsigned n = inst.n();
  const PolyParams params = make_poly_params(n, odd_representative(n, inst.k));
  return (r_eval(inst.a.inv(), params) + inst.field().one()).trace();
}

RootCount count_criterion(const ProblemInstance& inst) {
  if (unique_root_trace(inst) == 1) return RootCount::One;
  const unsigned n = inst.n();
  const unsigned k0 = normalize_k(n, inst.k);
  const unsigned kk = k0 % 2 == 1 ? k0 : n - k0;
  const BaseElt a = k0 % 2 == 1 ? inst.a : inst.a.frob(kk);
  const ProblemAResult pa = problem_a(*inst.tower, a, kk);
  // Not a unique root, so T sits in the group whose order 3 divides.
  const CyclicGroup group = n % 2 == 0 ? CyclicGroup::MultBase : CyclicGroup::Circle;
  if ((group == CyclicGroup::MultBase) != pa.t.is_base()) {
    throw Error(ErrorCode::InternalInvariant, "trace criterion disagrees with the location of T");
  }
  return is_cube(pa.t, group) ? RootCount::Three : RootCount::Zero;
}

std::vector<int> roots_over_gf2(unsigned k, int a) {
  if (k == 0) throw Error(ErrorCode::BadParams, "k must be positive");
  std::vector<int> out;
  for (int x = 0; x <= 1; ++x) {
    const int x_q1 = x;  // x^(2^k + 1) = x on GF(2)
    if ((x_q1 ^ x ^ (a & 1)) == 0) out.push_back(x);
  }
  return out;
}

GeneralReduction reduce_general(const BaseElt& r, const BaseElt& s, const BaseElt& t, unsigned k) {
  const BaseElt lambda = r + s.frob(-static_cast<long long>(k));
  if (lambda.is_zero()) throw Error(ErrorCode::Degenerate, "r + s^(1/2^k) = 0");
  // Substituting x = lambda y + r and using lambda^(2^k) = r^(2^k) + s:
  //   lambda^(q+1) (y^(q+1) + y) + s r + t.
  const BaseElt lambda_q1 = lambda.frob(k) * lambda;
  return {(s * r + t) / lambda_q1, lambda, r};
}

}  // namespace trinomial
