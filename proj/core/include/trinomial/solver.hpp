#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "trinomial/field.hpp"
#include "trinomial/tower.hpp"

namespace trinomial {

/// P_a(x) = x^(2^k + 1) + x + a over GF(2^n), gcd(n, k) = 1, a != 0.
struct ProblemInstance {
  std::shared_ptr<const TowerField> tower;
  unsigned k;
  BaseElt a;

  const BaseField& field() const { return tower->base(); }
  unsigned n() const { return tower->base().degree(); }
};

/// Validates gcd(n, k) = 1, a != 0 and that `a` belongs to the tower's base.
ProblemInstance make_instance(std::shared_ptr<const TowerField> tower, unsigned k, const BaseElt& a);

/// How the Dickson preimage set was obtained.
///   NonCube  - T not a cube in its group: no preimage.
///   Cube     - three preimages from the three (q+1)-th roots of T.
///   Rational - (q+1) is invertible modulo the order of T's group: one preimage.
enum class WitnessCase { NonCube, Cube, Rational };
enum class Branch { OddK, EvenKReduced };

const char* to_string(WitnessCase c) noexcept;
const char* to_string(Branch b) noexcept;

struct Witness {
  TowerElt t;
  BaseElt y;
  WitnessCase kase;
  Branch branch;
  unsigned k_used;
};

struct SolveOutcome {
  std::vector<BaseElt> roots;  // sorted by encoding
  Witness witness;
};

enum class RootCount { Zero = 0, One = 1, Three = 3 };

/// k mod n, the exponent that induces the same map on GF(2^n).
unsigned normalize_k(unsigned n, unsigned k);

/// The two solutions in GF(2^(2n)) of x + x^(2^k) = b, for odd k prime to n.
/// The first is S_{n,k}(b / (zeta + 1)), the second is that plus one.
std::pair<TowerElt, TowerElt> solve_affine(const TowerField& tower, const BaseElt& b, unsigned k);

struct ProblemAResult {
  TowerElt t;  // 1 + 1/x
  BaseElt y;   // t + 1/t
  TowerElt x;  // the affine solution the witness was built from
};

/// The unique Y in GF(2^n)^* with a^(q/2) = 1 / f_{k,q+1}(1/Y), for odd k,
/// together with a T satisfying Y = T + 1/T.
ProblemAResult problem_a(const TowerField& tower, const BaseElt& a, unsigned k);

struct DicksonPreimages {
  std::vector<BaseElt> z;
  WitnessCase kase;
};

/// D_{q+1}^{-1}(Y) inside GF(2^n) for odd k, given T with T + 1/T = Y.
DicksonPreimages dickson_preimages(const TowerElt& t, const BaseElt& y, unsigned k);
/// Same, recovering T from Y first.
DicksonPreimages dickson_preimages(const TowerField& tower, const BaseElt& y, unsigned k);

/// All roots of P_a in GF(2^n). Every returned root is checked by
/// substitution; a failure raises InternalInvariant.
SolveOutcome solve_pa(const ProblemInstance& inst);

/// Tr_n(R_{k,k'}(a^-1) + 1) with k replaced by its odd representative
/// (k mod n, or n - k mod n when that is even). Equals 1 iff P_a has exactly
/// one root.
int unique_root_trace(const ProblemInstance& inst);

/// Number of roots without computing them.
RootCount count_criterion(const ProblemInstance& inst);

/// Roots in GF(2) of x^(2^k+1) + x + a for the degenerate n = 1 field.
std::vector<int> roots_over_gf2(unsigned k, int a);

/// x^(2^k+1) + r x^(2^k) + s x + t becomes P_a under x = lambda * y + shift.
struct GeneralReduction {
  BaseElt a;
  BaseElt lambda;
  BaseElt shift;

  BaseElt map_root(const BaseElt& y) const { return lambda * y + shift; }
};

/// Throws Degenerate when lambda = r + s^(1/2^k) vanishes.
GeneralReduction reduce_general(const BaseElt& r, const BaseElt& s, const BaseElt& t, unsigned k);

/// Direct evaluation of x^(2^k+1) + x + a.
BaseElt eval_pa(const BaseElt& x, unsigned k, const BaseElt& a);

}  // namespace trinomial
