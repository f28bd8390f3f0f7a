#pragma once

#include "trinomial/bigint.hpp"
#include "trinomial/field.hpp"
#include "trinomial/tower.hpp"

namespace trinomial {

/// The two cyclic groups the solver extracts roots in: GF(2^n)^* (order
/// 2^n - 1) and the unit circle mu_{2^n+1} inside GF(2^(2n)) (order 2^n + 1).
enum class CyclicGroup { MultBase, Circle };

const char* to_string(CyclicGroup g) noexcept;

const BigInt& group_order(const TowerField& tower, CyclicGroup group);

/// norm(c) == 1. Throws DivisionByZero for c = 0.
bool in_unit_circle(const TowerElt& c);

/// Cube test inside a group whose order is divisible by 3: MultBase needs n
/// even and T a nonzero base element, Circle needs n odd and T on the circle.
/// Anything else is BadGroup.
bool is_cube(const TowerElt& t, CyclicGroup group);

/// One c in `group` with c^m = t. Deterministic. gcd(m, order) must be 1 or 3;
/// the 3 case extracts cube roots with Adleman-Manders-Miller. Throws NoRoot
/// when t is not an m-th power.
TowerElt cyclic_root(const TowerElt& t, const BigInt& m, CyclicGroup group);

/// Cube root in a cyclic group of order `order` (3 | order) by
/// Adleman-Manders-Miller. `non_cube` must generate the quotient by cubes.
TowerElt amm_cube_root(const TowerElt& t, const BigInt& order, const TowerElt& non_cube);

/// First non-cube of the group in a fixed deterministic scan.
TowerElt find_non_cube(const TowerField& tower, CyclicGroup group);

enum class Locus { BaseStar, CircleStar };

const char* to_string(Locus l) noexcept;

struct Decomposition {
  TowerElt c;
  Locus locus;
};

/// Writes z = c + 1/c. c lies in GF(2^n) \ GF(2) when Tr(1/z) = 0 and on the
/// unit circle otherwise.
Decomposition decompose(const TowerField& tower, const BaseElt& z);

}  // namespace trinomial
