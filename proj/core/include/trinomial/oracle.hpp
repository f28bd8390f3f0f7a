#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "trinomial/field.hpp"
#include "trinomial/solver.hpp"
#include "trinomial/tower.hpp"

namespace trinomial {

inline constexpr unsigned kDefaultMaxN = 24;

struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t checked = 0;
  std::string counterexample;  // empty when passed

  bool operator==(const CheckResult&) const = default;
};

struct Mismatch {
  std::string a;
  std::vector<std::string> expected;
  std::vector<std::string> got;

  bool operator==(const Mismatch&) const = default;
};

/// Result of an exhaustive sweep over every a != 0 for one (n, k).
struct OracleReport {
  unsigned n = 0;
  unsigned k = 0;
  std::string modulus;
  std::uint64_t seed = 0;
  std::map<unsigned, std::uint64_t> histogram;  // root count -> number of a
  std::vector<Mismatch> mismatches;
  std::uint64_t mismatch_count = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
  bool operator==(const OracleReport&) const = default;
};

/// Roots of P_a by scanning the whole field. TooLarge beyond max_n.
std::vector<BaseElt> brute_roots(const ProblemInstance& inst, unsigned max_n = kDefaultMaxN);

/// For every a, the x with x^(2^k+1) + x = a, built from one pass over the
/// field. Stored compactly: roots of a are order[start[a] .. start[a+1]).
class BruteRootTable {
 public:
  BruteRootTable(const BaseField& field, unsigned k, unsigned max_n = kDefaultMaxN);

  std::size_t count(std::uint64_t a) const { return start_[a + 1] - start_[a]; }
  std::vector<BaseElt> roots(std::uint64_t a) const;

 private:
  const BaseField* field_;
  std::vector<std::uint32_t> start_;
  std::vector<std::uint32_t> order_;
};

/// Tally of root counts over all a != 0, with the trichotomy and mass checks.
OracleReport histogram(const BaseField& field, unsigned k, unsigned max_n = kDefaultMaxN);

/// Solver against brute force for every a != 0, plus the root-count criteria.
OracleReport sweep(const std::shared_ptr<const TowerField>& tower, unsigned k, unsigned max_n = kDefaultMaxN);

/// The Dickson product identity in GF(2^k)[X, Y], checked at seeded random
/// points of GF(2^(8k)).
CheckResult check_dickson_product_identity(unsigned k, unsigned trials, std::uint64_t seed);

/// f_{k,2^k+1} on GF(2^n): bijective for odd k, 2-to-1 for even k.
CheckResult check_mcm_mapping(const BaseField& field, unsigned k, unsigned max_n = 14);

/// R_{k,k'}(Q'_{k,k'}(x)) = x on GF(2^(2n)). samples = 0 means exhaustive,
/// allowed for 2n <= 20.
CheckResult check_qr_roundtrip(const TowerField& tower, unsigned k, std::uint64_t samples, std::uint64_t seed);

/// f_{k,q+1}(x + x^2) = Q'_{k,k'}(x + x^q) on GF(2^(2n)); same sampling rule.
CheckResult check_mcm_dobbertin_bridge(const TowerField& tower, unsigned k, std::uint64_t samples,
                                       std::uint64_t seed);

/// Dickson ladder against the recurrence D_{m+1} = z D_m + D_{m-1} for every
/// m <= max_m at `points` random tower elements.
CheckResult check_dickson_ladder(const TowerField& tower, std::uint64_t max_m, unsigned points, std::uint64_t seed);

}  // namespace trinomial
