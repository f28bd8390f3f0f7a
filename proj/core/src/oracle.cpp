#include "trinomial/oracle.hpp"

#include <algorithm>
#include <random>

#include "trinomial/classic_polys.hpp"
#include "trinomial/cyclic.hpp"
#include "trinomial/errors.hpp"

namespace trinomial {
namespace {

constexpr std::size_t kMaxRecordedMismatches = 16;

void require_size(unsigned n, unsigned max_n) {
  if (n > max_n) {
    throw Error(ErrorCode::TooLarge, "n = " + std::to_string(n) + " exceeds the exhaustive guard " + std::to_string(max_n));
  }
}

std::vector<std::string> to_hex(const std::vector<BaseElt>& xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x.to_hex());
  return out;
}

// Records the first failure of a check and counts every evaluation.
struct CheckTally {
  CheckResult result;

  explicit CheckTally(std::string name) { result.name = std::move(name); }

  // `detail` is only invoked for the first failure.
  template <class Detail>
  void record(bool ok, Detail&& detail) {
    ++result.checked;
    if (!ok && result.passed) {
      result.passed = false;
      result.counterexample = detail();
    }
  }
};

TowerElt tower_at(const TowerField& tower, std::uint64_t index) {
  const unsigned n = tower.base().degree();
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  return tower.make(tower.base().from_u64(index & mask), tower.base().from_u64(index >> n));
}

// Runs fn(x) over all of GF(2^(2n)) (samples = 0) or over seeded samples.
template <class Fn>
void for_tower_points(const TowerField& tower, std::uint64_t samples, std::uint64_t seed, Fn&& fn) {
  if (samples == 0) {
    if (tower.degree() > 20) {
      throw Error(ErrorCode::TooLarge, "exhaustive tower scans are limited to 2n <= 20");
    }
    const std::uint64_t size = std::uint64_t{1} << tower.degree();
    for (std::uint64_t i = 0; i < size; ++i) fn(tower_at(tower, i));
    return;
  }
  std::mt19937_64 gen(seed);
  for (std::uint64_t i = 0; i < samples; ++i) fn(tower.random(gen));
}

}  // namespace

bool OracleReport::passed() const {
  if (mismatch_count != 0) return false;
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<BaseElt> brute_roots(const ProblemInstance& inst, unsigned max_n) {
  const unsigned n = inst.n();
  require_size(n, max_n);
  std::vector<BaseElt> out;
  const std::uint64_t size = std::uint64_t{1} << n;
  for (std::uint64_t i = 0; i < size; ++i) {
    const BaseElt x = inst.field().from_u64(i);
    if (eval_pa(x, inst.k, inst.a).is_zero()) out.push_back(x);
  }
  return out;
}

BruteRootTable::BruteRootTable(const BaseField& field, unsigned k, unsigned max_n) : field_(&field) {
  const unsigned n = field.degree();
  require_size(n, std::min(max_n, 31u));
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<std::uint32_t> image(size);
  start_.assign(size + 1, 0);
  for (std::uint64_t i = 0; i < size; ++i) {
    const BaseElt x = field.from_u64(i);
    const BaseElt v = x.frob(k) * x + x;
    image[i] = static_cast<std::uint32_t>(v.words()[0]);
    ++start_[image[i] + 1];
  }
  for (std::uint64_t a = 0; a < size; ++a) start_[a + 1] += start_[a];
  order_.resize(size);
  std::vector<std::uint32_t> fill(start_.begin(), start_.end() - 1);
  for (std::uint64_t i = 0; i < size; ++i) order_[fill[image[i]]++] = static_cast<std::uint32_t>(i);
}

std::vector<BaseElt> BruteRootTable::roots(std::uint64_t a) const {
  std::vector<BaseElt> out;
  for (std::uint32_t i = start_[a]; i < start_[a + 1]; ++i) out.push_back(field_->from_u64(order_[i]));
  return out;
}

namespace {

OracleReport histogram_from(const BaseField& field, unsigned k, const BruteRootTable& table) {
  const unsigned n = field.degree();
  OracleReport rep;
  rep.n = n;
  rep.k = k;
  rep.modulus = field.modulus().to_hex();
  const std::uint64_t size = std::uint64_t{1} << n;
  std::uint64_t mass = 0;
  for (std::uint64_t a = 1; a < size; ++a) {
    const auto c = static_cast<unsigned>(table.count(a));
    ++rep.histogram[c];
    mass += c;
  }
  CheckTally tri("trichotomy");
  for (const auto& [count, num] : rep.histogram) {
    tri.record(count == 0 || count == 1 || count == 3,
               [&] { return std::to_string(num) + " values of a with " + std::to_string(count) + " roots"; });
  }
  rep.checks.push_back(tri.result);
  CheckTally mass_check("mass");
  mass_check.record(mass == size - 2, [&] { return "sum of root counts " + std::to_string(mass) + " != 2^n - 2"; });
  rep.checks.push_back(mass_check.result);
  return rep;
}

}  // namespace

OracleReport histogram(const BaseField& field, unsigned k, unsigned max_n) {
  if (k == 0 || gcd_u64(k, field.degree()) != 1) throw Error(ErrorCode::BadParams, "gcd(n, k) must be 1");
  const BruteRootTable table(field, k, max_n);
  return histogram_from(field, k, table);
}

OracleReport sweep(const std::shared_ptr<const TowerField>& tower, unsigned k, unsigned max_n) {
  const BaseField& field = tower->base();
  const unsigned n = field.degree();
  if (k == 0 || gcd_u64(k, n) != 1) throw Error(ErrorCode::BadParams, "gcd(n, k) must be 1");
  const BruteRootTable table(field, k, max_n);
  OracleReport rep = histogram_from(field, k, table);

  CheckTally equivalence("solver-equivalence");
  CheckTally criterion("count-criterion");
  CheckTally unique("unique-root-trace");
  CheckTally no_root("non-cube-no-root");

  const std::uint64_t size = std::uint64_t{1} << n;
  for (std::uint64_t ai = 1; ai < size; ++ai) {
    const BaseElt a = field.from_u64(ai);
    const std::vector<BaseElt> expected = table.roots(ai);
    auto tag = [&] { return "a = " + a.to_hex(); };
    try {
      const ProblemInstance inst = make_instance(tower, k, a);
      const SolveOutcome out = solve_pa(inst);
      const bool same = out.roots == expected;
      equivalence.record(same, tag);
      if (!same) {
        ++rep.mismatch_count;
        if (rep.mismatches.size() < kMaxRecordedMismatches) {
          rep.mismatches.push_back({a.to_hex(), to_hex(expected), to_hex(out.roots)});
        }
      }
      criterion.record(static_cast<std::size_t>(count_criterion(inst)) == expected.size(), tag);
      unique.record((unique_root_trace(inst) == 1) == (expected.size() == 1), tag);
      if (n % 2 == 0) {
        const TowerElt& t = out.witness.t;
        const bool non_cube = t.is_base() && !is_cube(t, CyclicGroup::MultBase);
        no_root.record(non_cube == expected.empty(), tag);
      }
    } catch (const Error& e) {
      equivalence.record(false, [&] { return tag() + ": " + e.what(); });
      ++rep.mismatch_count;
      if (rep.mismatches.size() < kMaxRecordedMismatches) {
        rep.mismatches.push_back({a.to_hex(), to_hex(expected), {std::string("error: ") + e.what()}});
      }
    }
  }
  rep.checks.push_back(equivalence.result);
  rep.checks.push_back(criterion.result);
  rep.checks.push_back(unique.result);
  if (n % 2 == 0) rep.checks.push_back(no_root.result);
  return rep;
}

CheckResult check_dickson_product_identity(unsigned k, unsigned trials, std::uint64_t seed) {
  if (k == 0 || k > 8) throw Error(ErrorCode::BadParams, "identity check supports 1 <= k <= 8");
  const auto field = build_base_field(8 * k);
  const BigInt q = pow2(k);
  const BigInt sub_order = q - 1;

  // Generator of GF(2^k)^* inside GF(2^(8k)).
  const BigInt cofactor = field->group_order() / sub_order;
  BaseElt gen_w;
  for (std::uint64_t i = 2;; ++i) {
    const BaseElt h = field->from_u64(i).pow(cofactor);
    BaseElt p = h;
    std::uint64_t order = 1;
    while (!p.is_one()) {
      p *= h;
      ++order;
    }
    if (order == static_cast<std::uint64_t>(sub_order)) {
      gen_w = h;
      break;
    }
  }
  std::vector<BaseElt> subgroup{field->one()};
  for (BaseElt p = gen_w; !p.is_one(); p *= gen_w) subgroup.push_back(p);

  CheckTally tally("dickson-product-identity k=" + std::to_string(k));
  std::mt19937_64 gen(seed);
  for (unsigned t = 0; t < trials; ++t) {
    const BaseElt x = field->random(gen);
    const BaseElt y = field->random(gen);
    BaseElt coeff = field->zero();
    for (unsigned i = 1; i <= k; ++i) coeff += y.pow(q - pow2(i));
    const BaseElt lhs = x.pow(q * q - 1) + coeff * x.pow(q - 1) + y.pow(q - 1);
    BaseElt rhs = field->one();
    for (const BaseElt& w : subgroup) rhs *= dickson_eval(w * x, q + 1) + y;
    tally.record(lhs == rhs, [&] { return "X = " + x.to_hex() + ", Y = " + y.to_hex(); });
  }
  return tally.result;
}

CheckResult check_mcm_mapping(const BaseField& field, unsigned k, unsigned max_n) {
  const unsigned n = field.degree();
  require_size(n, max_n);
  if (k == 0 || gcd_u64(k, n) != 1) throw Error(ErrorCode::BadParams, "gcd(n, k) must be 1");
  const BigInt d = pow2(k) + 1;
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<std::uint32_t> hits(size, 0);
  ++hits[0];  // f(0) = 0 as a polynomial
  for (std::uint64_t i = 1; i < size; ++i) {
    ++hits[mcm_eval(field.from_u64(i), k, d).words()[0]];
  }
  const std::uint32_t want = k % 2 == 1 ? 1 : 2;
  CheckTally tally(std::string("mcm-") + (want == 1 ? "bijective" : "two-to-one") + " n=" + std::to_string(n) +
                   " k=" + std::to_string(k));
  for (std::uint64_t v = 0; v < size; ++v) {
    tally.record(hits[v] == 0 || hits[v] == want, [&] {
      return "value " + field.from_u64(v).to_hex() + " has " + std::to_string(hits[v]) + " preimages";
    });
  }
  return tally.result;
}

CheckResult check_qr_roundtrip(const TowerField& tower, unsigned k, std::uint64_t samples, std::uint64_t seed) {
  const PolyParams params = make_poly_params(tower.base().degree(), k);
  CheckTally tally("r-inverts-qprime n=" + std::to_string(params.n) + " k=" + std::to_string(k));
  for_tower_points(tower, samples, seed, [&](const TowerElt& x) {
    TowerElt image;
    try {
      image = qprime_eval(x, params);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::PoleHit) return;
      throw;
    }
    tally.record(r_eval(image, params) == x, [&] { return "x = " + x.to_string(); });
  });
  return tally.result;
}

CheckResult check_mcm_dobbertin_bridge(const TowerField& tower, unsigned k, std::uint64_t samples,
                                       std::uint64_t seed) {
  const PolyParams params = make_poly_params(tower.base().degree(), k);
  const BigInt d = pow2(k) + 1;
  CheckTally tally("mcm-dobbertin-bridge n=" + std::to_string(params.n) + " k=" + std::to_string(k));
  for_tower_points(tower, samples, seed, [&](const TowerElt& x) {
    const TowerElt arg_f = x + x.square();
    if (arg_f.is_zero()) return;  // x in GF(2): both sides have a pole
    const TowerElt arg_q = x + x.frob(k);
    auto detail = [&] { return "x = " + x.to_string(); };
    try {
      tally.record(mcm_eval(arg_f, k, d) == qprime_eval(arg_q, params), detail);
    } catch (const Error& e) {
      tally.record(false, [&] { return detail() + ": " + e.what(); });
    }
  });
  return tally.result;
}

CheckResult check_dickson_ladder(const TowerField& tower, std::uint64_t max_m, unsigned points, std::uint64_t seed) {
  CheckTally tally("dickson-ladder m<=" + std::to_string(max_m));
  std::mt19937_64 gen(seed);
  for (unsigned p = 0; p < points; ++p) {
    const TowerElt z = tower.random(gen);
    TowerElt prev = tower.zero(), cur = z;  // D_0, D_1
    tally.record(dickson_eval(z, BigInt(0)) == prev, [&] { return "m = 0, z = " + z.to_string(); });
    for (std::uint64_t m = 1; m <= max_m; ++m) {
      tally.record(dickson_eval(z, BigInt(m)) == cur,
                   [&] { return "m = " + std::to_string(m) + ", z = " + z.to_string(); });
      TowerElt next = z * cur + prev;
      prev = cur;
      cur = next;
    }
  }
  return tally.result;
}

}  // namespace trinomial
