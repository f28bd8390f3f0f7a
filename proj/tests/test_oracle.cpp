#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "support.hpp"
#include "trinomial/errors.hpp"
#include "trinomial/oracle.hpp"

using namespace trinomial;
using namespace testing_support;

namespace {

std::uint64_t weighted_total(const OracleReport& r) {
  std::uint64_t total = 0;
  for (const auto& [count, num] : r.histogram) total += count * num;
  return total;
}

const CheckResult& check_named(const OracleReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return c;
  }
  FAIL("missing check " << name);
  return r.checks.front();
}

}  // namespace

TEST_CASE("brute force examples") {
  const auto t = tower_of(3);
  CHECK(hex_set(brute_roots(make_instance(t, 1, t->base().one()))) == std::set<std::string>{"0x2", "0x4", "0x6"});
  CHECK(brute_roots(make_instance(t, 1, elt(t->base(), 0x2))).empty());
  CHECK(hex_set(brute_roots(make_instance(t, 2, t->base().one()))) == std::set<std::string>{"0x3", "0x5", "0x7"});
}

TEST_CASE("size guard") {
  const auto t = tower_of(25);
  const ProblemInstance inst = make_instance(t, 1, t->base().one());
  try {
    (void)brute_roots(inst);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
  const auto f12 = build_base_field(12);
  CHECK_NOTHROW((void)BruteRootTable(*f12, 1, 12));
  CHECK_THROWS_AS((void)histogram(*build_base_field(13), 1, 12), Error);
}

TEST_CASE("root table agrees with the direct scan") {
  for (unsigned n : {4u, 7u}) {
    const auto t = tower_of(n);
    for (unsigned k : {1u, 2u, 3u}) {
      if (gcd_u64(k, n) != 1) continue;
      const BruteRootTable table(t->base(), k);
      for (std::uint64_t a = 1; a < (std::uint64_t{1} << n); ++a) {
        const auto direct = brute_roots(make_instance(t, k, elt(t->base(), a)));
        REQUIRE(table.count(a) == direct.size());
        REQUIRE(hex_set(table.roots(a)) == hex_set(direct));
      }
    }
  }
}

TEST_CASE("n = 3, k = 1 histogram") {
  const OracleReport r = histogram(*build_base_field(3), 1);
  CHECK(r.histogram.at(0) == 3);
  CHECK(r.histogram.at(1) == 3);
  CHECK(r.histogram.at(3) == 1);
  CHECK(r.passed());
}

TEST_CASE("n = 2, k = 1 histogram is recorded") {
  const OracleReport r = histogram(*build_base_field(2), 1);
  std::string table;
  for (const auto& [count, num] : r.histogram) table += std::to_string(count) + ": " + std::to_string(num) + " ";
  MESSAGE("GF(4), k = 1: " << table);
  CHECK(weighted_total(r) == 2);
  CHECK(r.passed());
}

TEST_CASE("mass and trichotomy for every valid k, n <= 12") {
  for (unsigned n = 2; n <= 12; ++n) {
    const auto f = build_base_field(n);
    for (unsigned k = 1; k <= 2 * n; ++k) {
      if (gcd_u64(k, n) != 1) continue;
      const OracleReport r = histogram(*f, k);
      REQUIRE(r.passed());
      REQUIRE(weighted_total(r) == (std::uint64_t{1} << n) - 2);
      for (const auto& [count, num] : r.histogram) REQUIRE((count == 0 || count == 1 || count == 3));
    }
  }
}

TEST_CASE("sweep reports every check") {
  const OracleReport even = sweep(tower_of(6), 5);
  CHECK(even.passed());
  CHECK(even.n == 6);
  CHECK(even.k == 5);
  CHECK(even.modulus == "0x43");
  for (const char* name : {"trichotomy", "mass", "solver-equivalence", "count-criterion", "unique-root-trace", "non-cube-no-root"}) {
    CHECK(check_named(even, name).passed);
  }
  CHECK(check_named(even, "solver-equivalence").checked == 63);

  const OracleReport odd = sweep(tower_of(7), 4);
  CHECK(odd.passed());
  for (const auto& c : odd.checks) CHECK(c.name != "non-cube-no-root");
}

TEST_CASE("identity checks are reproducible") {
  CHECK(check_dickson_product_identity(2, 10, 5) == check_dickson_product_identity(2, 10, 5));
  CHECK(check_qr_roundtrip(*tower_of(31), 3, 50, 8) == check_qr_roundtrip(*tower_of(31), 3, 50, 8));
}
