#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "trinomial/oracle.hpp"

namespace trinomial::cli {

/// Serialized form of one solve, with the field names downstream tooling
/// relies on.
struct SolveReport {
  struct WitnessJson {
    std::array<std::string, 2> t;
    std::string y;
    std::string kase;
    std::string branch;

    bool operator==(const WitnessJson&) const = default;
  };

  unsigned n = 0;
  unsigned k = 0;
  std::string a;
  std::string modulus;
  std::vector<std::string> roots;
  std::optional<WitnessJson> witness;
  double timing_ms = 0.0;

  bool operator==(const SolveReport&) const = default;
};

struct BenchReport {
  unsigned n = 0;
  unsigned k = 0;
  std::string modulus;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::uint64_t substitution_failures = 0;
  std::map<unsigned, std::uint64_t> counts;  // root count -> samples
  double median_ms = 0.0;
  double max_ms = 0.0;

  bool operator==(const BenchReport&) const = default;
};

nlohmann::json to_json(const SolveReport& r);
SolveReport solve_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const OracleReport& r);
OracleReport oracle_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BenchReport& r);
BenchReport bench_report_from_json(const nlohmann::json& j);

}  // namespace trinomial::cli
