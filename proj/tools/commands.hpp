#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "report_json.hpp"

namespace trinomial::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kInternal = 2, kMismatch = 3 };

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

SolveReport solve_instance(unsigned n, unsigned k, const std::string& a_hex,
                           const std::optional<std::string>& modulus = std::nullopt);

BenchReport bench(unsigned n, unsigned k, std::uint64_t samples, std::uint64_t seed,
                  const std::optional<std::string>& modulus = std::nullopt);

}  // namespace trinomial::cli
