#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <random>

#include <CLI11.hpp>

#include "trinomial/classic_polys.hpp"
#include "trinomial/errors.hpp"
#include "trinomial/oracle.hpp"
#include "trinomial/solver.hpp"

namespace trinomial::cli {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::shared_ptr<const TowerField> make_tower(unsigned n, const std::optional<std::string>& modulus) {
  std::optional<BinPoly> m;
  if (modulus) m = BinPoly::from_hex(*modulus);
  return build_tower(build_base_field(n, m));
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += ' ';
    out += x;
  }
  return out.empty() ? "(none)" : out;
}

std::string histogram_text(const std::map<unsigned, std::uint64_t>& h) {
  std::string out = "{";
  for (unsigned key : {0u, 1u, 3u}) {
    if (out.size() > 1) out += ", ";
    const auto it = h.find(key);
    out += std::to_string(key) + ": " + std::to_string(it == h.end() ? 0 : it->second);
  }
  for (const auto& [key, num] : h) {
    if (key != 0 && key != 1 && key != 3) out += ", " + std::to_string(key) + ": " + std::to_string(num);
  }
  return out + "}";
}

void print_solve(const SolveReport& r, std::ostream& out) {
  out << "n = " << r.n << ", k = " << r.k << ", a = " << r.a << ", modulus = " << r.modulus << "\n";
  out << "count: " << r.roots.size() << "\n";
  out << "roots: " << join(r.roots) << "\n";
  if (r.witness) {
    out << "witness: T = [" << r.witness->t[0] << ", " << r.witness->t[1] << "], Y = " << r.witness->y
        << ", case = " << r.witness->kase << ", branch = " << r.witness->branch << "\n";
  }
}

void print_oracle(const OracleReport& r, std::ostream& out) {
  out << "n = " << r.n << ", k = " << r.k << ": " << (r.passed() ? "pass" : "FAIL")
      << ", histogram " << histogram_text(r.histogram) << "\n";
  for (const auto& c : r.checks) {
    out << "  " << (c.passed ? "ok  " : "FAIL") << " " << c.name << " (" << c.checked << " checked)";
    if (!c.passed) out << ": " << c.counterexample;
    out << "\n";
  }
  for (const auto& m : r.mismatches) {
    out << "  mismatch a = " << m.a << ": expected " << join(m.expected) << ", got " << join(m.got) << "\n";
  }
}

std::vector<unsigned> valid_ks(unsigned n) {
  std::vector<unsigned> ks;
  for (unsigned k = 1; k <= 2 * n; ++k) {
    if (gcd_u64(k, n) == 1) ks.push_back(k);
  }
  return ks;
}

}  // namespace

SolveReport solve_instance(unsigned n, unsigned k, const std::string& a_hex,
                           const std::optional<std::string>& modulus) {
  SolveReport rep;
  rep.n = n;
  rep.k = k;
  const auto start = Clock::now();
  if (n == 1) {
    const BinPoly a = BinPoly::from_hex(a_hex);
    if (a.degree() != 0) throw Error(ErrorCode::BadParams, "a must be 0x1 over GF(2)");
    rep.a = a.to_hex();
    rep.modulus = modulus ? BinPoly::from_hex(*modulus).to_hex() : "0x2";
    for (int r : roots_over_gf2(k, 1)) rep.roots.push_back(r ? "0x1" : "0x0");
    rep.timing_ms = elapsed_ms(start);
    return rep;
  }
  const auto tower = make_tower(n, modulus);
  const ProblemInstance inst = make_instance(tower, k, tower->base().from_hex(a_hex));
  const SolveOutcome outcome = solve_pa(inst);
  rep.timing_ms = elapsed_ms(start);
  rep.a = inst.a.to_hex();
  rep.modulus = tower->base().modulus().to_hex();
  for (const auto& r : outcome.roots) rep.roots.push_back(r.to_hex());
  const Witness& w = outcome.witness;
  rep.witness = SolveReport::WitnessJson{
      {w.t.c0().to_hex(), w.t.c1().to_hex()}, w.y.to_hex(), to_string(w.kase), to_string(w.branch)};
  return rep;
}

BenchReport bench(unsigned n, unsigned k, std::uint64_t samples, std::uint64_t seed,
                  const std::optional<std::string>& modulus) {
  const auto tower = make_tower(n, modulus);
  const BaseField& field = tower->base();
  BenchReport rep;
  rep.n = n;
  rep.k = k;
  rep.modulus = field.modulus().to_hex();
  rep.seed = seed;
  rep.samples = samples;
  std::mt19937_64 gen(seed);
  std::vector<double> times;
  times.reserve(samples);
  for (std::uint64_t i = 0; i < samples; ++i) {
    BaseElt a = field.random(gen);
    while (a.is_zero()) a = field.random(gen);
    const ProblemInstance inst = make_instance(tower, k, a);
    const auto start = Clock::now();
    try {
      const SolveOutcome out = solve_pa(inst);
      times.push_back(elapsed_ms(start));
      ++rep.counts[static_cast<unsigned>(out.roots.size())];
      for (const auto& r : out.roots) {
        if (!eval_pa(r, k, a).is_zero()) ++rep.substitution_failures;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InternalInvariant) throw;
      times.push_back(elapsed_ms(start));
      ++rep.substitution_failures;
    }
  }
  if (!times.empty()) {
    std::sort(times.begin(), times.end());
    rep.median_ms = times[times.size() / 2];
    rep.max_ms = times.back();
  }
  return rep;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Roots of x^(2^k+1) + x + a over GF(2^n)"};
  app.require_subcommand(1);

  unsigned n = 0, k = 0;
  std::string a_hex, r_hex, s_hex, t_hex;
  std::optional<std::string> modulus;
  bool json_out = false;
  unsigned max_n = kDefaultMaxN;
  std::uint64_t seed = 1, samples = 1000;
  std::optional<unsigned> k_opt;

  auto add_field = [&](CLI::App* cmd) {
    cmd->add_option("--n", n, "extension degree")->required();
    cmd->add_option("--modulus", modulus, "irreducible modulus in hex (default: smallest)");
    cmd->add_flag("--json", json_out, "emit JSON");
  };

  auto* solve_cmd = app.add_subcommand("solve", "all roots of P_a");
  add_field(solve_cmd);
  solve_cmd->add_option("--k", k, "exponent k, gcd(n, k) = 1")->required();
  solve_cmd->add_option("--a", a_hex, "constant term a in hex")->required();

  auto* crit_cmd = app.add_subcommand("criterion", "root count from the trace and cube tests only");
  add_field(crit_cmd);
  crit_cmd->add_option("--k", k, "exponent k, gcd(n, k) = 1")->required();
  crit_cmd->add_option("--a", a_hex, "constant term a in hex")->required();

  auto* count_cmd = app.add_subcommand("count", "histogram of root counts over every a (exhaustive)");
  add_field(count_cmd);
  count_cmd->add_option("--k", k, "exponent k, gcd(n, k) = 1")->required();
  count_cmd->add_option("--max-n", max_n, "exhaustive size guard");

  auto* verify_cmd = app.add_subcommand("verify", "solver against brute force for every a");
  add_field(verify_cmd);
  verify_cmd->add_option("--k", k_opt, "single k (default: every k in [1, 2n] prime to n)");
  verify_cmd->add_option("--max-n", max_n, "exhaustive size guard");
  verify_cmd->add_option("--seed", seed, "random seed");

  auto* reduce_cmd = app.add_subcommand("reduce", "map x^(2^k+1) + r x^(2^k) + s x + t onto P_a");
  add_field(reduce_cmd);
  reduce_cmd->add_option("--k", k, "exponent k, gcd(n, k) = 1")->required();
  reduce_cmd->add_option("--r", r_hex, "coefficient of x^(2^k) in hex")->required();
  reduce_cmd->add_option("--s", s_hex, "coefficient of x in hex")->required();
  reduce_cmd->add_option("--t", t_hex, "constant term in hex")->required();

  auto* info_cmd = app.add_subcommand("field-info", "field and tower constants");
  add_field(info_cmd);

  auto* bench_cmd = app.add_subcommand("bench", "time closed-form solves on random a");
  add_field(bench_cmd);
  bench_cmd->add_option("--k", k, "exponent k, gcd(n, k) = 1")->required();
  bench_cmd->add_option("--samples", samples, "number of random a");
  bench_cmd->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (solve_cmd->parsed()) {
      const SolveReport rep = solve_instance(n, k, a_hex, modulus);
      if (json_out) {
        out << to_json(rep).dump() << "\n";
      } else {
        print_solve(rep, out);
      }
      return kOk;
    }
    if (crit_cmd->parsed()) {
      const auto tower = make_tower(n, modulus);
      const ProblemInstance inst = make_instance(tower, k, tower->base().from_hex(a_hex));
      const int trace = unique_root_trace(inst);
      const auto count = static_cast<unsigned>(count_criterion(inst));
      if (json_out) {
        out << nlohmann::json{{"n", n}, {"k", k}, {"a", inst.a.to_hex()}, {"modulus", tower->base().modulus().to_hex()},
                              {"count", count}, {"unique_root_trace", trace}}
                   .dump()
            << "\n";
      } else {
        out << "n = " << n << ", k = " << k << ", a = " << inst.a.to_hex() << "\n";
        out << "unique-root trace: " << trace << "\n";
        out << "count: " << count << "\n";
      }
      return kOk;
    }
    if (count_cmd->parsed()) {
      const auto field = build_base_field(n, modulus ? std::optional<BinPoly>(BinPoly::from_hex(*modulus)) : std::nullopt);
      const OracleReport rep = histogram(*field, k, max_n);
      if (json_out) {
        out << to_json(rep).dump() << "\n";
      } else {
        print_oracle(rep, out);
      }
      return rep.passed() ? kOk : kMismatch;
    }
    if (verify_cmd->parsed()) {
      const auto tower = make_tower(n, modulus);
      if (n > max_n) {
        throw Error(ErrorCode::TooLarge, "n = " + std::to_string(n) + " exceeds --max-n " + std::to_string(max_n));
      }
      const std::vector<unsigned> ks = k_opt ? std::vector<unsigned>{*k_opt} : valid_ks(n);
      bool ok = true;
      nlohmann::json all = nlohmann::json::array();
      for (unsigned kk : ks) {
        OracleReport rep = sweep(tower, kk, max_n);
        rep.seed = seed;
        if (n <= 14) rep.checks.push_back(check_mcm_mapping(tower->base(), kk));
        ok = ok && rep.passed();
        if (json_out) {
          all.push_back(to_json(rep));
        } else {
          print_oracle(rep, out);
        }
      }
      if (json_out) out << all.dump() << "\n";
      if (!json_out) out << (ok ? "verify: pass" : "verify: FAIL") << "\n";
      return ok ? kOk : kMismatch;
    }
    if (reduce_cmd->parsed()) {
      const auto tower = make_tower(n, modulus);
      const BaseField& f = tower->base();
      const GeneralReduction red = reduce_general(f.from_hex(r_hex), f.from_hex(s_hex), f.from_hex(t_hex), k);
      std::vector<std::string> roots;
      if (red.a.is_zero()) {
        // P_0(y) = y (y^(2^k) + 1) vanishes exactly at 0 and 1.
        roots = {red.map_root(f.zero()).to_hex(), red.map_root(f.one()).to_hex()};
      } else {
        const SolveOutcome sol = solve_pa(make_instance(tower, k, red.a));
        for (const auto& y : sol.roots) roots.push_back(red.map_root(y).to_hex());
      }
      std::sort(roots.begin(), roots.end(), [&](const std::string& x, const std::string& y) {
        return f.from_hex(x) < f.from_hex(y);
      });
      if (json_out) {
        out << nlohmann::json{{"n", n},          {"k", k},
                              {"a", red.a.to_hex()}, {"lambda", red.lambda.to_hex()},
                              {"shift", red.shift.to_hex()}, {"modulus", f.modulus().to_hex()},
                              {"count", roots.size()}, {"roots", roots}}
                   .dump()
            << "\n";
      } else {
        out << "x = lambda * y + shift with lambda = " << red.lambda.to_hex() << ", shift = " << red.shift.to_hex()
            << "\n";
        out << "reduced a = " << red.a.to_hex() << "\n";
        out << "roots: " << join(roots) << "\n";
      }
      return kOk;
    }
    if (info_cmd->parsed()) {
      const auto tower = make_tower(n, modulus);
      const BaseField& f = tower->base();
      if (json_out) {
        out << nlohmann::json{{"n", n},
                              {"modulus", f.modulus().to_hex()},
                              {"group_order", f.group_order().str()},
                              {"circle_order", f.circle_order().str()},
                              {"delta", tower->delta().to_hex()},
                              {"zeta", {tower->zeta().c0().to_hex(), tower->zeta().c1().to_hex()}},
                              {"omega", {tower->omega().c0().to_hex(), tower->omega().c1().to_hex()}}}
                   .dump()
            << "\n";
      } else {
        out << "n = " << n << "\nmodulus = " << f.modulus().to_hex() << "\n2^n - 1 = " << f.group_order().str()
            << "\n2^n + 1 = " << f.circle_order().str() << "\ndelta = " << tower->delta().to_hex()
            << "\nzeta = " << tower->zeta().to_string() << "\nomega = " << tower->omega().to_string() << "\n";
      }
      return kOk;
    }
    if (bench_cmd->parsed()) {
      const BenchReport rep = bench(n, k, samples, seed, modulus);
      if (json_out) {
        out << to_json(rep).dump() << "\n";
      } else {
        out << "n = " << n << ", k = " << k << ", samples = " << rep.samples << ", seed = " << rep.seed << "\n";
        out << "counts: " << histogram_text(rep.counts) << "\n";
        out << "substitution failures: " << rep.substitution_failures << "\n";
        out << "median solve: " << rep.median_ms << " ms, max: " << rep.max_ms << " ms\n";
      }
      return rep.substitution_failures == 0 ? kOk : kInternal;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::InternalInvariant ? kInternal : kUsage;
  }
  return kUsage;
}

}  // namespace trinomial::cli
