#include "report_json.hpp"

namespace trinomial::cli {

using nlohmann::json;

namespace {

json histogram_to_json(const std::map<unsigned, std::uint64_t>& h) {
  json j = json::object();
  for (const auto& [count, num] : h) j[std::to_string(count)] = num;
  return j;
}

std::map<unsigned, std::uint64_t> histogram_from_json(const json& j) {
  std::map<unsigned, std::uint64_t> h;
  for (const auto& [key, value] : j.items()) h[static_cast<unsigned>(std::stoul(key))] = value.get<std::uint64_t>();
  return h;
}

}  // namespace

json to_json(const SolveReport& r) {
  json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["a"] = r.a;
  j["modulus"] = r.modulus;
  j["count"] = r.roots.size();
  j["roots"] = r.roots;
  if (r.witness) {
    j["witness"] = {{"T", {r.witness->t[0], r.witness->t[1]}},
                    {"Y", r.witness->y},
                    {"case", r.witness->kase},
                    {"branch", r.witness->branch}};
  } else {
    j["witness"] = nullptr;
  }
  j["timing_ms"] = r.timing_ms;
  return j;
}

SolveReport solve_report_from_json(const json& j) {
  SolveReport r;
  r.n = j.at("n").get<unsigned>();
  r.k = j.at("k").get<unsigned>();
  r.a = j.at("a").get<std::string>();
  r.modulus = j.at("modulus").get<std::string>();
  r.roots = j.at("roots").get<std::vector<std::string>>();
  if (!j.at("witness").is_null()) {
    const json& w = j.at("witness");
    r.witness = SolveReport::WitnessJson{{w.at("T").at(0).get<std::string>(), w.at("T").at(1).get<std::string>()},
                                         w.at("Y").get<std::string>(),
                                         w.at("case").get<std::string>(),
                                         w.at("branch").get<std::string>()};
  }
  r.timing_ms = j.at("timing_ms").get<double>();
  return r;
}

json to_json(const OracleReport& r) {
  json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["modulus"] = r.modulus;
  j["seed"] = r.seed;
  j["histogram"] = histogram_to_json(r.histogram);
  j["mismatch_count"] = r.mismatch_count;
  j["mismatches"] = json::array();
  for (const auto& m : r.mismatches) {
    j["mismatches"].push_back({{"a", m.a}, {"expected", m.expected}, {"got", m.got}});
  }
  j["checks"] = json::array();
  for (const auto& c : r.checks) {
    j["checks"].push_back(
        {{"name", c.name}, {"passed", c.passed}, {"checked", c.checked}, {"counterexample", c.counterexample}});
  }
  j["passed"] = r.passed();
  return j;
}

OracleReport oracle_report_from_json(const json& j) {
  OracleReport r;
  r.n = j.at("n").get<unsigned>();
  r.k = j.at("k").get<unsigned>();
  r.modulus = j.at("modulus").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.histogram = histogram_from_json(j.at("histogram"));
  r.mismatch_count = j.at("mismatch_count").get<std::uint64_t>();
  for (const auto& m : j.at("mismatches")) {
    r.mismatches.push_back({m.at("a").get<std::string>(), m.at("expected").get<std::vector<std::string>>(),
                            m.at("got").get<std::vector<std::string>>()});
  }
  for (const auto& c : j.at("checks")) {
    r.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(),
                        c.at("checked").get<std::uint64_t>(), c.at("counterexample").get<std::string>()});
  }
  return r;
}

json to_json(const BenchReport& r) {
  return {{"n", r.n},
          {"k", r.k},
          {"modulus", r.modulus},
          {"seed", r.seed},
          {"samples", r.samples},
          {"substitution_failures", r.substitution_failures},
          {"counts", histogram_to_json(r.counts)},
          {"median_ms", r.median_ms},
          {"max_ms", r.max_ms}};
}

BenchReport bench_report_from_json(const json& j) {
  BenchReport r;
  r.n = j.at("n").get<unsigned>();
  r.k = j.at("k").get<unsigned>();
  r.modulus = j.at("modulus").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.samples = j.at("samples").get<std::uint64_t>();
  r.substitution_failures = j.at("substitution_failures").get<std::uint64_t>();
  r.counts = histogram_from_json(j.at("counts"));
  r.median_ms = j.at("median_ms").get<double>();
  r.max_ms = j.at("max_ms").get<double>();
  return r;
}

}  // namespace trinomial::cli
