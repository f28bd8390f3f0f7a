#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "trinomial/classic_polys.hpp"
#include "trinomial/field.hpp"
#include "trinomial/solver.hpp"
#include "trinomial/tower.hpp"

using namespace trinomial;

namespace {

std::vector<BaseElt> sample(const BaseField& f, std::size_t count, unsigned seed) {
  std::mt19937_64 gen(seed);
  std::vector<BaseElt> out;
  out.reserve(count);
  while (out.size() < count) {
    BaseElt x = f.random(gen);
    if (!x.is_zero()) out.push_back(x);
  }
  return out;
}

void BM_BaseMul(benchmark::State& state) {
  const auto f = build_base_field(static_cast<unsigned>(state.range(0)));
  const auto xs = sample(*f, 256, 1);
  std::size_t i = 0;
  BaseElt acc = f->one();
  for (auto _ : state) {
    acc = acc * xs[i++ & 255];
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_BaseMul)->Arg(10)->Arg(64)->Arg(127)->Arg(257)->Arg(512);

void BM_BaseSquare(benchmark::State& state) {
  const auto f = build_base_field(static_cast<unsigned>(state.range(0)));
  BaseElt acc = sample(*f, 1, 2).front();
  for (auto _ : state) {
    acc = acc.square();
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_BaseSquare)->Arg(10)->Arg(64)->Arg(127)->Arg(512);

void BM_BaseInv(benchmark::State& state) {
  const auto f = build_base_field(static_cast<unsigned>(state.range(0)));
  const auto xs = sample(*f, 256, 3);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(xs[i++ & 255].inv());
}
BENCHMARK(BM_BaseInv)->Arg(64)->Arg(127)->Arg(512);

void BM_TowerMul(benchmark::State& state) {
  const auto t = build_tower(build_base_field(static_cast<unsigned>(state.range(0))));
  std::mt19937_64 gen(4);
  TowerElt acc = t->random(gen);
  const TowerElt y = t->random(gen);
  for (auto _ : state) {
    acc = acc * y;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_TowerMul)->Arg(64)->Arg(127);

void BM_SolvePa(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const unsigned k = static_cast<unsigned>(state.range(1));
  const auto t = build_tower(build_base_field(n));
  const auto as = sample(t->base(), 64, 5);
  std::vector<ProblemInstance> insts;
  for (const BaseElt& a : as) insts.push_back(make_instance(t, k, a));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(solve_pa(insts[i++ & 63]));
}
BENCHMARK(BM_SolvePa)->Args({13, 5})->Args({64, 7})->Args({127, 1})->Args({127, 30})->Args({257, 100})
    ->Unit(benchmark::kMicrosecond);

void BM_DicksonEval(benchmark::State& state) {
  const auto t = build_tower(build_base_field(64));
  std::mt19937_64 gen(6);
  const TowerElt z = t->random(gen);
  const BigInt m(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dickson_eval(z, m));
}
BENCHMARK(BM_DicksonEval)->Arg(1000)->Arg(65535);

}  // namespace

BENCHMARK_MAIN();
