#include <benchmark/benchmark.h>

#include "cohomolib/global.hpp"

using namespace cohomolib;

namespace {

GroupPtr cyclic(int n) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = (i + j) % n;
  return validate_group(rows, "Z" + std::to_string(n));
}

GroupPtr dihedral8() {
  return group_from_permutations({{1, 2, 3, 0}, {3, 2, 1, 0}}, 4, 8, "D4");
}

void bench_automorphisms(benchmark::State& state) {
  auto g = dihedral8();
  for (auto _ : state) benchmark::DoNotOptimize(automorphisms(g));
}
BENCHMARK(bench_automorphisms);

void bench_h1_enumerate(benchmark::State& state) {
  auto gamma = cyclic(static_cast<int>(state.range(0)));
  auto ctx = trivial_action(gamma, cyclic(9));
  for (auto _ : state) benchmark::DoNotOptimize(h1_enumerate(ctx));
}
BENCHMARK(bench_h1_enumerate)->Arg(6)->Arg(12);

void bench_h2_enumerate(benchmark::State& state) {
  auto gamma = cyclic(static_cast<int>(state.range(0)));
  auto ctx = trivial_action(gamma, cyclic(4));
  for (auto _ : state) benchmark::DoNotOptimize(h2_abelian_enumerate(ctx));
}
BENCHMARK(bench_h2_enumerate)->Arg(4)->Arg(8);

void bench_local_enumerate(benchmark::State& state) {
  auto d = make_local_datum(dihedral8(), 3);
  for (auto _ : state) benchmark::DoNotOptimize(local_h1_enumerate(d));
}
BENCHMARK(bench_local_enumerate);

} // namespace

BENCHMARK_MAIN();
