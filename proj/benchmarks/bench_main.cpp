#include <benchmark/benchmark.h>

#include "sa/halo.hpp"
#include "sa/lattice.hpp"

namespace {

void bm_halo_matrix(benchmark::State& state) {
  auto r = std::make_shared<sa::Semiring>(
      sa::matrix_semiring(sa::truncated_naturals(2), 2).ring);
  sa::Module reg = sa::regular_module(r);
  sa::Bitset s = sa::Bitset::singleton(reg.size(), r->one());
  for (auto _ : state) {
    benchmark::DoNotOptimize(sa::halo(reg, s).members.count());
  }
}
BENCHMARK(bm_halo_matrix);

void bm_additive_closure(benchmark::State& state) {
  auto r = std::make_shared<sa::Semiring>(
      sa::matrix_semiring(sa::truncated_naturals(2), 2).ring);
  sa::Module reg = sa::regular_module(r);
  sa::Bitset seed = sa::Bitset::of(reg.size(), {r->one()});
  for (auto _ : state) {
    benchmark::DoNotOptimize(sa::additive_closure(reg, seed).count());
  }
}
BENCHMARK(bm_additive_closure);

void bm_bruteforce_sa(benchmark::State& state) {
  auto b = std::make_shared<sa::Semiring>(sa::boolean_semifield());
  sa::Module v = sa::free_module(b, 2).mod;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sa::enumerate_sa_bruteforce(v).members.size());
  }
}
BENCHMARK(bm_bruteforce_sa);

}  // namespace

BENCHMARK_MAIN();
