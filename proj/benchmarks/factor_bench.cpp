#include <benchmark/benchmark.h>

#include "kcomm/factor.hpp"
#include "support/generators.hpp"

namespace {

using namespace kcomm;

std::vector<UniPoly> inputs(const Field& k, int degree) {
  Rng rng(7);
  std::vector<UniPoly> ps;
  for (int i = 0; i < 16; ++i) ps.push_back(testgen::random_poly_exact(k, degree, rng, 9));
  return ps;
}

void run_factor(benchmark::State& state, const Field& k) {
  const auto ps = inputs(k, static_cast<int>(state.range(0)));
  Rng rng(11);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(factor(ps[i++ % ps.size()], rng));
  }
}

void BM_FactorF2(benchmark::State& state) { run_factor(state, Field::prime(2)); }
void BM_FactorF101(benchmark::State& state) { run_factor(state, Field::prime(101)); }
void BM_FactorLargePrime(benchmark::State& state) { run_factor(state, Field::prime(1'000'000'007)); }
void BM_FactorQ(benchmark::State& state) { run_factor(state, Field::rationals()); }

// t^n - 1 splits into many cyclotomic factors, which stresses recombination.
void BM_FactorQCyclotomic(benchmark::State& state) {
  const Field q = Field::rationals();
  const int n = static_cast<int>(state.range(0));
  const UniPoly f = UniPoly::monomial(q.one(), n) - UniPoly::constant(q.one());
  Rng rng(13);
  for (auto _ : state) benchmark::DoNotOptimize(factor(f, rng));
}

BENCHMARK(BM_FactorF2)->Arg(8)->Arg(32)->Arg(128);
BENCHMARK(BM_FactorF101)->Arg(8)->Arg(32)->Arg(64);
BENCHMARK(BM_FactorLargePrime)->Arg(8)->Arg(32);
BENCHMARK(BM_FactorQ)->Arg(6)->Arg(12)->Arg(24);
BENCHMARK(BM_FactorQCyclotomic)->Arg(12)->Arg(30)->Arg(60);

}  // namespace
