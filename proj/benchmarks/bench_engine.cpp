#include <benchmark/benchmark.h>

#include "capelli/gaudin.hpp"
#include "capelli/identity_checks.hpp"
#include "capelli/prng.hpp"

using namespace capelli;

namespace {

ProblemData bench_problem(int M, int N) {
  SplitMix64 rng(987650 + static_cast<uint64_t>(M * 10 + N));
  ProblemData d;
  d.M = M;
  d.N = N;
  d.z = rng.distinct_rats(N);
  d.lambda = rng.distinct_rats(M);
  d.h = Rat(7, 5);
  return d;
}

WeylElement bench_element(const AlgebraSignature& sig, uint64_t seed, int terms) {
  SplitMix64 rng(seed);
  WeylElement e = WeylElement::zero(sig);
  for (int t = 0; t < terms; ++t) {
    Monomial m = Monomial::unit(sig.M, sig.N);
    for (auto& v : m.xe) v = static_cast<int32_t>(rng.next_in(0, 2));
    for (auto& v : m.pe) v = static_cast<int32_t>(rng.next_in(0, 2));
    m.pu = static_cast<int32_t>(rng.next_in(0, 2));
    e.add_term(m, RatFunc(rng.next_rat()) / RatFunc(BiPoly::linear(Var::U, Rat(t + 11))));
  }
  return e;
}

void BM_no_multiply(benchmark::State& state) {
  const AlgebraSignature sig{3, 3, Rat(7, 5)};
  const WeylElement a = bench_element(sig, 1, static_cast<int>(state.range(0)));
  const WeylElement b = bench_element(sig, 2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(multiply(a, b));
}
BENCHMARK(BM_no_multiply)->Arg(4)->Arg(16);

void BM_rdet_G(benchmark::State& state) {
  const ProblemData d = bench_problem(static_cast<int>(state.range(0)), 3);
  const WeylMatrix g = build_G(d);
  for (auto _ : state) benchmark::DoNotOptimize(rdet(g));
}
BENCHMARK(BM_rdet_G)->Arg(2)->Arg(3);

void BM_rdet_W_6x6(benchmark::State& state) {
  const ProblemData d = bench_problem(3, 3);
  const WeylMatrix w = build_W(d);
  for (auto _ : state) benchmark::DoNotOptimize(rdet(w));
}
BENCHMARK(BM_rdet_W_6x6);

void BM_theorem_main_rhs(benchmark::State& state) {
  const ProblemData d = bench_problem(3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(theorem_main_rhs(d));
}
BENCHMARK(BM_theorem_main_rhs);

void BM_check_theorem_main_33(benchmark::State& state) {
  const ProblemData d = bench_problem(3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(check_theorem_main(d));
}
BENCHMARK(BM_check_theorem_main_33);

void BM_transfer_family(benchmark::State& state) {
  ProblemData d = bench_problem(2, 3);
  d.h = Rat(1);
  const WeightBasis basis = enumerate_basis(2, 3, {2, 1}, {1, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(transfer_family(d, basis, Side::glM));
}
BENCHMARK(BM_transfer_family);

}  // namespace

BENCHMARK_MAIN();
