#include <benchmark/benchmark.h>

#include "afforb/classifier.hpp"
#include "afforb/farey.hpp"
#include "afforb/oracle.hpp"

using namespace afforb;

namespace {

const SymbolTable kXi{make_symbol("xi", Rational(41421356, 100000000), Rational(41421357, 100000000))};

void BM_FareySequence(benchmark::State& state) {
  const BigInt d = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(farey_sequence(d));
}
BENCHMARK(BM_FareySequence)->Arg(16)->Arg(64)->Arg(256);

void BM_CompanionInverse(benchmark::State& state) {
  const BigInt d = state.range(0);
  const Census c = census(d);
  for (auto _ : state)
    for (const auto& v : c.cs) benchmark::DoNotOptimize(companion_inverse(d, v));
}
BENCHMARK(BM_CompanionInverse)->Arg(101)->Arg(1009)->Arg(10007);

void BM_HermiteNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>((7 * i + 13 * j * j + 3) % 19) - 9;
  for (auto _ : state) benchmark::DoNotOptimize(hermite_normal_form(m));
}
BENCHMARK(BM_HermiteNormalForm)->Arg(3)->Arg(6)->Arg(12);

void BM_COfShortcut(benchmark::State& state) {
  const LineNormal n = LineNormal::canonical(state.range(0), 2 * state.range(0), -3);
  for (auto _ : state) benchmark::DoNotOptimize(line_c(n));
}
BENCHMARK(BM_COfShortcut)->Arg(7)->Arg(19)->Arg(97);

void BM_COfBruteForce(benchmark::State& state) {
  const LineNormal n = LineNormal::canonical(state.range(0), 2 * state.range(0), -3);
  for (auto _ : state) benchmark::DoNotOptimize(min_c_bruteforce(n));
}
BENCHMARK(BM_COfBruteForce)->Arg(7)->Arg(19)->Arg(97);

void BM_Invariant(benchmark::State& state) {
  const SymbolicReal xi = SymbolicReal::symbol("xi");
  const Point x({xi * Rational(3) + Rational(1, 7), xi * Rational(-5, 2) + Rational(2)}, kXi);
  for (auto _ : state) benchmark::DoNotOptimize(invariant(x));
}
BENCHMARK(BM_Invariant);

void BM_RankTwoWitness(benchmark::State& state) {
  const SymbolicReal xi = SymbolicReal::symbol("xi");
  const Point x({xi * Rational(3) + Rational(1, 7), xi * Rational(-5, 2) + Rational(2)}, kXi);
  const AffineUnimodularMap delta(IntMatrix{{2, 3}, {3, 5}}, IntVector{-4, 1});
  const Point y = apply(delta, x);
  for (auto _ : state) benchmark::DoNotOptimize(witness(x, y));
}
BENCHMARK(BM_RankTwoWitness);

void BM_WitnessSearch(benchmark::State& state) {
  const SymbolicReal xi = SymbolicReal::symbol("xi");
  const Point a({Rational(1, 5), xi}, kXi);
  const Point b({Rational(2, 5), xi}, kXi);
  for (auto _ : state) benchmark::DoNotOptimize(witness_search(a, b, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_WitnessSearch)->Arg(2)->Arg(3);

}  // namespace
BENCHMARK_MAIN();
