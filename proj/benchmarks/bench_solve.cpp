#include <benchmark/benchmark.h>

#include <array>
#include <variant>

#include <momsolve/extension.hpp>
#include <momsolve/moments.hpp>
#include <momsolve/recovery.hpp>
#include <momsolve/variety.hpp>

using namespace momsolve;

namespace {

MomentSequence3 seq(std::array<long, 10> v) {
  std::array<Rational, 10> r;
  for (std::size_t k = 0; k < 10; ++k) r[k] = Rational(v[k]);
  return MomentSequence3(r);
}

// One reference input per branch of the completion recipe, plus the rank-3
// flat case.
const MomentSequence3 kFlatRank2 = seq({5, 1, 2, 5, -2, 2, 1, 2, -2, 2});
const MomentSequence3 kFlatRank3 = seq({3, 2, 0, 2, -1, 2, 2, -1, 1, 0});
const MomentSequence3 kSurplus = seq({2, 1, 1, 2, 1, 2, 1, 2, 1, 2});
const MomentSequence3 kDeficit = seq({3, 1, 1, 5, -3, 9, 9, 3, 1, 1});

void bench_solve(benchmark::State& state, const MomentSequence3& s) {
  for (auto _ : state) {
    SolveOutcome out = solve(s);
    benchmark::DoNotOptimize(out);
  }
}

void BM_SolveFlatRank2(benchmark::State& state) { bench_solve(state, kFlatRank2); }
void BM_SolveFlatRank3(benchmark::State& state) { bench_solve(state, kFlatRank3); }
void BM_SolveSurplus(benchmark::State& state) { bench_solve(state, kSurplus); }
void BM_SolveDeficit(benchmark::State& state) { bench_solve(state, kDeficit); }

void BM_Classify(benchmark::State& state) {
  for (auto _ : state) {
    Classification cls = classify(kDeficit);
    benchmark::DoNotOptimize(cls);
  }
}

void BM_FlatExtension(benchmark::State& state) {
  SchurData sd = *compute_schur(kSurplus);
  SymMatrix C2 = choose_C2(sd, Branch::Greater);
  MomentMatrix M2 = assemble_M2(kSurplus, C2);
  RelationBasis rb = extract_relations(M2);
  for (auto _ : state) {
    MomentMatrix M3 = build_flat_M3(M2, rb.relations);
    benchmark::DoNotOptimize(M3);
  }
}

void BM_RankM3(benchmark::State& state) {
  SchurData sd = *compute_schur(kSurplus);
  MomentMatrix M2 = assemble_M2(kSurplus, choose_C2(sd, Branch::Greater));
  MomentMatrix M3 = build_flat_M3(M2, extract_relations(M2).relations);
  for (auto _ : state) {
    int r = rank(M3.mat());
    benchmark::DoNotOptimize(r);
  }
}

void BM_RealRootsQuartic(benchmark::State& state) {
  // 16x^4 + 8x^3 - 32x^2 - 6x + 9, the support polynomial of the surplus
  // reference input.
  UniPoly q({Rational(9), Rational(-6), Rational(-32), Rational(8), Rational(16)});
  for (auto _ : state) {
    auto roots = real_roots(q, 1e-12);
    benchmark::DoNotOptimize(roots);
  }
}

BENCHMARK(BM_SolveFlatRank2);
BENCHMARK(BM_SolveFlatRank3);
BENCHMARK(BM_SolveSurplus);
BENCHMARK(BM_SolveDeficit);
BENCHMARK(BM_Classify);
BENCHMARK(BM_FlatExtension);
BENCHMARK(BM_RankM3);
BENCHMARK(BM_RealRootsQuartic);

}  // namespace

BENCHMARK_MAIN();
