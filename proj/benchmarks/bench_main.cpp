#include "qgalois/algebras.hpp"
#include "qgalois/findim.hpp"
#include "qgalois/galois.hpp"
#include "qgalois/qcalc.hpp"
#include "qgalois/rep.hpp"

#include <benchmark/benchmark.h>

using namespace qgalois;

static void BM_ScalarMul(benchmark::State& state) {
  CycloScalar x(mpq_class(3, 7), mpq_class(-5, 11)), y(mpq_class(2, 9), mpq_class(1, 4));
  for (auto _ : state) {
    x = x * y + CycloScalar(1);
    benchmark::DoNotOptimize(x);
    if (x.re_part().get_den() > 1000000) x = CycloScalar(mpq_class(3, 7), mpq_class(-5, 11));
  }
}
BENCHMARK(BM_ScalarMul);

static void BM_QBinom(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(qbinom_at_omega(n, n / 2));
}
BENCHMARK(BM_QBinom)->Arg(12)->Arg(48);

static void BM_NormalFormSlq2(benchmark::State& state) {
  auto H = hopf("slq2");
  const NCPoly p = parse_poly("(a + b + c + d)^" + std::to_string(state.range(0)), [&] {
    Symbols s = H->symbols();
    s.reduce = nullptr;
    return s;
  }());
  for (auto _ : state) {
    // fresh system each round so the word cache does not hide the rewriting
    ReductionSystem rs(H->alphabet(), H->rs().rules(), H->rs().order());
    benchmark::DoNotOptimize(rs.normal_form(p));
  }
}
BENCHMARK(BM_NormalFormSlq2)->Arg(3)->Arg(5);

static void BM_Coproduct(benchmark::State& state) {
  auto H = hopf("slq2");
  const NCPoly x = H->parse("a^3*b^2*c + d^3*b");
  for (auto _ : state) benchmark::DoNotOptimize(H->coproduct(x));
}
BENCHMARK(BM_Coproduct);

static void BM_ResolvabilitySlq2(benchmark::State& state) {
  auto H = hopf("slq2");
  for (auto _ : state) {
    ReductionSystem rs(H->alphabet(), H->rs().rules(), H->rs().order());
    benchmark::DoNotOptimize(check_resolvable(rs));
  }
}
BENCHMARK(BM_ResolvabilitySlq2);

static void BM_BuildAF(benchmark::State& state) {
  auto H = hopf("af");
  for (auto _ : state) benchmark::DoNotOptimize(FinDimHopf(H));
}
BENCHMARK(BM_BuildAF)->Unit(benchmark::kMillisecond);

static void BM_Integrals(benchmark::State& state) {
  auto F = findim("af");
  for (auto _ : state) benchmark::DoNotOptimize(left_integrals(*F));
}
BENCHMARK(BM_Integrals)->Unit(benchmark::kMillisecond);

static void BM_CocycleTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(CleavingFamily("borel_plus", kDefaultNu));
}
BENCHMARK(BM_CocycleTable)->Unit(benchmark::kMillisecond);

static void BM_RhoRank(benchmark::State& state) {
  std::vector<FinVec> rows;
  for (const auto& m : rho_basis()) rows.push_back(m.entries());
  for (auto _ : state) benchmark::DoNotOptimize(rank(rows));
}
BENCHMARK(BM_RhoRank)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
