#include <benchmark/benchmark.h>

#include "canonrep/derham.hpp"
#include "canonrep/finite_field.hpp"
#include "canonrep/group.hpp"
#include "canonrep/laurent.hpp"
#include "canonrep/rep.hpp"
#include "canonrep/verify.hpp"

namespace canonrep {
namespace {

void BM_FieldMul(benchmark::State& state) {
  QuadraticField f(static_cast<int>(state.range(0)));
  Fq x = f.make(3, 1);
  const Fq y = f.make(2, 5 % f.characteristic());
  for (auto _ : state) {
    x = x * y + f.one();
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_FieldMul)->Arg(13)->Arg(31);

void BM_FieldInverse(benchmark::State& state) {
  QuadraticField f(31);
  Fq x = f.make(7, 3);
  for (auto _ : state) {
    x = x.inverse() + f.one();
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_FieldInverse);

void BM_GroupEnumeration(benchmark::State& state) {
  Curve c(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    AutGroup g(c);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_GroupEnumeration)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_LaurentInfinity(benchmark::State& state) {
  Curve c(static_cast<int>(state.range(0)));
  const CurveFunction f = c.y() * c.x_shift_power(0, -c.genus() - 1);
  const int order = default_series_order(c);
  for (auto _ : state) {
    benchmark::DoNotOptimize(laurent_at(f, Place::infinity(), order));
  }
}
BENCHMARK(BM_LaurentInfinity)->Arg(7)->Arg(13);

void BM_NortonCanonical(benchmark::State& state) {
  Curve c(static_cast<int>(state.range(0)));
  AutGroup g(c);
  const MatrixRep rho = canonical_rep(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_absolutely_irreducible(rho.images()));
  }
}
BENCHMARK(BM_NortonCanonical)->Arg(7)->Arg(13);

void BM_DeRhamAssembly(benchmark::State& state) {
  Curve c(static_cast<int>(state.range(0)));
  AutGroup g(c);
  for (auto _ : state) {
    DeRham dr(g);
    const MatrixRep rep = dr.assemble_rep();
    benchmark::DoNotOptimize(rep.closure().reached);
  }
}
BENCHMARK(BM_DeRhamAssembly)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_CertifyPrime(benchmark::State& state) {
  SuiteConfig config;
  config.workers = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify_prime(static_cast<int>(state.range(0)), config));
  }
}
BENCHMARK(BM_CertifyPrime)->Arg(5)->Arg(11)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace canonrep

BENCHMARK_MAIN();
