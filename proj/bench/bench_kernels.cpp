// Serial reference vs OpenMP for the enumeration kernels, on u(L) of the
// m = 1 odd extension example (dim 12 over F_3) and the Clifford algebra.

#include <benchmark/benchmark.h>

#include "superengel/env_alg.hpp"
#include "superengel/gallery.hpp"
#include "superengel/kernels.hpp"

using namespace superengel;

namespace {

struct Fixture {
  std::uint32_t p;
  std::vector<FpMatrix> family;
  kernels::FpAlgebraTable table;
  FpSubspace center;
  std::vector<std::size_t> support;
};

Fixture make(const std::string& name) {
  const auto L = LieSuperalgebra::from_raw(*gallery::by_name(name, 1, 3, true));
  const RegularRep rep(EnvAlgebra::restricted(L));
  Fixture f{L.characteristic(),
            std::vector<FpMatrix>(rep.basis_ads().begin() + 1, rep.basis_ads().end()),
            fp_table(rep),
            rep.center(),
            {}};
  for (std::size_t i = 1; i < rep.dim(); ++i) f.support.push_back(i);
  return f;
}

const Fixture& fixture(int which) {
  static const Fixture g1 = make("G1"), g4 = make("G4");
  return which == 0 ? g1 : g4;
}

void BM_FamilySerial(benchmark::State& st) {
  const auto& f = fixture(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::scan_family_serial(f.family, f.p));
}

void BM_FamilyOmp(benchmark::State& st) {
  const auto& f = fixture(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::scan_family_omp(f.family, f.p));
}

void BM_PowerCentralSerial(benchmark::State& st) {
  const auto& f = fixture(st.range(0));
  for (auto _ : st)
    benchmark::DoNotOptimize(kernels::scan_power_central_serial(f.table, f.support, f.p, f.center));
}

void BM_PowerCentralOmp(benchmark::State& st) {
  const auto& f = fixture(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::scan_power_central_omp(f.table, f.support, f.p, f.center));
}

}  // namespace

BENCHMARK(BM_FamilySerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FamilyOmp)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PowerCentralSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PowerCentralOmp)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
