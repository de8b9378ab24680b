#include <benchmark/benchmark.h>

#include <vector>

#include "hocc/oracle.hpp"
#include "hocc/regime.hpp"

namespace {

const std::vector<hocc::FadingModel> kModels = {
    hocc::Rayleigh{}, hocc::Lognormal{6.0}, hocc::Egk{2.0, 1.5, 1.5, 0.8}, hocc::KappaMu{1.0, 1.5},
    hocc::EtaMu{0.5, 1.0, 2}};

}  // namespace

static void BM_Quadrature(benchmark::State& state) {
  const auto& model = kModels[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) benchmark::DoNotOptimize(hocc::hocc_quadrature(model, 2, hocc::MeanSnr(10.0)));
  state.SetLabel(hocc::to_string(model));
}
BENCHMARK(BM_Quadrature)->DenseRange(0, 4);

static void BM_MonteCarlo(benchmark::State& state) {
  const auto& model = kModels[static_cast<std::size_t>(state.range(0))];
  hocc::McConfig cfg;
  cfg.samples = 100000;
  cfg.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(hocc::hocc_monte_carlo_orders(model, 4, hocc::MeanSnr(10.0), cfg));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(cfg.samples));
  state.SetLabel(hocc::to_string(model));
}
BENCHMARK(BM_MonteCarlo)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

static void BM_LowBoundary(benchmark::State& state) {
  hocc::BoundaryConfig cfg;
  cfg.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(hocc::low_boundary(hocc::Rayleigh{}, cfg));
}
BENCHMARK(BM_LowBoundary)->Unit(benchmark::kMillisecond);

static void BM_HighOnset(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hocc::high_onset(hocc::KappaMu{1.0, 1.5}));
}
BENCHMARK(BM_HighOnset)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
