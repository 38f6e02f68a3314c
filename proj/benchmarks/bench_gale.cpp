#include <benchmark/benchmark.h>

#include <random>

#include "gale/czt.hpp"
#include "gale/gale.hpp"
#include "gale/oracle.hpp"

namespace {

gale::ComplexVector random_values(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  gale::ComplexVector v(count);
  for (auto& z : v) {
    const double re = unit(rng);
    z = {re, unit(rng)};
  }
  return v;
}

gale::ComplexImage random_image(std::size_t m, std::size_t n) {
  return {m, n, random_values(m * n, 1)};
}

gale::GalfdOperator make_operator(std::size_t size, int S) {
  const int M = static_cast<int>(size);
  const int N = static_cast<int>(size * 25 / 32);
  gale::GaleSettings settings;
  settings.S = S;
  return {gale::make_galfd_spec(M, N), size, size, settings};
}

// args: image size, S
void BM_GaleForward(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  const auto op = make_operator(size, static_cast<int>(state.range(1)));
  const auto x = random_image(size, size);
  for (auto _ : state) benchmark::DoNotOptimize(op.forward(x));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(op.samples_per_ray() *
                                                                         op.ray_count()));
}
BENCHMARK(BM_GaleForward)
    ->ArgsProduct({{64, 128, 256}, {2, 4, 8}})
    ->Unit(benchmark::kMillisecond);

void BM_GaleAdjoint(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  const auto op = make_operator(size, static_cast<int>(state.range(1)));
  const gale::RaySamples y(op.samples_per_ray(), op.ray_count(),
                           random_values(op.samples_per_ray() * op.ray_count(), 2));
  for (auto _ : state) benchmark::DoNotOptimize(op.adjoint(y));
}
BENCHMARK(BM_GaleAdjoint)
    ->ArgsProduct({{64, 128, 256}, {2, 4, 8}})
    ->Unit(benchmark::kMillisecond);

void BM_GalePlan(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(make_operator(size, 4));
}
BENCHMARK(BM_GalePlan)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

// args: input length m, output length P
void BM_Czt(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto P = static_cast<std::size_t>(state.range(1));
  const auto plan = gale::czt_init(m, 0.37, static_cast<std::int64_t>(2 * m), P, 3);
  const auto x = random_values(m, 3);
  gale::ComplexVector out(P);
  gale::ComplexVector work(plan.convolution_length());
  for (auto _ : state) {
    gale::czt_apply(x, plan, out, work);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_Czt)->Args({256, 294})->Args({256, 298})->Args({512, 588})->Args({512, 1024});

void BM_DirectDtft(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  const auto spec = gale::make_galfd_spec(static_cast<int>(size), static_cast<int>(size * 25 / 32));
  const auto points = gale::galfd_points(spec);
  const auto x = random_image(size, size);
  for (auto _ : state) benchmark::DoNotOptimize(gale::dtft_direct(x, points));
}
BENCHMARK(BM_DirectDtft)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
