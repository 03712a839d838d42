#include <memory>

#include <benchmark/benchmark.h>

#include "qpswf/concentration.hpp"
#include "qpswf/extrapolate.hpp"
#include "qpswf/packets.hpp"
#include "qpswf/prolate.hpp"
#include "qpswf/qft.hpp"

namespace {

using namespace qpswf;

void BM_EigProlate1D(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eig_prolate_1d(1.0, 1.0, n, 16));
}
BENCHMARK(BM_EigProlate1D)->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_BuildBasis(benchmark::State& state) {
  const auto b = std::make_shared<const ProlateBasis1D>(eig_prolate_1d(2.0, 2.0, 128, 12));
  for (auto _ : state) benchmark::DoNotOptimize(build_qpswf_basis(b, 36, default_coefficient()));
}
BENCHMARK(BM_BuildBasis)->Unit(benchmark::kMillisecond);

void BM_ForwardQft(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  CounterRng rng(1);
  const PacketSignal p = random_packet_signal(rng, 4, 3.0, 5.0, 4.0, 6.0);
  const auto ax = GridAxis::symmetric(60.0, n);
  const auto au = GridAxis::symmetric(4.0, n);
  const QSignal f = p.sample(ax, ax);
  for (auto _ : state) benchmark::DoNotOptimize(forward_qft(f, au, au));
}
BENCHMARK(BM_ForwardQft)->Arg(61)->Arg(121)->Arg(241)->Unit(benchmark::kMillisecond);

void BM_PgStepNodal(benchmark::State& state) {
  const auto b = std::make_shared<const ProlateBasis1D>(eig_prolate_1d(2.0, 2.0, 64, 10));
  const BasisSet2D set = build_qpswf_basis(b, 10, default_coefficient());
  const NodalPlane plane = basis_plane(set);
  const SplitMatrix obs = node_values(plane, element_signal(set, 0));
  NodalSignal f = NodalSignal::zero(plane);
  for (auto _ : state) {
    f = pg_step(plane, obs, f);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_PgStepNodal)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
