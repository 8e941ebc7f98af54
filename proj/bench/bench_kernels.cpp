// Serial against OpenMP versions of the quandle kernels.

#include <benchmark/benchmark.h>

#include "medq/def1.hpp"
#include "medq/kernels.hpp"
#include "medq/linkinv.hpp"
#include "medq/corpus.hpp"
#include "medq/quandle.hpp"

namespace {

using namespace medq;

// Affine quandle on Z/n with t = 2 (n odd).
std::vector<std::uint32_t> affine_table(std::size_t n) {
  std::vector<std::uint32_t> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t[x * n + y] = static_cast<std::uint32_t>((2 * x + n - y % n) % n);
  return t;
}

template <bool Parallel>
void BM_medial_scan(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto table = affine_table(n);
  for (auto _ : state) {
    auto r = Parallel ? kernels::parallel::medial_scan(table, n, 16) : kernels::serial::medial_scan(table, n, 16);
    benchmark::DoNotOptimize(r);
  }
  state.SetComplexityN(static_cast<std::int64_t>(n));
}

template <bool Parallel>
void BM_fill_table(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto f = [n](std::size_t x, std::size_t y) { return static_cast<std::uint32_t>((3 * x + n - (2 * y) % n) % n); };
  std::vector<std::uint32_t> table;
  for (auto _ : state) {
    if (Parallel)
      kernels::parallel::fill_table(table, n, f);
    else
      kernels::serial::fill_table(table, n, f);
    benchmark::DoNotOptimize(table.data());
  }
}

// Displacement group of the 7-2-8 medial quandle at 27:4.
const std::vector<Perm>& displacements() {
  static const std::vector<Perm> perms = [] {
    MQReport r = mq_specialized(corpus_entry("7-2-8").diagram(), ScalarRing(27, 4));
    return DisplacementGroup(r.quandle->quandle()).elements();
  }();
  return perms;
}

template <bool Parallel>
void BM_fixed_point_displacements(benchmark::State& state) {
  const auto& perms = displacements();
  for (auto _ : state) {
    auto r = Parallel ? kernels::parallel::fixed_point_displacements(perms)
                      : kernels::serial::fixed_point_displacements(perms);
    benchmark::DoNotOptimize(r);
  }
}

}  // namespace

BENCHMARK(BM_medial_scan<false>)->Name("medial_scan/serial")->Arg(15)->Arg(31)->Arg(63);
BENCHMARK(BM_medial_scan<true>)->Name("medial_scan/parallel")->Arg(15)->Arg(31)->Arg(63);
BENCHMARK(BM_fill_table<false>)->Name("fill_table/serial")->Arg(256)->Arg(1024);
BENCHMARK(BM_fill_table<true>)->Name("fill_table/parallel")->Arg(256)->Arg(1024);
BENCHMARK(BM_fixed_point_displacements<false>)->Name("fixed_point_displacements/serial");
BENCHMARK(BM_fixed_point_displacements<true>)->Name("fixed_point_displacements/parallel");

BENCHMARK_MAIN();
