#include <benchmark/benchmark.h>

#include "actgeo/io.hpp"
#include "actgeo/kernels.hpp"

namespace {

using namespace actgeo;

// S3 acting on S3/<(12)> + S3/A3 + z, a 6-point target with three orbit types.
struct Fixture {
  GroupPtr group;
  Act target;

  Fixture()
      : group(as_group(*validate_monoid({{0, 1, 2, 3, 4, 5},
                                         {1, 2, 0, 4, 5, 3},
                                         {2, 0, 1, 5, 3, 4},
                                         {3, 5, 4, 0, 2, 1},
                                         {4, 3, 5, 1, 0, 2},
                                         {5, 4, 3, 2, 1, 0}}))),
        target(io::parse_act(group, "coset([0,3]) + coset([0,1,2]) + z")) {}
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

std::int64_t points(const Act& target, const FreeAct& free) {
  return static_cast<std::int64_t>(
      kernels::point_count(target.size(), free.basis_size(), kDefaultSizeCap));
}

Relation sample_relation(const FreeAct& free) {
  return Relation(free.size(), {{free.generator(0), free.element(1, 3)}});
}

template <auto Kernel>
void solutions(benchmark::State& state) {
  const auto& f = fixture();
  FreeAct free(f.group, static_cast<std::size_t>(state.range(0)));
  const Relation rel = sample_relation(free);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(free, f.target, rel, kDefaultSizeCap));
  state.SetItemsProcessed(state.iterations() * points(f.target, free));
}

template <auto Kernel>
void point_kernels(benchmark::State& state) {
  const auto& f = fixture();
  FreeAct free(f.group, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(free, f.target, kDefaultSizeCap));
  state.SetItemsProcessed(state.iterations() * points(f.target, free));
}

BENCHMARK(solutions<kernels::solutions_serial>)->Name("solutions/serial")->DenseRange(2, 5);
BENCHMARK(solutions<kernels::solutions_omp>)->Name("solutions/omp")->DenseRange(2, 5);
BENCHMARK(point_kernels<kernels::point_kernels_serial>)
    ->Name("point_kernels/serial")
    ->DenseRange(2, 4);
BENCHMARK(point_kernels<kernels::point_kernels_omp>)->Name("point_kernels/omp")->DenseRange(2, 4);

}  // namespace

BENCHMARK_MAIN();
