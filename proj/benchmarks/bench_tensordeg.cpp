#include "tensordeg/coset_enum.hpp"
#include "tensordeg/degrees.hpp"
#include "tensordeg/group_spec.hpp"
#include "tensordeg/tensor.hpp"

#include <benchmark/benchmark.h>

using namespace tensordeg;

namespace {

const char* const kSpecs[] = {"S3", "D8", "Q8", "A4", "D16", "C2xQ8", "S4"};

FiniteGroup group_at(const benchmark::State& state) {
  return build_group(parse_group_spec(kSpecs[state.range(0)]));
}

void BM_TensorSquare(benchmark::State& state) {
  const FiniteGroup g = group_at(state);
  const Presentation p = tensor_square_presentation(g);
  std::size_t cosets = 0;
  for (auto _ : state) {
    const CosetTable t = todd_coxeter(p);
    cosets = t.coset_count();
    benchmark::DoNotOptimize(cosets);
  }
  state.SetLabel(g.name() + " cosets=" + std::to_string(cosets));
}
BENCHMARK(BM_TensorSquare)->DenseRange(0, std::size(kSpecs) - 1)->Unit(benchmark::kMillisecond);

void BM_DegreeDP(benchmark::State& state) {
  const FiniteGroup g = build_group(parse_group_spec("D16"));
  const TensorSquareData t = tensor_square(g);
  const SubgroupHandle h = SubgroupHandle::whole(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rel_n_tensor_degree(g, t, h, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_DegreeDP)->DenseRange(1, 4);

void BM_DegreeNaive(benchmark::State& state) {
  const FiniteGroup g = build_group(parse_group_spec("D16"));
  const TensorSquareData t = tensor_square(g);
  const SubgroupHandle h = SubgroupHandle::whole(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        rel_n_tensor_degree_naive(g, t, h, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_DegreeNaive)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_AllSubgroups(benchmark::State& state) {
  const FiniteGroup g = group_at(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_subgroups(g).size());
  }
  state.SetLabel(g.name());
}
BENCHMARK(BM_AllSubgroups)->DenseRange(0, std::size(kSpecs) - 1)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
