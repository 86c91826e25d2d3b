#include <benchmark/benchmark.h>

#include "gzoo/coset_enum.hpp"
#include "gzoo/geometry.hpp"
#include "gzoo/perm_group.hpp"
#include "gzoo/textio.hpp"

using namespace gzoo;

namespace {

Presentation grp(const char* name) {
  return textio::parse_group_file(
             textio::read_file(std::string(GZOO_BENCH_CATALOG) + "/" + name))
      .presentation;
}

PermutationInput perm(const char* name) {
  return textio::parse_permutations(
      textio::read_file(std::string(GZOO_BENCH_CATALOG) + "/" + name));
}

void todd_coxeter_a6(benchmark::State& state) {
  const Presentation p = grp("A6.grp");
  for (auto _ : state) benchmark::DoNotOptimize(todd_coxeter(p, {}).index());
}
BENCHMARK(todd_coxeter_a6)->Unit(benchmark::kMillisecond);

void todd_coxeter_s43(benchmark::State& state) {
  const Presentation p = grp("S4_3.grp");
  for (auto _ : state) benchmark::DoNotOptimize(todd_coxeter(p, {}).index());
}
BENCHMARK(todd_coxeter_s43)->Unit(benchmark::kMillisecond);

void low_index_a6(benchmark::State& state) {
  const Presentation p = grp("A6.grp");
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        low_index_subgroups(p, {.max_index = static_cast<std::size_t>(state.range(0))}).size());
  }
}
BENCHMARK(low_index_a6)->Arg(15)->Arg(30)->Unit(benchmark::kMillisecond);

void low_index_s43(benchmark::State& state) {
  const Presentation p = grp("S4_3.grp");
  for (auto _ : state) benchmark::DoNotOptimize(low_index_subgroups(p, {.max_index = 27}).size());
}
BENCHMARK(low_index_s43)->Unit(benchmark::kMillisecond);

void schreier_sims_a8(benchmark::State& state) {
  const PermutationInput in = perm("A8-35.perm");
  for (auto _ : state) benchmark::DoNotOptimize(group_from(in).order());
}
BENCHMARK(schreier_sims_a8)->Unit(benchmark::kMicrosecond);

void schreier_sims_a6_regular(benchmark::State& state) {
  const PermutationInput in = table_to_permutations(todd_coxeter(grp("A6.grp"), {}));
  for (auto _ : state) benchmark::DoNotOptimize(group_from(in).order());
}
BENCHMARK(schreier_sims_a6_regular)->Unit(benchmark::kMicrosecond);

void classify_a8(benchmark::State& state) {
  const PermutationGroup g = group_from(perm("A8-35.perm"));
  for (auto _ : state) benchmark::DoNotOptimize(classify_two_point_stabilizers(g).m());
}
BENCHMARK(classify_a8)->Unit(benchmark::kMillisecond);

void cliques_a8(benchmark::State& state) {
  const PermutationGroup g = group_from(perm("A8-35.perm"));
  const auto cls = classify_two_point_stabilizers(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_defined_geometry(g, cls, static_cast<std::size_t>(state.range(0)))
                                 .lines.size());
  }
}
BENCHMARK(cliques_a8)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
