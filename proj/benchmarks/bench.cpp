#include <benchmark/benchmark.h>

#include <random>

#include "addgen/element_set.hpp"
#include "addgen/group.hpp"
#include "addgen/oracle.hpp"
#include "addgen/subgroup.hpp"

using namespace addgen;

namespace {

ElementSet random_set(const GroupType& g, unsigned seed, int density) {
    std::mt19937 rng(seed);
    ElementSet s(g);
    for (int x = 0; x < g.order(); ++x)
        if (rng() % density == 0) s.insert(x);
    if (s.empty()) s.insert(0);
    return s;
}

void bm_sumset(benchmark::State& state) {
    const GroupType g = GroupType::of({static_cast<int>(state.range(0))});
    const ElementSet a = random_set(g, 1, 3);
    const ElementSet b = random_set(g, 2, 3);
    for (auto _ : state) benchmark::DoNotOptimize(sumset(a, b));
}
BENCHMARK(bm_sumset)->Arg(16)->Arg(64)->Arg(256)->Arg(1024);

void bm_length_table(benchmark::State& state) {
    const GroupType g = GroupType::of({static_cast<int>(state.range(0))});
    const ElementSet a = random_set(g, 3, 8);
    for (auto _ : state) benchmark::DoNotOptimize(length_table(a));
}
BENCHMARK(bm_length_table)->Arg(64)->Arg(256)->Arg(1024);

void bm_period_set(benchmark::State& state) {
    const GroupType g = GroupType::of({2, static_cast<int>(state.range(0))});
    const ElementSet a = random_set(g, 4, 2);
    for (auto _ : state) benchmark::DoNotOptimize(period_set(a));
}
BENCHMARK(bm_period_set)->Arg(8)->Arg(32)->Arg(128);

void bm_enumerate_subgroups(benchmark::State& state) {
    const GroupType g = GroupType::of({2, 2, static_cast<int>(state.range(0))});
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_subgroups(g));
}
BENCHMARK(bm_enumerate_subgroups)->Arg(4)->Arg(8)->Arg(16);

void bm_t_oracle(benchmark::State& state) {
    const GroupType g = GroupType::of({static_cast<int>(state.range(0))});
    for (auto _ : state) benchmark::DoNotOptimize(t_oracle(g, 4));
}
BENCHMARK(bm_t_oracle)->Arg(10)->Arg(13)->Arg(16);

}  // namespace
