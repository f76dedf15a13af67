#include <benchmark/benchmark.h>

#include "replim/executor.hpp"
#include "replim/oracle.hpp"
#include "replim/schemas.hpp"

namespace {

void BM_VerifySplitting(benchmark::State& state) {
    int b = static_cast<int>(state.range(0));
    replim::Problem p = replim::Problem::hd1(b);
    replim::MappingSchema s = replim::hd1_splitting(b, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(replim::verify_schema(p, s));
    }
}
BENCHMARK(BM_VerifySplitting)->Arg(8)->Arg(12)->Arg(16);

void BM_VerifyWeight2d(benchmark::State& state) {
    int b = static_cast<int>(state.range(0));
    replim::Problem p = replim::Problem::hd1(b);
    replim::MappingSchema s = replim::hd1_weight(b, 2, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(replim::verify_schema(p, s));
    }
}
BENCHMARK(BM_VerifyWeight2d)->Arg(8)->Arg(12)->Arg(16);

void BM_ExecutorRun(benchmark::State& state) {
    replim::Problem p = replim::Problem::hd1(static_cast<int>(state.range(0)));
    replim::MappingSchema s = replim::hd1_splitting(static_cast<int>(state.range(0)), 2);
    replim::Instance inst = replim::generate_instance(p, 0.5, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(replim::run(p, s, inst));
    }
}
BENCHMARK(BM_ExecutorRun)->Arg(10)->Arg(14);

void BM_TriangleVerify(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    replim::Problem p = replim::Problem::triangle(n);
    replim::MappingSchema s = replim::triangle_partition(n, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(replim::verify_schema(p, s));
    }
}
BENCHMARK(BM_TriangleVerify)->Arg(30)->Arg(60);

void BM_OracleCover(benchmark::State& state) {
    replim::Problem p = replim::Problem::hd1(4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            replim::max_coverable_outputs(p, static_cast<std::uint64_t>(state.range(0))));
    }
}
BENCHMARK(BM_OracleCover)->Arg(4)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
