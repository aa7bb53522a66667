// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <random>

#include "generators.hpp"
#include "lutz/kernels.hpp"
#include "lutz/precoder.hpp"

namespace {

using namespace lutz;

const std::vector<Base>& sample_bases() {
    static const std::vector<Base> bases = [] {
        std::mt19937_64 rng(2024);
        return testing::random_bases(rng, std::size_t{16} << 20, 0.05);
    }();
    return bases;
}

const std::string& sample_precoded() {
    static const std::string text = kernels::precode_serial(sample_bases());
    return text;
}

void BM_PrecodeSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(kernels::precode_serial(sample_bases()));
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * sample_bases().size()));
}

void BM_PrecodeParallel(benchmark::State& state) {
    omp_set_num_threads(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::precode_parallel(sample_bases()));
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * sample_bases().size()));
}

void BM_PredecodeSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(kernels::predecode_serial(as_bytes(sample_precoded())));
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * sample_bases().size()));
}

void BM_PredecodeParallel(benchmark::State& state) {
    omp_set_num_threads(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::predecode_parallel(as_bytes(sample_precoded())));
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * sample_bases().size()));
}

}  // namespace

BENCHMARK(BM_PrecodeSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PrecodeParallel)->RangeMultiplier(2)->Range(1, 8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PredecodeSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PredecodeParallel)->RangeMultiplier(2)->Range(1, 8)->Unit(benchmark::kMillisecond)->UseRealTime();
int main(int argc, char** argv) {
    (void)sample_precoded();  // build inputs outside the timed loops
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
