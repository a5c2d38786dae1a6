#include <benchmark/benchmark.h>

#include "dzx/diagram.hpp"
#include "dzx/fourier.hpp"
#include "dzx/normal_form.hpp"
#include "dzx/random.hpp"
#include "dzx/rewrite.hpp"
#include "dzx/semantics.hpp"

using namespace dzx;

namespace {

Diagram random_map(std::size_t wires, std::size_t spiders, std::uint64_t seed) {
    Rng rng(seed);
    RandomDiagramOptions o;
    o.inputs = wires / 2;
    o.outputs = wires - wires / 2;
    o.spiders = spiders;
    o.extra_edges = spiders / 2;
    o.special_param_rate = 0.0;
    return random_diagram(rng, o);
}

// Arg: boundary wires. Spider count grows with the boundary.
void BM_Evaluate(benchmark::State& state) {
    const auto wires = static_cast<std::size_t>(state.range(0));
    const Diagram d = random_map(wires, 3 * wires, 11);
    for (auto _ : state) benchmark::DoNotOptimize(evaluate(d));
}
BENCHMARK(BM_Evaluate)->DenseRange(2, 16, 2);

// Arg: n. The gadget state has one leg per nonempty subset of the n wires.
void BM_EvaluateFourierGadget(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(12);
    const FourierData fd = fourier_synthesize(random_positive_vector(rng, n));
    const Diagram d = fourier_gadget_state(fd.lambda, fd.big_lambda);
    for (auto _ : state) benchmark::DoNotOptimize(evaluate(d));
}
BENCHMARK(BM_EvaluateFourierGadget)->DenseRange(2, 10, 2);

void BM_WalshHadamard(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(13);
    std::vector<double> v = random_positive_vector(rng, n);
    for (auto _ : state) {
        walsh_hadamard(std::span<double>(v));
        benchmark::ClobberMemory();
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * static_cast<std::int64_t>(v.size() * sizeof(double)));
}
BENCHMARK(BM_WalshHadamard)->DenseRange(4, 20, 4);

void BM_NormalizeState(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(14);
    const auto v = random_affine_vector(rng, n);
    for (auto _ : state) benchmark::DoNotOptimize(normalize_state(v));
}
BENCHMARK(BM_NormalizeState)->DenseRange(2, 16, 2);

void BM_NormalizeDiagram(benchmark::State& state) {
    const auto wires = static_cast<std::size_t>(state.range(0));
    const Diagram d = random_map(wires, 3 * wires, 15);
    for (auto _ : state) benchmark::DoNotOptimize(normalize_diagram(d));
}
BENCHMARK(BM_NormalizeDiagram)->DenseRange(2, 12, 2);

void BM_Simplify(benchmark::State& state) {
    const auto spiders = static_cast<std::size_t>(state.range(0));
    const Diagram d = random_map(4, spiders, 16);
    for (auto _ : state) benchmark::DoNotOptimize(simplify(d));
}
BENCHMARK(BM_Simplify)->RangeMultiplier(2)->Range(4, 32);

}  // namespace

BENCHMARK_MAIN();
