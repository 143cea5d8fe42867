#include "birat/corpus.hpp"
#include "birat/degree_dynamics.hpp"
#include "birat/fibration.hpp"
#include "birat/poly_gcd.hpp"
#include "birat/rational_maps.hpp"

#include <benchmark/benchmark.h>

using namespace birat;

namespace {

MultiPoly xy(const std::string& s) { return parse_poly(s, vars_xy()); }

void BM_PolyGcd(benchmark::State& state) {
    MultiPoly g = xy("x^2*y+3*x-i*y^2+1").pow(state.range(0));
    MultiPoly a = g * xy("x^3-y+2"), b = g * xy("y^3+i*x*y-5");
    for (auto _ : state) benchmark::DoNotOptimize(poly_gcd(a, b));
}
BENCHMARK(BM_PolyGcd)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

// d_n = 2^n
void BM_ExponentialDegrees(benchmark::State& state) {
    ParameterTuple p({0, 1, 1}, {0, 1, 0}, {0, 1, 1});
    for (auto _ : state) benchmark::DoNotOptimize(degree_sequence(p, state.range(0)));
}
BENCHMARK(BM_ExponentialDegrees)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_CorpusDegrees(benchmark::State& state, Subcase subcase) {
    const CorpusEntry& e = corpus_entry(subcase);
    for (auto _ : state) benchmark::DoNotOptimize(degree_sequence(e.params, state.range(0)));
}
BENCHMARK_CAPTURE(BM_CorpusDegrees, g2_a, Subcase::G2_a)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CorpusDegrees, cd2_ii, Subcase::CD2_ii)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_VerifyFibrations(benchmark::State& state, Subcase subcase) {
    NormalFormMap form = normal_form(corpus_entry(subcase).params);
    auto specs = builtin_fibrations(form);
    for (auto _ : state)
        for (const auto& s : specs) benchmark::DoNotOptimize(verify_fibration(form.map, s));
}
BENCHMARK_CAPTURE(BM_VerifyFibrations, g1_i_c, Subcase::G1_i_c)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifyFibrations, g2_b2, Subcase::G2_b2)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
