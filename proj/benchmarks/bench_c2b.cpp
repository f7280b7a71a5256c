#include <benchmark/benchmark.h>

#include "c2b/elicitation.hpp"
#include "c2b/fixtures.hpp"
#include "c2b/surface.hpp"

namespace {

void BM_Evaluate(benchmark::State& state) {
    const auto fis = c2b::fixtures::case_catalog(2).build_fis();
    const c2b::Profile p{{"C", 38.0}, {"C2", 1.0}};
    for (auto _ : state) benchmark::DoNotOptimize(fis.evaluate(p, "P"));
}
BENCHMARK(BM_Evaluate);

void BM_EvaluateResolution(benchmark::State& state) {
    const auto cat = c2b::fixtures::case_catalog(2);
    const c2b::FuzzyInferenceSystem fis(cat.build_fis().inputs(), cat.build_fis().outputs(),
                                        c2b::parse_rules_or_throw(cat.fis->rules),
                                        static_cast<std::size_t>(state.range(0)));
    const c2b::Profile p{{"C", 67.0}, {"C2", 0.0}};
    for (auto _ : state) benchmark::DoNotOptimize(fis.evaluate(p, "P"));
}
BENCHMARK(BM_EvaluateResolution)->Arg(101)->Arg(1001)->Arg(10001)->Arg(100001);

void BM_Surface(benchmark::State& state) {
    const auto fis = c2b::fixtures::case_catalog(2).build_fis();
    const auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        auto grid = c2b::compute_surface(fis, {c2b::parse_axis("C=0:100:200"), c2b::parse_axis("C2=0:1:50")}, "P",
                                         {}, threads);
        benchmark::DoNotOptimize(grid.values.data());
    }
}
BENCHMARK(BM_Surface)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_Subtractive(benchmark::State& state) {
    const auto data = c2b::fixtures::hofstede_training_set();
    for (auto _ : state) benchmark::DoNotOptimize(c2b::subtractive_clusters(data.values));
}
BENCHMARK(BM_Subtractive);

void BM_Fcm(benchmark::State& state) {
    const auto data = c2b::fixtures::hofstede_training_set();
    const auto seeds = c2b::subtractive_clusters(data.values);
    for (auto _ : state) benchmark::DoNotOptimize(c2b::fcm(data.values, seeds));
}
BENCHMARK(BM_Fcm);

void BM_Elicit(benchmark::State& state) {
    const auto data = c2b::fixtures::hofstede_training_set();
    for (auto _ : state) benchmark::DoNotOptimize(c2b::elicit_variable("C", data));
}
BENCHMARK(BM_Elicit)->Unit(benchmark::kMicrosecond);

void BM_ParseRules(benchmark::State& state) {
    const std::string text = c2b::fixtures::case_catalog(2).fis->rules;
    for (auto _ : state) benchmark::DoNotOptimize(c2b::parse_rules(text));
}
BENCHMARK(BM_ParseRules);

}  // namespace

BENCHMARK_MAIN();
