#include <benchmark/benchmark.h>

#include "invconn/chars.hpp"
#include "invconn/conncalc.hpp"
#include "invconn/siiclass.hpp"

using namespace invconn;

static void BM_DominantMultiplicitiesE6(benchmark::State& state) {
    auto rs = rootsys::build_root_system(rootsys::parse_factors("E6"));
    const auto w = rs->make_weight({0, 0, 0, 1, 0, 0});
    for (auto _ : state) benchmark::DoNotOptimize(chars::dominant_multiplicities(rs, w));
}
BENCHMARK(BM_DominantMultiplicitiesE6)->Unit(benchmark::kMillisecond);

// Trivial multiplicity of the third exterior power, without materializing it.
static void BM_Alt3Invariant(benchmark::State& state) {
    auto rs = rootsys::build_root_system(rootsys::parse_factors("G2"));
    const auto& chi = chars::irrep_character(rs, rs->make_weight({static_cast<int>(state.range(0)), 0}));
    for (auto _ : state) {
        chars::PointEvaluator ev(chi);
        benchmark::DoNotOptimize(chars::multiplicity(ev, chars::Plethysm::Alt3, rootsys::Weight{}));
    }
    state.counters["support"] = static_cast<double>(chi.support());
}
BENCHMARK(BM_Alt3Invariant)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_ClassifyRow(benchmark::State& state) {
    const auto d = siiclass::select(siiclass::default_catalog(), "E7/SU3").at(0);
    for (auto _ : state) benchmark::DoNotOptimize(siiclass::classify(d));
}
BENCHMARK(BM_ClassifyRow)->Unit(benchmark::kMillisecond);

static void BM_RicciUnitary(benchmark::State& state) {
    const auto alg = conncalc::build_algebra(conncalc::AlgebraKind::U, static_cast<int>(state.range(0)));
    const auto mu = conncalc::to_left_invariant(alg, conncalc::vectorial_map(alg));
    for (auto _ : state) benchmark::DoNotOptimize(conncalc::ricci(alg, mu));
}
BENCHMARK(BM_RicciUnitary)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
