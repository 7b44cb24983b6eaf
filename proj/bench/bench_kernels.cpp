#include <benchmark/benchmark.h>

#include <random>

#include "trip/classical_maps.hpp"
#include "trip/periodicity.hpp"
#include "trip/simplex_nd.hpp"

using namespace trip;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::Parallel : Exec::Serial; }

void label(benchmark::State& s) { s.SetLabel(s.range(0) ? "parallel" : "serial"); }

void BM_Equivalence(benchmark::State& s) {
    for (auto _ : s) {
        auto r = verify_equivalence(ClassicalMapId::Brun, 2000, 7, exec_of(s));
        benchmark::DoNotOptimize(r.mismatches.size());
    }
    label(s);
}

void BM_ClassifyBatch(benchmark::State& s) {
    std::vector<std::pair<TripMapSpec, PeriodicWord>> jobs;
    const auto words = nondegenerate_words(3);
    for (const auto& m : enumerate_family())
        if (m.triple.sigma.is_identity())
            for (const auto& w : words) jobs.emplace_back(m, w);
    for (auto _ : s) {
        auto r = classify_batch(jobs, exec_of(s));
        benchmark::DoNotOptimize(r.size());
    }
    label(s);
}

void BM_DuplicateCount(benchmark::State& s) {
    for (auto _ : s) {
        auto r = duplicate_class_count(4, exec_of(s));
        benchmark::DoNotOptimize(r.classes);
    }
    label(s);
}

void BM_SequenceBatch(benchmark::State& s) {
    std::mt19937_64 rng(11);
    std::vector<ProjectivePoint> pts;
    for (int i = 0; i < 4000; ++i) {
        long d = std::uniform_int_distribution<long>(2, 100000)(rng);
        long a = std::uniform_int_distribution<long>(1, d)(rng);
        long b = std::uniform_int_distribution<long>(1, a)(rng);
        pts.push_back(ProjectivePoint::from_xy(Rational(a, d), Rational(b, d)));
    }
    TripMapSpec m = build_trip_map("((1 2),(1 3 2),e)");
    for (auto _ : s) {
        auto r = trip_sequence_batch(pts, m, 40, 2000, exec_of(s));
        benchmark::DoNotOptimize(r.size());
    }
    label(s);
}

}  // namespace

BENCHMARK(BM_Equivalence)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifyBatch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DuplicateCount)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SequenceBatch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
