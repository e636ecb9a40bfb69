// Serial vs parallel comparison for the heavy kernels. Run with
// --benchmark_filter to pick kernels, e.g. --benchmark_filter=verify.

#include <benchmark/benchmark.h>

#include "satmat/catalog.hpp"
#include "satmat/search.hpp"
#include "satmat/witness.hpp"

using namespace satmat;

namespace {

void bm_verify_witness(benchmark::State& state, Exec exec) {
    Matrix m = builtin("EXPL_Q1").matrix;
    Pattern p(builtin("Q1").matrix);
    for (auto _ : state) {
        WitnessReport rep = verify_witness(m, p, exec);
        benchmark::DoNotOptimize(rep.explicit_witness);
    }
}

void bm_is_saturated(benchmark::State& state, Exec exec) {
    Pattern p(builtin("Q1").matrix);
    Matrix m = saturate(Matrix(24, 24), p);
    for (auto _ : state) {
        bool ok = is_saturated(m, p, exec);
        benchmark::DoNotOptimize(ok);
    }
}

void bm_sat_exact(benchmark::State& state, Exec exec) {
    Pattern anti(parse_matrix(".1\n1."), true);
    for (auto _ : state) {
        SearchResult r = sat_exact(anti, 4, 4, {}, exec);
        benchmark::DoNotOptimize(r.value);
    }
}

void bm_report(benchmark::State& state, Exec exec) {
    for (auto _ : state) {
        auto records = classification_report(6, SymmetryGroup::reflections_only, exec);
        benchmark::DoNotOptimize(records.size());
    }
}

}  // namespace

BENCHMARK_CAPTURE(bm_verify_witness, serial, Exec::serial);
BENCHMARK_CAPTURE(bm_verify_witness, parallel, Exec::parallel);
BENCHMARK_CAPTURE(bm_is_saturated, serial, Exec::serial);
BENCHMARK_CAPTURE(bm_is_saturated, parallel, Exec::parallel);
BENCHMARK_CAPTURE(bm_sat_exact, serial, Exec::serial);
BENCHMARK_CAPTURE(bm_sat_exact, parallel, Exec::parallel);
BENCHMARK_CAPTURE(bm_report, serial, Exec::serial);
BENCHMARK_CAPTURE(bm_report, parallel, Exec::parallel);

BENCHMARK_MAIN();
