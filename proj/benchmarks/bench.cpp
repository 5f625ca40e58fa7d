#include <benchmark/benchmark.h>

#include "conicbr/conic_bundle.hpp"
#include "conicbr/obstruction.hpp"

using namespace conicbr;

namespace {

Rat rq(long n, long d = 1) { return make_rat(n, d); }
const Curve kE2 = Curve::from_ab(rq(0), rq(-2));
const CurvePoint kG = CurvePoint::affine(rq(3), rq(5));

void BM_double_point(benchmark::State& state) {
    CurvePoint P = multiple(kE2, state.range(0), kG);
    for (auto _ : state) benchmark::DoNotOptimize(double_point(kE2, P));
}
BENCHMARK(BM_double_point)->Arg(1)->Arg(8)->Arg(16);

void BM_halve_multiple(benchmark::State& state) {
    CurvePoint P = multiple(kE2, 2 * state.range(0), kG);
    for (auto _ : state) benchmark::DoNotOptimize(halve(kE2, P));
}
BENCHMARK(BM_halve_multiple)->Arg(1)->Arg(3)->Arg(6)->Arg(10);

void BM_hilbert_product(benchmark::State& state) {
    Rat a = rq(3 * 5 * 49, 11), b = rq(-2 * 7 * 13, 17);
    std::vector<Place> places{Place::real(), Place::finite(Int(2)), Place::finite(Int(3)),
                              Place::finite(Int(5)), Place::finite(Int(7)), Place::finite(Int(11)),
                              Place::finite(Int(13)), Place::finite(Int(17))};
    for (auto _ : state) {
        int prod = 1;
        for (const Place& v : places) prod *= hilbert_symbol(a, b, v);
        benchmark::DoNotOptimize(prod);
    }
}
BENCHMARK(BM_hilbert_product);

void BM_sum_of_two_squares(benchmark::State& state) {
    CurvePoint P = multiple(kE2, state.range(0), kG);
    for (auto _ : state) benchmark::DoNotOptimize(is_sum_of_two_squares(P.y));
}
BENCHMARK(BM_sum_of_two_squares)->Arg(2)->Arg(5)->Arg(8);

void BM_brauer_pipeline(benchmark::State& state) {
    CurvePoint p2 = double_point(kE2, kG);
    CurvePoint p4 = multiple(kE2, 4, kG);
    BundleSpec spec = BundleSpec::chatelet(kE2, rq(-1), {p2, p4});
    for (auto _ : state) {
        SingularLocus locus = singular_locus(spec);
        benchmark::DoNotOptimize(
            compute_brauer_group(kE2, spec.a, generic_fibre_class(spec), locus.points));
    }
}
BENCHMARK(BM_brauer_pipeline);

void BM_obstruction_certificate(benchmark::State& state) {
    CurvePoint p2 = double_point(kE2, kG);
    CurvePoint p4 = multiple(kE2, 4, kG);
    CurvePoint p6 = multiple(kE2, 6, kG);
    BundleSpec spec = BundleSpec::chatelet(kE2, rq(-1), {p2, p4, p6});
    for (auto _ : state) benchmark::DoNotOptimize(find_certificate(spec));
}
BENCHMARK(BM_obstruction_certificate);

}  // namespace

BENCHMARK_MAIN();
