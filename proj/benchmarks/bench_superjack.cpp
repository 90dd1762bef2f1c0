#include <benchmark/benchmark.h>

#include <superjack/forms.hpp>

using namespace superjack;

namespace {

void BM_theta_arithmetic(benchmark::State& state) {
    const ThetaFunction a = parse_theta_function("(theta^3+2*theta-1)/(theta^2+1)");
    const ThetaFunction b = parse_theta_function("(2*theta^2-3)/(theta+5)");
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b + a / b);
    }
}
BENCHMARK(BM_theta_arithmetic);

void BM_jack_cold(benchmark::State& state) {
    const Partition lambda{3, 2};
    for (auto _ : state) {
        clear_jack_memo();
        benchmark::DoNotOptimize(jack(lambda));
    }
}
BENCHMARK(BM_jack_cold);

void BM_gram_matrix(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gram_matrix(1, 1, d));
    }
}
BENCHMARK(BM_gram_matrix)->Arg(2)->Arg(3);

void BM_deformed_integral(benchmark::State& state) {
    const MPoly sp = super_jack(Partition{2, 1}, 2, 1).poly;
    for (auto _ : state) {
        benchmark::DoNotOptimize(deformed_integral_apply(sp, 2));
    }
}
BENCHMARK(BM_deformed_integral);

void BM_trig_integral(benchmark::State& state) {
    const MPoly sp = super_jack(Partition{2, 1}, 2, 1).poly;
    for (auto _ : state) {
        benchmark::DoNotOptimize(trig_integral_apply(sp, 3));
    }
}
BENCHMARK(BM_trig_integral);

void BM_super_hermite(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(super_hermite(Partition{2, 2}, 2, 2));
    }
}
BENCHMARK(BM_super_hermite);

}  // namespace

BENCHMARK_MAIN();
