#include <benchmark/benchmark.h>

#include <matdiv/divisor.hpp>
#include <matdiv/lax.hpp>
#include <matdiv/linalg.hpp>
#include <matdiv/verify.hpp>

#include <random>

using namespace matdiv;

namespace {

Mat random_mat(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = Scalar::rational(num(rng), den(rng));
    return m;
}

void bench_rref(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(1);
    Mat m = random_mat(n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(bench_rref)->Arg(8)->Arg(16)->Arg(32);

void bench_smith_reduce(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Realization r = Realization::build(Family::A, n - 1, ModuleTag::defining, AlgebraForm::gl);
    std::mt19937_64 rng(2);
    DivisorGerm germ = make_germ(r, random_germ_series(n, 2, 12, rng));
    for (auto _ : state) benchmark::DoNotOptimize(smith_reduce(germ, 4));
}
BENCHMARK(bench_smith_reduce)->Arg(2)->Arg(3)->Arg(4);

void bench_build_L_space(benchmark::State& state) {
    const long nG = state.range(0);
    Realization r = Realization::build(Family::A, 1, ModuleTag::defining, AlgebraForm::gl);
    CoweightH h{{1, 0}};
    SurfaceConfig config{r, {}, {{Scalar(9), 1}}, 0};
    for (long i = 0; i < nG; ++i) config.gammas.push_back({Scalar(i + 1), h});
    for (auto _ : state) benchmark::DoNotOptimize(build_L_space(config));
}
BENCHMARK(bench_build_L_space)->Arg(1)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
