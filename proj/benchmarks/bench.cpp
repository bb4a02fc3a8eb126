#include <benchmark/benchmark.h>

#include <qmat/matrix_bialgebra.hpp>
#include <qmat/projectors.hpp>
#include <qmat/rational.hpp>

using namespace qmat;

namespace {

Matrix<Rational> dense_test_matrix(std::size_t n) {
    Matrix<Rational> m(n, n);
    long v = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            v = (v * 48271) % 2147483647;
            m.at(i, j) = Rational(v % 19 - 9, v % 7 + 1);
        }
    return m;
}

void bm_rref(benchmark::State& state) {
    auto m = dense_test_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        Matrix<Rational> copy = m;
        benchmark::DoNotOptimize(copy.rref());
    }
}
BENCHMARK(bm_rref)->Arg(16)->Arg(32)->Arg(64);

void bm_projector_bundle(benchmark::State& state) {
    auto op = make_standard(2, Rational(2));
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto b = detail::build_projector_bundle(op, op, n, "psi");
        benchmark::DoNotOptimize(b.normalized);
    }
}
BENCHMARK(bm_projector_bundle)->Arg(2)->Arg(3);

void bm_block_split(benchmark::State& state) {
    auto op = make_standard(2, Rational(2));
    const int n = static_cast<int>(state.range(0));
    auto A = realize(op, op, "E", n);
    for (auto _ : state) {
        auto blocks = block_split(A, n);
        benchmark::DoNotOptimize(blocks);
    }
}
BENCHMARK(bm_block_split)->Arg(2)->Arg(3);

void bm_multiplicity_table(benchmark::State& state) {
    auto op = make_standard(2, Rational(2));
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto t = multiplicity_table(op, n);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(bm_multiplicity_table)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
