#include <benchmark/benchmark.h>

#include <random>

#include "tropgroup/group.hpp"
#include "tropgroup/matrix.hpp"
#include "tropgroup/monomial.hpp"
#include "tropgroup/rep.hpp"

namespace {

using namespace tropgroup;

TropMatrix random_matrix(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 8);
    std::uniform_int_distribution<int> inf(0, 4);
    TropMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = inf(rng) == 0 ? Scalar::neg_inf()
                                    : Scalar(Rational(num(rng), den(rng)));
    return m;
}

void BM_MatMul(benchmark::State& state) {
    std::mt19937 rng(7);
    const auto n = static_cast<std::size_t>(state.range(0));
    const TropMatrix a = random_matrix(rng, n);
    const TropMatrix b = random_matrix(rng, n);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_MatMul)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_RowRank(benchmark::State& state) {
    std::mt19937 rng(11);
    const auto n = static_cast<std::size_t>(state.range(0));
    const TropMatrix a = random_matrix(rng, n);
    for (auto _ : state) benchmark::DoNotOptimize(row_rank_deficiency(a));
}
BENCHMARK(BM_RowRank)->Arg(4)->Arg(8)->Arg(16);

void BM_SymmetricClosure(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    // transposition and n-cycle, zero weights: closure is all of S_n
    std::vector<std::size_t> t(n), c(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = c[i] = i;
    std::swap(t[0], t[1]);
    for (std::size_t i = 0; i < n; ++i) c[i] = (i + 1) % n;
    const TropMatrix g1 = MonomialMatrix{Perm(t), std::vector<Rational>(n)}.to_dense();
    const TropMatrix g2 = MonomialMatrix{Perm(c), std::vector<Rational>(n)}.to_dense();
    for (auto _ : state) benchmark::DoNotOptimize(closure({g1, g2}, 10000));
}
BENCHMARK(BM_SymmetricClosure)->Arg(3)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
