#include <benchmark/benchmark.h>

#include "fdrc/constructions.hpp"
#include "fdrc/verify.hpp"

namespace {

using namespace fdrc;

void field_multiply_tabled(benchmark::State& state) {
    const auto f = Field::gf(2, 8);
    felt a = 183;
    for (auto _ : state) {
        a = f->mul(a, 91);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(field_multiply_tabled);

void field_multiply_tower(benchmark::State& state) {
    // 2^16 elements: past the table limit, polynomial arithmetic
    const auto f = Field::extend(Field::gf(2, 8), 2);
    felt a = 18311;
    for (auto _ : state) {
        a = f->mul(a, 9177);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(field_multiply_tower);

Mat scrambled(FieldPtr f, std::size_t n) {
    Mat a(f, n, n);
    std::uint64_t s = 88172645463325252ull;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            a.set(r, c, felt(s % f->size()));
        }
    return a;
}

void rank_eight_by_eight(benchmark::State& state) {
    const Mat a = scrambled(Field::gf(2, 2), 8);
    for (auto _ : state) {
        auto r = rank(a);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(rank_eight_by_eight);

void distance_enumeration_4095_words(benchmark::State& state) {
    const auto code = construct_mds_diagonals(FerrersDiagram({1, 2, 3, 4, 5}), 3, Field::gf(2, 2));
    for (auto _ : state) {
        auto d = min_rank_distance(code);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(distance_enumeration_4095_words);

void construction_with_split_search(benchmark::State& state) {
    const FerrersDiagram f({1, 2, 3, 3, 3, 3, 13});
    const auto q2 = Field::gf(2, 1);
    for (auto _ : state) {
        auto res = auto_construct(f, 3, q2);
        benchmark::DoNotOptimize(res.code.dimension());
    }
}
BENCHMARK(construction_with_split_search);

void dimension_bound(benchmark::State& state) {
    const FerrersDiagram f({2, 4, 4, 6, 8});
    for (auto _ : state) {
        auto b = f.upper_bound(3);
        benchmark::DoNotOptimize(b.value);
    }
}
BENCHMARK(dimension_bound);

}  // namespace

BENCHMARK_MAIN();
