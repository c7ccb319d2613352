#include <benchmark/benchmark.h>

#include "pqsym/cqsym.hpp"
#include "pqsym/pqsym.hpp"
#include "pqsym/words.hpp"

namespace {

using pqsym::Word;

const Word kLong{3, 1, 1, 7, 2, 9, 1, 7, 8, 1, 3, 2, 9};
const Word kPark8{3, 5, 1, 1, 8, 6, 6, 2};
const Word kRev8{8, 7, 6, 5, 4, 3, 2, 1};

void BM_park(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(pqsym::park(kLong));
  }
}
BENCHMARK(BM_park);

void BM_standardize(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(pqsym::standardize(kLong));
  }
}
BENCHMARK(BM_standardize);

void BM_product_F(benchmark::State& state) {
  const Word a{1, 2, 3, 4};
  const Word b{1, 2, 3};
  for (auto _ : state) {
    benchmark::DoNotOptimize(pqsym::product_F(a, b));
  }
}
BENCHMARK(BM_product_F);

void BM_product_G(benchmark::State& state) {
  const Word a{1, 1, 2};
  const Word b{1, 2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(pqsym::product_G(a, b));
  }
}
BENCHMARK(BM_product_G);

void BM_coproduct_G(benchmark::State& state) {
  const Word a{4, 1, 2, 5, 2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(pqsym::coproduct_G(a));
  }
}
BENCHMARK(BM_coproduct_G);

void BM_internal_product_F(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(pqsym::internal_product_F(kPark8, kRev8));
  }
}
BENCHMARK(BM_internal_product_F);

void BM_internal_product_P(benchmark::State& state) {
  const Word a{1, 1, 2, 3, 5};
  const Word b{1, 2, 2, 4, 5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(pqsym::internal_product_P(a, b));
  }
}
BENCHMARK(BM_internal_product_P);

void BM_enumerate_parking(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(pqsym::enumerate_parking(5));
  }
}
BENCHMARK(BM_enumerate_parking);

void BM_enumerate_ndpf(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(pqsym::enumerate_ndpf(6));
  }
}
BENCHMARK(BM_enumerate_ndpf);

}  // namespace

BENCHMARK_MAIN();
