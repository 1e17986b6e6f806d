#include <benchmark/benchmark.h>

#include "ahg/classify.hpp"

using namespace ahg;

namespace {

const Configuration& curve() {
  static const Configuration C(IntMatrix{{1, 1, 1, 1, 1}, {0, 2, 4, 7, 9}});
  return C;
}

const Configuration& normal3() {
  static const Configuration C(IntMatrix{{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, -1}});
  return C;
}

RatVec ints(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

void BM_Configuration(benchmark::State& state) {
  const IntMatrix A{{1, 1, 1, 1, 1}, {0, 2, 4, 7, 9}};
  for (auto _ : state) benchmark::DoNotOptimize(Configuration(A).faces().size());
}
BENCHMARK(BM_Configuration);

void BM_InNA(benchmark::State& state) {
  const RatVec g = ints({6, 31});
  for (auto _ : state) benchmark::DoNotOptimize(in_NA(curve(), g));
}
BENCHMARK(BM_InNA);

void BM_EProfile(benchmark::State& state) {
  const RatVec b = ints({-2, 1, 3});
  for (auto _ : state) benchmark::DoNotOptimize(e_profile(normal3(), b));
}
BENCHMARK(BM_EProfile);

void BM_MChi(benchmark::State& state) {
  const RatVec chi = ints({static_cast<long>(state.range(0)), 7 * state.range(0)});
  for (auto _ : state) benchmark::DoNotOptimize(m_chi(curve(), chi));
}
BENCHMARK(BM_MChi)->Arg(1)->Arg(2)->Arg(3);

void BM_BIdeal(benchmark::State& state) {
  const RatVec chi = ints({2, 14});
  for (auto _ : state) benchmark::DoNotOptimize(b_ideal(curve(), chi));
}
BENCHMARK(BM_BIdeal);

void BM_Enumerate(benchmark::State& state) {
  const long r = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_classes(normal3(), {{-r, r}, {-r, r}, {-r, r}}));
  }
}
BENCHMARK(BM_Enumerate)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Contiguity(benchmark::State& state) {
  const Configuration& C = curve();
  const RatVec chi = C.column(static_cast<std::size_t>(state.range(0)));
  const BIdeal B = b_ideal(C, chi);
  const FactoredPoly b = *b_poly_avoiding(C, B, {Rat(1, 3), Rat(1, 7)});
  const auto [u, v] = shift_pair(C, chi);
  for (auto _ : state) benchmark::DoNotOptimize(contiguity_operator(C, chi, b, u, v));
}
BENCHMARK(BM_Contiguity)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_Witness(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(iso_witness(curve(), ints({1, 2}), ints({2, 4}), 4));
  }
}
BENCHMARK(BM_Witness)->Unit(benchmark::kMillisecond);

void BM_Volume(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(normalized_volume(curve()));
}
BENCHMARK(BM_Volume);

}  // namespace

BENCHMARK_MAIN();
