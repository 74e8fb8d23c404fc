#include <benchmark/benchmark.h>

#include <random>

#include "coha/kac.hpp"
#include "coha/lehn.hpp"
#include "coha/shuffle.hpp"
#include "coha/shuffle_eval.hpp"
#include "coha/wkalg.hpp"

using namespace coha;

static void BM_ShuffleMulSimpleRoots(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  ShuffleElem acc = alpha(K, 0, 1);
  for (int i = 1; i <= K; ++i) acc = shuffle_mul(acc, alpha(K, i, 0));
  for (auto _ : state) benchmark::DoNotOptimize(shuffle_mul(acc, alpha(K, 0, 2)));
}
BENCHMARK(BM_ShuffleMulSimpleRoots)->DenseRange(1, 3);

static void BM_LElement(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(L_element(1, n));
}
BENCHMARK(BM_LElement)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

static void BM_LCommutatorAtPoint(benchmark::State& state) {
  const int K = 2;
  ShuffleExprEval ev(K);
  const int c = ev.commutator(ev.leaf(L_element(K, 1)), ev.leaf(L_element(K, 2)));
  std::mt19937_64 rng(7);
  for (auto _ : state) {
    ShufflePoint pt = ShufflePoint::random(ev.dim(c), rng);
    benchmark::DoNotOptimize(ev.value(c, pt));
  }
}
BENCHMARK(BM_LCommutatorAtPoint)->Unit(benchmark::kMillisecond);

static void BM_WBracket(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  const WElem a = G_image(0, 2, K), b = G_image(1, 2, K);
  for (auto _ : state) benchmark::DoNotOptimize(w_bracket(a, b));
}
BENCHMARK(BM_WBracket)->DenseRange(2, 4);

static void BM_WkClosure(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_wk_closure(3, 3, 3));
}
BENCHMARK(BM_WkClosure)->Unit(benchmark::kMillisecond);

static void BM_LehnBracket(benchmark::State& state) {
  const int K = 3;
  const LehnElem a = gamma_op(K, 1, 1), b = gamma_op(K, 4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(lehn_bracket(a, b));
}
BENCHMARK(BM_LehnBracket);

static void BM_KacCount(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_abs_indec(Quiver::cyclic(1), {2, 1}, q, 10'000'000));
}
BENCHMARK(BM_KacCount)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
