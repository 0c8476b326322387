#include <benchmark/benchmark.h>

#include <vector>

#include "quasibraid/garside.hpp"
#include "quasibraid/homfly.hpp"
#include "quasibraid/quasipositive.hpp"
#include "quasibraid/rng.hpp"

using namespace quasibraid;

namespace {

std::vector<BraidWord> sample_words(int strands, int length, std::size_t count) {
  Rng rng(17);
  std::vector<BraidWord> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Letter> letters;
    for (int j = 0; j < length; ++j) {
      const int g = rng.between(1, strands - 1);
      letters.push_back(rng.below(2) ? g : -g);
    }
    out.emplace_back(strands, std::move(letters));
  }
  return out;
}

void BM_NormalForm(benchmark::State& state) {
  const auto words = sample_words(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(to_normal_form(words[i++ % words.size()]));
}
BENCHMARK(BM_NormalForm)->Args({4, 16})->Args({4, 64})->Args({6, 64});

// Fresh calculator per call, so every resolution is uncached.
void BM_HomflyUncached(benchmark::State& state) {
  const auto words = sample_words(4, static_cast<int>(state.range(0)), 16);
  std::size_t i = 0;
  for (auto _ : state) {
    HomflyCalculator calc;
    benchmark::DoNotOptimize(calc(words[i++ % words.size()]));
  }
}
BENCHMARK(BM_HomflyUncached)->Arg(8)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_QPSearch(benchmark::State& state) {
  std::vector<BraidWord> words;
  for (std::uint64_t s = 0; s < 16; ++s) {
    words.push_back(expand(random_qp(4, static_cast<int>(state.range(0)), 2, s)));
  }
  const SearchBudget budget;
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(qp_search(words[i++ % words.size()], budget));
}
BENCHMARK(BM_QPSearch)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
