#include "quasibraid/corpus.hpp"

#include "quasibraid/error.hpp"
#include "quasibraid/rng.hpp"

namespace quasibraid {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Corpus generate_corpus(const CorpusParams& params) {
  if (params.count < 0 || params.max_strands < 1 || params.max_bands < 0 || params.max_conjugator_length < 0) {
    throw InvalidInput("generate_corpus: parameters out of range");
  }
  Corpus corpus{params, {}};
  corpus.items.reserve(static_cast<std::size_t>(params.count));
  for (int i = 0; i < params.count; ++i) {
    const std::uint64_t item_seed = splitmix64(params.seed ^ splitmix64(static_cast<std::uint64_t>(i)));
    Rng rng(item_seed);
    const int n = rng.between(1, params.max_strands);
    const int k = n == 1 ? 0 : rng.between(0, params.max_bands);
    const int len = rng.between(0, params.max_conjugator_length);
    corpus.items.push_back(random_qp(n, k, len, rng.next()));
  }
  return corpus;
}

}  // namespace quasibraid
