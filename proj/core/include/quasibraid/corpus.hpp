#pragma once

#include <cstdint>
#include <vector>

#include "quasibraid/quasipositive.hpp"

namespace quasibraid {

struct CorpusParams {
  std::uint64_t seed = 1;
  int count = 200;
  int max_strands = 4;
  int max_bands = 5;
  int max_conjugator_length = 2;

  friend bool operator==(const CorpusParams&, const CorpusParams&) = default;
};

struct Corpus {
  CorpusParams params;
  std::vector<QPFactorization> items;
};

/// Item i uses its own stream seeded from (seed, i), so prefixes of a corpus
/// do not depend on its size. Strands are uniform in 1..max_strands, bands in
/// 0..max_bands (0 on one strand), conjugator length in 0..max_conjugator_length.
Corpus generate_corpus(const CorpusParams& params);

}  // namespace quasibraid
