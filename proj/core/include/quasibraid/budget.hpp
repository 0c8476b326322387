#pragma once

#include <cstddef>

namespace quasibraid {

/// Limits shared by every bounded search. Exhausting any of them yields an
/// "inconclusive" outcome, never a negative answer.
struct SearchBudget {
  /// Canonical-form evaluations (search states or candidate products).
  std::size_t max_nodes = 20'000;
  /// Stabilizations never go above this strand count.
  int max_strands = 5;
  /// States whose reduced word is longer than this are not expanded.
  int max_word_length = 24;
  /// Longest band conjugator considered by quasipositivity search.
  int max_conjugator_length = 2;
};

}  // namespace quasibraid
