#pragma once

#include <cstddef>
#include <mutex>
#include <unordered_map>

#include "quasibraid/braid_word.hpp"
#include "quasibraid/garside.hpp"
#include "quasibraid/polynomial.hpp"

namespace quasibraid {

/// HOMFLY-PT polynomial of braid closures under the skein convention
///
///     v^{-1} P(L+) - v P(L-) = z P(L0),   P(unknot) = 1.
///
/// Crossings are resolved against a descending diagram: strands are walked
/// component by component from their bottom-most starting slot, and the first
/// crossing met from below is switched. Switching leaves every strand path
/// unchanged, so the number of such crossings strictly drops along the switch
/// branch while the smoothing branch loses a letter. Cheap Markov
/// simplifications (free/cyclic reduction, destabilization at either end,
/// splitting at an unused generator) run before each resolution, and results
/// are memoized on the canonical form of the simplified word.
///
/// The memo is a pure cache guarded by a mutex; sharing one calculator across
/// threads never changes results.
class HomflyCalculator {
public:
  /// `max_evaluations` caps uncached skein resolutions per top-level call.
  explicit HomflyCalculator(std::size_t max_evaluations = 2'000'000, std::size_t max_memo = 1'000'000);

  /// Throws BudgetExceeded when the evaluation cap is hit.
  HomflyPolynomial operator()(const BraidWord& word);

  std::size_t memo_size() const;
  void clear();

private:
  HomflyPolynomial evaluate(BraidWord word, std::size_t& evaluations);
  HomflyPolynomial resolve(const BraidWord& word, std::size_t& evaluations);

  std::size_t max_evaluations_;
  std::size_t max_memo_;
  mutable std::mutex mutex_;
  std::unordered_map<CanonicalForm, HomflyPolynomial, CanonicalFormHash> memo_;
};

/// Uses a per-thread calculator with default limits.
HomflyPolynomial homfly(const BraidWord& word);

/// ((v^{-1} - v) / z)^(components - 1): the polynomial of the unlink.
HomflyPolynomial unlink_polynomial(int components);

/// v-breadth / 2 + 1. Throws InvalidInput on the zero polynomial.
int mfw_braid_index_lower(const HomflyPolynomial& p);

/// min v-exponent - 1, an upper bound for the maximal self-linking number.
int morton_sl_upper(const HomflyPolynomial& p);

/// v -> v^{-1}, z -> -z.
HomflyPolynomial homfly_mirror(const HomflyPolynomial& p);

}  // namespace quasibraid
