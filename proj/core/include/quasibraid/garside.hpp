#pragma once

#include <cstddef>
#include <vector>

#include "quasibraid/braid_word.hpp"
#include "quasibraid/permutation.hpp"

namespace quasibraid {

/// Left normal form Delta^infimum * A_1 ... A_l of a braid.
///
/// Each factor is a permutation braid (positive, every pair of strands crosses
/// at most once), identified with its underlying permutation. Factors are never
/// the identity or Delta, and consecutive pairs are left-weighted:
/// starting_set(A_{i+1}) is a subset of finishing_set(A_i).
struct CanonicalForm {
  int strands = 1;
  int infimum = 0;
  std::vector<Permutation> factors;

  int supremum() const { return infimum + static_cast<int>(factors.size()); }
  /// Trivial braid.
  bool is_identity() const { return infimum == 0 && factors.empty(); }

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& form) const;
};

namespace garside {

/// Set of i (0-based generator index) such that sigma_{i+1} left-divides the permutation braid.
std::vector<bool> starting_set(const Permutation& simple);
/// Set of i such that sigma_{i+1} right-divides the permutation braid.
std::vector<bool> finishing_set(const Permutation& simple);
bool is_left_weighted(const Permutation& left, const Permutation& right);
/// Conjugation by Delta: sigma_i -> sigma_{n-i}.
Permutation flip(const Permutation& simple);
/// A positive word whose permutation braid is `simple`.
BraidWord simple_to_word(const Permutation& simple);
/// Checks the CanonicalForm invariants.
bool is_valid(const CanonicalForm& form);

}  // namespace garside

CanonicalForm to_normal_form(const BraidWord& word);

/// A word representing the canonical form: Delta^p written as (sigma_1 ... sigma_{n-1})(sigma_1 ... sigma_{n-2})...,
/// inverted when p < 0, followed by the factors.
BraidWord from_normal_form(const CanonicalForm& form);

/// Decides equality in B_n. Throws InvalidInput on strand mismatch.
bool words_equal(const BraidWord& a, const BraidWord& b);

/// True iff the braid is a positive braid (infimum >= 0).
bool is_positive_braid(const CanonicalForm& form);

}  // namespace quasibraid
