#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quasibraid/braid_word.hpp"
#include "quasibraid/budget.hpp"

namespace quasibraid {

/// One factor w sigma_j w^{-1} of a quasipositive factorization.
struct Band {
  BraidWord conjugator;
  int generator = 1;

  /// conjugator * sigma_generator * conjugator^{-1}, unreduced.
  BraidWord word() const;

  friend bool operator==(const Band&, const Band&) = default;
};

/// A product of bands on a fixed strand count.
class QPFactorization {
public:
  /// Zero bands on one strand.
  QPFactorization() = default;
  /// Throws InvalidInput if a generator is out of range or a conjugator has the
  /// wrong strand count.
  QPFactorization(int strands, std::vector<Band> bands);

  int strands() const { return strands_; }
  const std::vector<Band>& bands() const { return bands_; }
  int band_count() const { return static_cast<int>(bands_.size()); }

  friend bool operator==(const QPFactorization&, const QPFactorization&) = default;

private:
  int strands_ = 1;
  std::vector<Band> bands_;
};

/// Concatenation of the bands, free-reduced.
BraidWord expand(const QPFactorization& q);

/// Re-checks that the writhe of the expansion equals the band count.
bool writhe_identity_holds(const QPFactorization& q);

/// band_count - strands.
int qp_self_linking(const QPFactorization& q);

/// Prepends c to every conjugator (free-reduced): a factorization of c * expand(q) * c^{-1}.
QPFactorization qp_conjugate(const QPFactorization& q, const BraidWord& c);

/// Same bands on n + 1 strands plus a trivial band on sigma_n.
QPFactorization qp_stabilize_positive(const QPFactorization& q);

/// Conjugators have uniform length in [0, conjugator_length] with uniform
/// signed letters; generators are uniform in 1..n-1. Deterministic in seed.
QPFactorization random_qp(int strands, int bands, int conjugator_length, std::uint64_t seed);

enum class QPStatus { Certificate, NotQuasipositive, Inconclusive };

enum class NotQPReason {
  None,
  /// Writhe below zero: impossible for any factorization.
  NegativeWrithe,
  /// Writhe zero forces the empty factorization, but the braid is not trivial.
  NontrivialZeroWrithe,
  /// No factorization with writhe-many bands and conjugators within the bound.
  /// Scoped to that bound only.
  ExhaustedBounds,
};

struct QPSearchResult {
  QPStatus status = QPStatus::Inconclusive;
  NotQPReason reason = NotQPReason::None;
  /// Factorization whose expansion equals the input braid (transported back
  /// through the conjugacy witness when one was used).
  std::optional<QPFactorization> certificate;
  /// Conjugator g such that the certificate was first found for g * input * g^{-1}.
  BraidWord witness;
  std::size_t nodes_used = 0;
  std::string detail;
};

std::string to_string(QPStatus status);
std::string to_string(NotQPReason reason);

/// Bounded search for a quasipositive factorization of `word`.
///
/// The band count is forced to writhe(word). Band conjugators range over
/// free-reduced words of length <= budget.max_conjugator_length in
/// length-lexicographic order (alphabet 1, -1, 2, -2, ...); products are
/// matched meet-in-the-middle on canonical forms, so the first certificate in
/// that order is returned. With `conjugacy_length` > 0 the search is repeated
/// on g * word * g^{-1} for conjugators g up to that length (closed braids).
QPSearchResult qp_search(const BraidWord& word, const SearchBudget& budget, int conjugacy_length = 0);

}  // namespace quasibraid
