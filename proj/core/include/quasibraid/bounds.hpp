#pragma once

#include <optional>
#include <string>

#include "quasibraid/braid_word.hpp"
#include "quasibraid/budget.hpp"
#include "quasibraid/moves.hpp"
#include "quasibraid/quasipositive.hpp"

namespace quasibraid {

/// Two-sided bounds on an integer link invariant, each with its provenance.
/// A missing bound stands for -infinity (lower) or +infinity (upper).
struct BoundedInvariant {
  std::optional<int> lower;
  std::optional<int> upper;
  std::string lower_certificate;
  std::string upper_certificate;

  bool exact() const { return lower && upper && *lower == *upper; }
  bool consistent() const { return !lower || !upper || *lower <= *upper; }
};

enum class UnlinkStatus { Unlink, NotUnlink, Unknown };

std::string to_string(UnlinkStatus status);

struct UnlinkResult {
  UnlinkStatus status = UnlinkStatus::Unknown;
  /// Moves from the input to the empty word on component_count strands (Unlink only).
  std::optional<MoveSequence> witness;
  std::string detail;
};

/// Unlink only with an explicit trivializing move sequence; NotUnlink only when
/// the HOMFLY polynomial differs from the unlink's; Unknown otherwise.
UnlinkResult unlink_status(const BraidWord& word, const SearchBudget& budget);

/// lower: MFW bound; upper: least strand count reached by search.
BoundedInvariant braid_index_bounds(const BraidWord& word, const SearchBudget& budget);

/// upper: Morton's bound; lower: the best self-linking number seen by search,
/// or the factorization's band count minus strands when `qp` is given (sharp
/// for quasipositive closures). Throws InvalidInput if `qp` does not expand to
/// `word`; throws TheoremViolation if Morton's bound is below the
/// quasipositive value.
BoundedInvariant max_self_linking_bounds(const BraidWord& word, const SearchBudget& budget,
                                         const std::optional<QPFactorization>& qp = std::nullopt);

}  // namespace quasibraid
