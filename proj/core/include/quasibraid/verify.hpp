#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "quasibraid/bounds.hpp"
#include "quasibraid/braid_word.hpp"
#include "quasibraid/budget.hpp"
#include "quasibraid/quasipositive.hpp"

namespace quasibraid {

enum class Statement { ThmMain, ThmSlBound, CorChirality, PropertyTransport };
enum class VerificationStatus { Verified, Inconclusive };

std::string to_string(Statement s);
std::string to_string(VerificationStatus s);
/// Accepts "main", "sl-bound", "chirality", "property-transport" and the
/// to_string spellings. Throws InvalidInput otherwise.
Statement parse_statement(const std::string& text);

/// Outcome of one driver run. There is no counterexample status: an
/// observation contradicting a theorem throws TheoremViolation instead.
struct VerificationRecord {
  Statement statement = Statement::ThmMain;
  QPFactorization instance;
  VerificationStatus status = VerificationStatus::Inconclusive;

  std::optional<int> max_self_linking;
  BoundedInvariant braid_index;
  /// Writhe of the certified-minimal representatives (all equal).
  std::optional<int> minimal_writhe;
  std::size_t nodes_used = 0;
  /// Minimal-index quasipositive representative and its factorization.
  std::optional<BraidWord> representative;
  std::optional<QPFactorization> certificate;
  std::vector<std::string> notes;
};

/// Some certified-minimal representative of the closure of expand(q) admits
/// a quasipositive factorization.
VerificationRecord verify_thm_main(const QPFactorization& q, const SearchBudget& budget);

/// sl(q) >= -b, with equality exactly for unlinks.
VerificationRecord verify_sl_bound(const QPFactorization& q, const SearchBudget& budget);

/// Non-unlink closures have positive minimal writhe, so their mirrors are not
/// quasipositive at minimal index.
VerificationRecord verify_chirality(const QPFactorization& q, const SearchBudget& budget);

using BraidPredicate = std::function<bool(const BraidWord&)>;

/// If expand(q) satisfies `property`, some certified-minimal representative
/// does too. `property` is first spot-checked for invariance under
/// `spot_checks` random conjugations and positive (de)stabilizations; a
/// failed spot-check throws InvalidInput.
VerificationRecord verify_property_transport(const QPFactorization& q, const BraidPredicate& property,
                                             const SearchBudget& budget, std::uint64_t seed = 1,
                                             int spot_checks = 16);

VerificationRecord verify(Statement statement, const QPFactorization& q, const SearchBudget& budget);

}  // namespace quasibraid
