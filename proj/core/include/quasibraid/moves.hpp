#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "quasibraid/braid_word.hpp"

namespace quasibraid {

/// A point of the (writhe, braid index) plane.
struct ConePoint {
  int w = 0;
  int n = 1;

  friend bool operator==(const ConePoint&, const ConePoint&) = default;
  friend auto operator<=>(const ConePoint&, const ConePoint&) = default;
};

inline ConePoint cone_point(const BraidWord& word) { return {writhe(word), word.strands()}; }

/// c * word * c^{-1}, concatenated without reduction.
BraidWord conjugate(const BraidWord& word, const BraidWord& c);

/// word * sigma_n^{sign} on n + 1 strands. `sign` must be +1 or -1.
BraidWord stabilize(const BraidWord& word, int sign);

struct Destabilization {
  BraidWord word;
  int sign = 0;
};

/// Inverse of stabilize. After free reduction the word must contain sigma_{n-1}^{+-1}
/// exactly once, as its final letter; otherwise throws MovePreconditionError.
Destabilization destabilize(const BraidWord& word);
bool can_destabilize(const BraidWord& word);

/// writhe - strands.
int self_linking(const BraidWord& word);

/// p is reachable from apex by stabilizations.
bool cone_contains(const ConePoint& apex, const ConePoint& p);

/// All points reachable from apex with at most `depth` stabilizations, sorted by (n, w).
std::vector<ConePoint> cone_points(const ConePoint& apex, int depth);

/// |w(word) - w(minimal)| <= n(word) - n(minimal). Evaluates the arithmetic only.
bool jones_inequality_holds(const BraidWord& word, const BraidWord& minimal);
bool jones_inequality_holds(const ConePoint& p, const ConePoint& minimal);

/// alpha sigma_{n-1}^{e} gamma sigma_{n-1}^{-e} with alpha, gamma free of sigma_{n-1}.
bool is_exchange_form(const BraidWord& word);

/// alpha sigma_{n-1}^{-e} gamma sigma_{n-1}^{e}. Throws MovePreconditionError unless
/// is_exchange_form(word).
BraidWord exchange_move(const BraidWord& word);

namespace step {
struct Conjugate {
  BraidWord by;
  friend bool operator==(const Conjugate&, const Conjugate&) = default;
};
struct Stabilize {
  int sign = 1;
  friend bool operator==(const Stabilize&, const Stabilize&) = default;
};
/// `sign` is the expected sign of the removed letter; 0 accepts either.
struct Destabilize {
  int sign = 0;
  friend bool operator==(const Destabilize&, const Destabilize&) = default;
};
struct Exchange {
  friend bool operator==(const Exchange&, const Exchange&) = default;
};
/// Braid isotopy: replace the running word by an equal word (checked on replay).
struct Rewrite {
  BraidWord to;
  friend bool operator==(const Rewrite&, const Rewrite&) = default;
};
}  // namespace step

using MoveStep = std::variant<step::Conjugate, step::Stabilize, step::Destabilize, step::Exchange, step::Rewrite>;

std::string describe(const MoveStep& s);

/// A replayable chain of moves. Conjugation steps free-reduce their result;
/// every other step is applied exactly as stated.
struct MoveSequence {
  BraidWord initial;
  std::vector<MoveStep> steps;

  friend bool operator==(const MoveSequence&, const MoveSequence&) = default;
};

/// Applies one step. Throws MovePreconditionError if the step does not apply.
BraidWord apply_step(const BraidWord& word, const MoveStep& s);

/// Endpoint of the sequence.
BraidWord replay(const MoveSequence& sequence);

/// Every intermediate word, starting with `initial`.
std::vector<BraidWord> replay_trace(const MoveSequence& sequence);

/// Decomposition of an exchange move into conjugations, one positive
/// stabilization and one positive destabilization.
struct ExchangeComposite {
  MoveSequence sequence;
  /// conjugate(replay(sequence), witness) equals exchange_move(initial) as braids.
  BraidWord witness;
};

/// Returns std::nullopt if the word is in exchange form but no decomposition was
/// found within `max_conjugator_length`. Throws MovePreconditionError when the
/// word is not in exchange form.
std::optional<ExchangeComposite> exchange_as_composite(const BraidWord& word, int max_conjugator_length = 4);

}  // namespace quasibraid
