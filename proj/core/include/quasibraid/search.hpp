#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "quasibraid/braid_word.hpp"
#include "quasibraid/budget.hpp"
#include "quasibraid/moves.hpp"

namespace quasibraid {

enum class ExploreOrder {
  /// Plain breadth-first closure.
  BreadthFirst,
  /// Fewer strands first, then shorter word, then lexicographic.
  BestFirst,
};

struct ExploreOptions {
  ExploreOrder order = ExploreOrder::BreadthFirst;
  /// Stop as soon as a state satisfying this is visited.
  std::function<bool(const BraidWord&)> stop_when;
};

/// One visited search state. `via` is the chain of moves from the parent.
struct VisitedState {
  BraidWord word;
  std::optional<std::size_t> parent;
  std::vector<MoveStep> via;
};

struct ReachabilityReport {
  /// The word exploration started from; states[0] is its free reduction.
  BraidWord input;
  std::vector<VisitedState> states;
  std::set<ConePoint> points;
  int min_strands = 0;
  /// Indices into `states` at min_strands, in visiting order.
  std::vector<std::size_t> minimal;
  int max_self_linking = 0;
  std::size_t max_self_linking_state = 0;
  bool budget_exhausted = false;
  /// Index of the state that satisfied ExploreOptions::stop_when.
  std::optional<std::size_t> stopped_at;

  std::size_t nodes_used() const { return states.size(); }
  /// Replayable path from `input` to states[index].
  MoveSequence sequence_to(std::size_t index) const;
  std::vector<BraidWord> minimal_words() const;
};

/// Closure of {word} under single-letter conjugation, cyclic reduction,
/// stabilization of either sign (up to budget.max_strands), destabilization
/// after any cyclic rotation of the stored word or its normal-form word,
/// conjugation by the half twist, and exchange moves. States are deduplicated
/// by canonical form.
ReachabilityReport explore(const BraidWord& word, const SearchBudget& budget, const ExploreOptions& options = {});

struct MinimalRepresentatives {
  /// Representatives at `strands`, in visiting order.
  std::vector<BraidWord> words;
  int strands = 0;
  int mfw_lower = 0;
  /// strands == mfw_lower: the braid index is known exactly.
  bool certified = false;
  bool budget_exhausted = false;
  /// Best-first search from the input; stops early once the MFW bound is met.
  ReachabilityReport report;
  /// Closure of the first minimal state without stabilization (only when certified).
  ReachabilityReport orbit;

  /// Replayable path from the input to words[i].
  MoveSequence sequence_to(std::size_t i) const;
};

/// Best-first search for the least strand count. Once the MFW lower bound is
/// reached the search stops and the minimal state's conjugation/exchange
/// closure (at most `orbit_nodes` states) supplies further representatives.
MinimalRepresentatives find_minimal_representatives(const BraidWord& word, const SearchBudget& budget,
                                                    std::size_t orbit_nodes = 256);

}  // namespace quasibraid
