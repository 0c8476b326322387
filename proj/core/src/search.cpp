#include "quasibraid/search.hpp"

#include <deque>
#include <queue>
#include <unordered_map>

#include "quasibraid/garside.hpp"
#include "quasibraid/homfly.hpp"

namespace quasibraid {

namespace {

struct Candidate {
  BraidWord word;
  std::vector<MoveStep> via;
};

BraidWord prefix_inverse(const BraidWord& word, std::size_t k) {
  std::vector<Letter> prefix(word.letters().begin(), word.letters().begin() + static_cast<std::ptrdiff_t>(k));
  return BraidWord(word.strands(), std::move(prefix)).inverse();
}

BraidWord delta_word(int n) {
  return from_normal_form(CanonicalForm{n, 1, {}});
}

// Moves that need a rotation first: destabilization and exchange.
void rotation_moves(const BraidWord& base, const std::vector<MoveStep>& lead, std::vector<Candidate>& out) {
  const std::size_t len = base.length();
  for (std::size_t k = 0; k < std::max<std::size_t>(len, 1); ++k) {
    const BraidWord rotated = k == 0 ? base : rotate(base, k);
    std::vector<MoveStep> via = lead;
    if (k != 0) via.push_back(step::Conjugate{prefix_inverse(base, k)});
    if (can_destabilize(rotated)) {
      std::vector<MoveStep> d = via;
      d.push_back(step::Destabilize{});
      out.push_back({destabilize(rotated).word, std::move(d)});
    }
    if (is_exchange_form(rotated)) {
      std::vector<MoveStep> x = via;
      x.push_back(step::Exchange{});
      out.push_back({exchange_move(rotated), std::move(x)});
    }
  }
}

std::vector<Candidate> neighbours(const BraidWord& word, const SearchBudget& budget) {
  std::vector<Candidate> out;
  const int n = word.strands();

  const BraidWord cyclic = cyclic_reduce(word);
  if (cyclic != word) {
    const std::size_t cut = (word.length() - cyclic.length()) / 2;
    out.push_back({cyclic, {step::Conjugate{prefix_inverse(word, cut)}}});
  }

  for (int i = 1; i < n; ++i) {
    for (int sign : {1, -1}) {
      const BraidWord by(n, {sign * i});
      out.push_back({free_reduce(conjugate(word, by)), {step::Conjugate{by}}});
    }
  }

  if (n < budget.max_strands) {
    for (int sign : {1, -1}) out.push_back({stabilize(word, sign), {step::Stabilize{sign}}});
  }

  rotation_moves(word, {}, out);
  const BraidWord normal = from_normal_form(to_normal_form(word));
  if (normal != word) rotation_moves(normal, {step::Rewrite{normal}}, out);

  if (n > 2) {
    const BraidWord flipped = flip(word);
    out.push_back({flipped, {step::Conjugate{delta_word(n)}, step::Rewrite{flipped}}});
  }
  return out;
}

struct QueueEntry {
  int strands;
  std::size_t length;
  std::vector<Letter> letters;
  std::size_t index;

  bool operator>(const QueueEntry& rhs) const {
    if (strands != rhs.strands) return strands > rhs.strands;
    if (length != rhs.length) return length > rhs.length;
    if (letters != rhs.letters) return letters > rhs.letters;
    return index > rhs.index;
  }
};

}  // namespace

MoveSequence ReachabilityReport::sequence_to(std::size_t index) const {
  std::vector<std::size_t> chain;
  for (std::optional<std::size_t> at = index; at; at = states[*at].parent) chain.push_back(*at);
  MoveSequence seq;
  seq.initial = input;
  if (input != states[chain.back()].word) seq.steps.push_back(step::Rewrite{states[chain.back()].word});
  for (auto it = chain.rbegin() + 1; it != chain.rend(); ++it) {
    const auto& via = states[*it].via;
    seq.steps.insert(seq.steps.end(), via.begin(), via.end());
  }
  return seq;
}

std::vector<BraidWord> ReachabilityReport::minimal_words() const {
  std::vector<BraidWord> out;
  for (std::size_t i : minimal) out.push_back(states[i].word);
  return out;
}

ReachabilityReport explore(const BraidWord& word, const SearchBudget& budget, const ExploreOptions& options) {
  ReachabilityReport report;
  report.input = word;
  std::unordered_map<CanonicalForm, std::size_t, CanonicalFormHash> index_of;

  const BraidWord root = free_reduce(word);
  std::deque<std::size_t> fifo;
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> heap;

  auto visit = [&](BraidWord w, std::optional<std::size_t> parent, std::vector<MoveStep> via) -> bool {
    if (static_cast<int>(w.length()) > budget.max_word_length && parent) return false;
    const auto [it, inserted] = index_of.try_emplace(to_normal_form(w), report.states.size());
    if (!inserted) return false;
    const std::size_t idx = it->second;
    const ConePoint p = cone_point(w);
    report.points.insert(p);
    const int sl = self_linking(w);
    if (report.states.empty() || p.n < report.min_strands) {
      report.min_strands = p.n;
      report.minimal.clear();
    }
    if (p.n == report.min_strands) report.minimal.push_back(idx);
    if (report.states.empty() || sl > report.max_self_linking) {
      report.max_self_linking = sl;
      report.max_self_linking_state = idx;
    }
    if (options.order == ExploreOrder::BreadthFirst) {
      fifo.push_back(idx);
    } else {
      heap.push({w.strands(), w.length(), w.letters(), idx});
    }
    const bool stop = options.stop_when && options.stop_when(w);
    report.states.push_back({std::move(w), parent, std::move(via)});
    if (stop) report.stopped_at = idx;
    return true;
  };

  visit(root, std::nullopt, {});
  if (report.stopped_at) return report;

  for (;;) {
    std::size_t current = 0;
    if (options.order == ExploreOrder::BreadthFirst) {
      if (fifo.empty()) break;
      current = fifo.front();
      fifo.pop_front();
    } else {
      if (heap.empty()) break;
      current = heap.top().index;
      heap.pop();
    }
    const BraidWord here = report.states[current].word;
    for (Candidate& next : neighbours(here, budget)) {
      if (report.states.size() >= budget.max_nodes) {
        report.budget_exhausted = true;
        return report;
      }
      visit(std::move(next.word), current, std::move(next.via));
      if (report.stopped_at) return report;
    }
  }
  return report;
}

MoveSequence MinimalRepresentatives::sequence_to(std::size_t i) const {
  if (orbit.states.empty()) return report.sequence_to(report.minimal.at(i));
  MoveSequence seq = report.sequence_to(*report.stopped_at);
  const MoveSequence tail = orbit.sequence_to(orbit.minimal.at(i));
  seq.steps.insert(seq.steps.end(), tail.steps.begin(), tail.steps.end());
  return seq;
}

MinimalRepresentatives find_minimal_representatives(const BraidWord& word, const SearchBudget& budget,
                                                    std::size_t orbit_nodes) {
  MinimalRepresentatives out;
  out.mfw_lower = mfw_braid_index_lower(homfly(word));
  ExploreOptions options;
  options.order = ExploreOrder::BestFirst;
  const int target = out.mfw_lower;
  options.stop_when = [target](const BraidWord& w) { return w.strands() <= target; };
  out.report = explore(word, budget, options);
  out.strands = out.report.min_strands;
  out.certified = out.strands == out.mfw_lower;
  out.budget_exhausted = out.report.budget_exhausted;

  if (!out.report.stopped_at) {
    out.words = out.report.minimal_words();
    return out;
  }
  SearchBudget orbit_budget = budget;
  orbit_budget.max_nodes = orbit_nodes;
  orbit_budget.max_strands = out.strands;
  out.orbit = explore(out.report.states[*out.report.stopped_at].word, orbit_budget);
  out.words = out.orbit.minimal_words();
  return out;
}

}  // namespace quasibraid
