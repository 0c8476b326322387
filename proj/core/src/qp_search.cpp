#include <unordered_map>
#include <unordered_set>

#include "quasibraid/garside.hpp"
#include "quasibraid/quasipositive.hpp"

namespace quasibraid {

namespace {

struct CandidateBand {
  Band band;
  BraidWord word;
};

class NodeCounter {
public:
  explicit NodeCounter(std::size_t limit) : limit_(limit) {}
  bool spend() { return ++used_ <= limit_; }
  std::size_t used() const { return used_; }

private:
  std::size_t limit_;
  std::size_t used_ = 0;
};

struct PlainOutcome {
  enum class Kind { Found, Exhausted, OutOfNodes } kind = Kind::Exhausted;
  std::vector<std::size_t> picks;
};

// Distinct band elements in length-lexicographic order of (conjugator, generator).
std::vector<CandidateBand> candidate_bands(int n, int max_conjugator_length) {
  std::vector<CandidateBand> out;
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
  for (const BraidWord& w : reduced_words_up_to(n, max_conjugator_length)) {
    for (int j = 1; j < n; ++j) {
      Band band{w, j};
      BraidWord word = free_reduce(band.word());
      if (seen.insert(to_normal_form(word)).second) out.push_back({std::move(band), std::move(word)});
    }
  }
  return out;
}

class ProductSearch {
public:
  ProductSearch(const std::vector<CandidateBand>& bands, int strands, NodeCounter& nodes)
      : bands_(bands), strands_(strands), nodes_(nodes) {}

  // Products of exactly `depth` bands, first (lexicographic) index tuple per element.
  bool build_suffixes(int depth) {
    std::vector<std::size_t> picks;
    return collect(BraidWord(strands_), depth, picks);
  }

  // Lexicographic walk over prefixes of length `depth`; a prefix X matches when
  // X^{-1} target is a stored suffix.
  PlainOutcome match(const CanonicalForm& target_form, const BraidWord& target, int depth) {
    target_ = &target;
    std::vector<std::size_t> picks;
    std::vector<std::unordered_set<CanonicalForm, CanonicalFormHash>> seen(static_cast<std::size_t>(depth) + 1);
    PlainOutcome out;
    if (depth == 0) {
      if (const auto it = suffixes_.find(target_form); it != suffixes_.end()) {
        out.kind = PlainOutcome::Kind::Found;
        out.picks = it->second;
      }
      return out;
    }
    walk(BraidWord(strands_), depth, picks, seen, out);
    return out;
  }

private:
  bool collect(const BraidWord& prefix, int remaining, std::vector<std::size_t>& picks) {
    if (remaining == 0) {
      if (!nodes_.spend()) return false;
      suffixes_.try_emplace(to_normal_form(prefix), picks);
      return true;
    }
    for (std::size_t i = 0; i < bands_.size(); ++i) {
      picks.push_back(i);
      const bool ok = collect(free_reduce(prefix * bands_[i].word), remaining - 1, picks);
      picks.pop_back();
      if (!ok) return false;
    }
    return true;
  }

  void walk(const BraidWord& prefix, int remaining, std::vector<std::size_t>& picks,
            std::vector<std::unordered_set<CanonicalForm, CanonicalFormHash>>& seen, PlainOutcome& out) {
    for (std::size_t i = 0; i < bands_.size() && out.kind == PlainOutcome::Kind::Exhausted; ++i) {
      if (!nodes_.spend()) {
        out.kind = PlainOutcome::Kind::OutOfNodes;
        return;
      }
      const BraidWord next = free_reduce(prefix * bands_[i].word);
      picks.push_back(i);
      if (remaining == 1) {
        const CanonicalForm rest = to_normal_form(next.inverse() * *target_);
        if (const auto it = suffixes_.find(rest); it != suffixes_.end()) {
          out.kind = PlainOutcome::Kind::Found;
          out.picks = picks;
          out.picks.insert(out.picks.end(), it->second.begin(), it->second.end());
        }
      } else if (seen[static_cast<std::size_t>(remaining)].insert(to_normal_form(next)).second) {
        walk(next, remaining - 1, picks, seen, out);
      }
      picks.pop_back();
    }
  }

  const std::vector<CandidateBand>& bands_;
  int strands_;
  NodeCounter& nodes_;
  const BraidWord* target_ = nullptr;
  std::unordered_map<CanonicalForm, std::vector<std::size_t>, CanonicalFormHash> suffixes_;
};

QPFactorization from_picks(const std::vector<CandidateBand>& bands, int strands, const std::vector<std::size_t>& picks) {
  std::vector<Band> out;
  for (std::size_t i : picks) out.push_back(bands[i].band);
  return QPFactorization(strands, std::move(out));
}

QPFactorization positive_word_factorization(const BraidWord& positive) {
  std::vector<Band> out;
  for (Letter e : positive.letters()) out.push_back({BraidWord(positive.strands()), e});
  return QPFactorization(positive.strands(), std::move(out));
}

// Search on a single word; no conjugacy.
QPSearchResult search_plain(const BraidWord& word, const SearchBudget& budget, NodeCounter& nodes,
                            const std::vector<CandidateBand>* cached_bands) {
  QPSearchResult result;
  const int k = writhe(word);
  const int n = word.strands();
  if (k < 0) {
    result.status = QPStatus::NotQuasipositive;
    result.reason = NotQPReason::NegativeWrithe;
    result.detail = "writhe " + std::to_string(k) + " < 0";
    return result;
  }
  const CanonicalForm form = to_normal_form(word);
  nodes.spend();
  if (k == 0) {
    if (form.is_identity()) {
      result.status = QPStatus::Certificate;
      result.certificate = QPFactorization(n, {});
      result.detail = "trivial braid";
    } else {
      result.status = QPStatus::NotQuasipositive;
      result.reason = NotQPReason::NontrivialZeroWrithe;
      result.detail = "writhe 0 but the braid is not trivial";
    }
    return result;
  }
  if (is_positive_braid(form)) {
    result.status = QPStatus::Certificate;
    result.certificate = positive_word_factorization(from_normal_form(form));
    result.detail = "positive braid";
    return result;
  }

  const std::vector<CandidateBand> local = cached_bands ? std::vector<CandidateBand>{} : candidate_bands(n, budget.max_conjugator_length);
  const std::vector<CandidateBand>& bands = cached_bands ? *cached_bands : local;

  const int suffix_depth = k / 2;
  const int prefix_depth = k - suffix_depth;
  ProductSearch search(bands, n, nodes);
  if (!search.build_suffixes(suffix_depth)) {
    result.status = QPStatus::Inconclusive;
    result.detail = "node budget exhausted";
    return result;
  }
  const PlainOutcome outcome = search.match(form, word, prefix_depth);
  switch (outcome.kind) {
    case PlainOutcome::Kind::Found:
      result.status = QPStatus::Certificate;
      result.certificate = from_picks(bands, n, outcome.picks);
      result.detail = "band search";
      break;
    case PlainOutcome::Kind::Exhausted:
      result.status = QPStatus::NotQuasipositive;
      result.reason = NotQPReason::ExhaustedBounds;
      result.detail = "no factorization with " + std::to_string(k) + " bands and conjugators of length <= " +
                      std::to_string(budget.max_conjugator_length);
      break;
    case PlainOutcome::Kind::OutOfNodes:
      result.status = QPStatus::Inconclusive;
      result.detail = "node budget exhausted";
      break;
  }
  return result;
}

}  // namespace

QPSearchResult qp_search(const BraidWord& word, const SearchBudget& budget, int conjugacy_length) {
  NodeCounter nodes(budget.max_nodes);
  const BraidWord reduced = free_reduce(word);
  QPSearchResult first = search_plain(reduced, budget, nodes, nullptr);
  first.witness = BraidWord(word.strands());
  if (first.status != QPStatus::NotQuasipositive || first.reason != NotQPReason::ExhaustedBounds ||
      conjugacy_length <= 0) {
    first.nodes_used = nodes.used();
    return first;
  }

  // Closed-braid mode: the writhe obstructions are conjugation invariant, so only
  // the bounded negative answer is worth retrying on conjugates.
  const std::vector<CandidateBand> bands = candidate_bands(word.strands(), budget.max_conjugator_length);
  std::unordered_set<CanonicalForm, CanonicalFormHash> tried{to_normal_form(reduced)};
  for (const BraidWord& g : reduced_words_up_to(word.strands(), conjugacy_length)) {
    const BraidWord conjugated = free_reduce(g * reduced * g.inverse());
    if (!tried.insert(to_normal_form(conjugated)).second) continue;
    QPSearchResult attempt = search_plain(conjugated, budget, nodes, &bands);
    if (attempt.status == QPStatus::Certificate) {
      attempt.certificate = qp_conjugate(*attempt.certificate, g.inverse());
      attempt.witness = g;
      attempt.detail += " on a conjugate";
      attempt.nodes_used = nodes.used();
      return attempt;
    }
    if (attempt.status == QPStatus::Inconclusive) {
      attempt.witness = BraidWord(word.strands());
      attempt.nodes_used = nodes.used();
      return attempt;
    }
  }
  first.detail += " on conjugates of length <= " + std::to_string(conjugacy_length);
  first.nodes_used = nodes.used();
  return first;
}

}  // namespace quasibraid
