#include "quasibraid/bounds.hpp"

#include "quasibraid/error.hpp"
#include "quasibraid/garside.hpp"
#include "quasibraid/homfly.hpp"
#include "quasibraid/search.hpp"

namespace quasibraid {

std::string to_string(UnlinkStatus status) {
  switch (status) {
    case UnlinkStatus::Unlink: return "unlink";
    case UnlinkStatus::NotUnlink: return "not_unlink";
    case UnlinkStatus::Unknown: return "unknown";
  }
  return "unknown";
}

UnlinkResult unlink_status(const BraidWord& word, const SearchBudget& budget) {
  UnlinkResult result;
  const int components = component_count(word);
  if (homfly(word) != unlink_polynomial(components)) {
    result.status = UnlinkStatus::NotUnlink;
    result.detail = "HOMFLY differs from the " + std::to_string(components) + "-component unlink";
    return result;
  }
  ExploreOptions options;
  options.order = ExploreOrder::BestFirst;
  options.stop_when = [components](const BraidWord& w) {
    return w.strands() == components && to_normal_form(w).is_identity();
  };
  const ReachabilityReport report = explore(word, budget, options);
  if (report.stopped_at) {
    result.status = UnlinkStatus::Unlink;
    result.witness = report.sequence_to(*report.stopped_at);
    if (!report.states[*report.stopped_at].word.empty()) {
      result.witness->steps.push_back(step::Rewrite{BraidWord(components, {})});
    }
    result.detail = "trivialized in " + std::to_string(result.witness->steps.size()) + " moves";
  } else {
    result.status = UnlinkStatus::Unknown;
    result.detail = "HOMFLY matches the unlink but no trivializing sequence found within " +
                    std::to_string(report.nodes_used()) + " states";
  }
  return result;
}

BoundedInvariant braid_index_bounds(const BraidWord& word, const SearchBudget& budget) {
  const MinimalRepresentatives reps = find_minimal_representatives(word, budget);
  BoundedInvariant out;
  out.lower = reps.mfw_lower;
  out.lower_certificate = "MFW from HOMFLY";
  out.upper = reps.strands;
  out.upper_certificate = "exhibited braid word [" + (reps.words.empty() ? std::string() : reps.words.front().to_string()) +
                          "] on " + std::to_string(reps.strands) + " strands";
  return out;
}

BoundedInvariant max_self_linking_bounds(const BraidWord& word, const SearchBudget& budget,
                                         const std::optional<QPFactorization>& qp) {
  BoundedInvariant out;
  const int morton = morton_sl_upper(homfly(word));
  out.upper = morton;
  out.upper_certificate = "Morton bound from HOMFLY";
  if (qp) {
    if (qp->strands() != word.strands() || !words_equal(expand(*qp), word)) {
      throw InvalidInput("max_self_linking_bounds: factorization does not expand to the braid");
    }
    const int sl = qp_self_linking(*qp);
    if (morton < sl) {
      throw TheoremViolation("Morton bound " + std::to_string(morton) + " below quasipositive self-linking " +
                             std::to_string(sl) + " for [" + word.to_string() + "]");
    }
    out.lower = sl;
    out.lower_certificate = "quasipositive factorization with " + std::to_string(qp->band_count()) + " bands";
    out.upper = sl;
    out.upper_certificate = "sharp slice-Bennequin bound for quasipositive closures (Morton bound " +
                            std::to_string(morton) + ")";
    return out;
  }
  ExploreOptions options;
  options.order = ExploreOrder::BestFirst;
  const ReachabilityReport report = explore(word, budget, options);
  out.lower = report.max_self_linking;
  out.lower_certificate = "exhibited braid word [" + report.states[report.max_self_linking_state].word.to_string() +
                          "] on " + std::to_string(report.states[report.max_self_linking_state].word.strands()) +
                          " strands";
  return out;
}

}  // namespace quasibraid
