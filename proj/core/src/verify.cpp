#include "quasibraid/verify.hpp"

#include <algorithm>

#include "quasibraid/error.hpp"
#include "quasibraid/garside.hpp"
#include "quasibraid/homfly.hpp"
#include "quasibraid/moves.hpp"
#include "quasibraid/rng.hpp"
#include "quasibraid/search.hpp"

namespace quasibraid {
namespace {

/// Minimal representatives tried by the quasipositivity search, shortest first.
constexpr std::size_t kMaxCandidates = 16;

std::string dump(const QPFactorization& q) {
  std::string out = "instance on " + std::to_string(q.strands()) + " strands:";
  for (const Band& b : q.bands()) out += " ([" + b.conjugator.to_string() + "], " + std::to_string(b.generator) + ")";
  return out;
}

VerificationRecord start(Statement statement, const QPFactorization& q) {
  VerificationRecord rec;
  rec.statement = statement;
  rec.instance = q;
  return rec;
}

void record_minimal(VerificationRecord& rec, const MinimalRepresentatives& reps) {
  rec.nodes_used += reps.report.nodes_used() + reps.orbit.nodes_used();
  rec.braid_index.lower = reps.mfw_lower;
  rec.braid_index.lower_certificate = "MFW from HOMFLY";
  rec.braid_index.upper = reps.strands;
  rec.braid_index.upper_certificate = "exhibited braid word";
  if (reps.certified && !reps.words.empty()) rec.minimal_writhe = writhe(reps.words.front());
  if (reps.budget_exhausted) rec.notes.push_back("search budget exhausted");
}

void check_jones(const VerificationRecord& rec, const MinimalRepresentatives& reps) {
  if (!reps.certified || reps.words.empty()) return;
  const ConePoint apex = cone_point(reps.words.front());
  for (const ReachabilityReport* report : {&reps.report, &reps.orbit}) {
    for (const ConePoint& p : report->points) {
      if (!jones_inequality_holds(p, apex)) {
        throw TheoremViolation("visited (w, n) = (" + std::to_string(p.w) + ", " + std::to_string(p.n) +
                               ") outside the cone of certified-minimal (" + std::to_string(apex.w) + ", " +
                               std::to_string(apex.n) + "); " + dump(rec.instance));
      }
    }
  }
}

MinimalRepresentatives minimal(VerificationRecord& rec, const BraidWord& word, const SearchBudget& budget) {
  MinimalRepresentatives reps = find_minimal_representatives(word, budget);
  record_minimal(rec, reps);
  check_jones(rec, reps);
  return reps;
}

std::vector<BraidWord> candidates(const MinimalRepresentatives& reps) {
  std::vector<BraidWord> out = reps.words;
  std::stable_sort(out.begin(), out.end(),
                   [](const BraidWord& a, const BraidWord& b) { return a.length() < b.length(); });
  if (out.size() > kMaxCandidates) out.resize(kMaxCandidates);
  return out;
}

void record_unlink(VerificationRecord& rec, const UnlinkResult& u) {
  rec.notes.push_back("unlink test: " + to_string(u.status) + " (" + u.detail + ")");
}

/// One step of a random walk by moves that preserve the transverse type.
BraidWord random_transverse_move(const BraidWord& word, Rng& rng, int max_strands) {
  const int n = word.strands();
  switch (rng.below(3)) {
    case 0:
      if (n >= 2) {
        const int g = rng.between(1, n - 1) * (rng.below(2) ? 1 : -1);
        return free_reduce(conjugate(word, BraidWord(n, {g})));
      }
      return word;
    case 1:
      return n < max_strands ? stabilize(word, 1) : word;
    default:
      for (std::size_t r = 0; r < std::max<std::size_t>(word.length(), 1); ++r) {
        const BraidWord rotated = free_reduce(rotate(word, r));
        if (can_destabilize(rotated)) {
          Destabilization d = destabilize(rotated);
          if (d.sign == 1) return d.word;
        }
      }
      return word;
  }
}

}  // namespace

std::string to_string(Statement s) {
  switch (s) {
    case Statement::ThmMain: return "thm_main";
    case Statement::ThmSlBound: return "thm_sl_bound";
    case Statement::CorChirality: return "cor_chirality";
    case Statement::PropertyTransport: return "property_transport";
  }
  return "";
}

std::string to_string(VerificationStatus s) {
  return s == VerificationStatus::Verified ? "verified" : "inconclusive";
}

Statement parse_statement(const std::string& text) {
  if (text == "main" || text == "thm_main") return Statement::ThmMain;
  if (text == "sl-bound" || text == "thm_sl_bound") return Statement::ThmSlBound;
  if (text == "chirality" || text == "cor_chirality") return Statement::CorChirality;
  if (text == "property-transport" || text == "property_transport") return Statement::PropertyTransport;
  throw InvalidInput("unknown statement: " + text);
}

VerificationRecord verify_thm_main(const QPFactorization& q, const SearchBudget& budget) {
  VerificationRecord rec = start(Statement::ThmMain, q);
  const BraidWord word = expand(q);
  rec.max_self_linking = qp_self_linking(q);
  const MinimalRepresentatives reps = minimal(rec, word, budget);
  if (!reps.certified) {
    rec.notes.push_back("minimal braid index not certified");
    return rec;
  }
  if (q.strands() == reps.strands) {
    rec.representative = word;
    rec.certificate = q;
    rec.status = VerificationStatus::Verified;
    rec.notes.push_back("input already at minimal index");
    return rec;
  }
  for (const BraidWord& rep : candidates(reps)) {
    const QPSearchResult r = qp_search(rep, budget, budget.max_conjugator_length);
    rec.nodes_used += r.nodes_used;
    if (r.status == QPStatus::Certificate) {
      if (!words_equal(expand(*r.certificate), rep)) {
        throw TheoremViolation("certificate does not re-check for [" + rep.to_string() + "]; " + dump(q));
      }
      rec.representative = rep;
      rec.certificate = r.certificate;
      rec.status = VerificationStatus::Verified;
      return rec;
    }
    if (r.status == QPStatus::NotQuasipositive && r.reason == NotQPReason::NegativeWrithe) {
      throw TheoremViolation("certified-minimal representative [" + rep.to_string() + "] has negative writhe; " +
                             dump(q));
    }
  }
  rec.notes.push_back("no factorization found at minimal index within budget");
  return rec;
}

VerificationRecord verify_sl_bound(const QPFactorization& q, const SearchBudget& budget) {
  VerificationRecord rec = start(Statement::ThmSlBound, q);
  const BraidWord word = expand(q);
  const int sl = qp_self_linking(q);
  rec.max_self_linking = sl;
  const int morton = morton_sl_upper(homfly(word));
  if (morton < sl) {
    throw TheoremViolation("Morton bound " + std::to_string(morton) + " below self-linking " + std::to_string(sl) +
                           "; " + dump(q));
  }
  const MinimalRepresentatives reps = minimal(rec, word, budget);
  if (sl < -reps.strands) {
    throw TheoremViolation("self-linking " + std::to_string(sl) + " below -b for exhibited b = " +
                           std::to_string(reps.strands) + "; " + dump(q));
  }
  const UnlinkResult u = unlink_status(word, budget);
  record_unlink(rec, u);

  const int b_lower = reps.mfw_lower;
  if (sl < -b_lower) {
    rec.notes.push_back("inequality not established against the MFW bound");
    return rec;
  }
  if (sl == -b_lower) {
    if (u.status == UnlinkStatus::Unlink) {
      rec.status = VerificationStatus::Verified;
      rec.notes.push_back("equality case, unlink witnessed");
    } else if (u.status == UnlinkStatus::NotUnlink && reps.certified) {
      throw TheoremViolation("equality sl = -b for a link that is not an unlink; " + dump(q));
    } else {
      rec.notes.push_back("equality with the MFW bound but unlink status undetermined");
    }
    return rec;
  }
  if (u.status == UnlinkStatus::Unlink) {
    throw TheoremViolation("strict inequality for a witnessed unlink; " + dump(q));
  }
  rec.status = VerificationStatus::Verified;
  return rec;
}

VerificationRecord verify_chirality(const QPFactorization& q, const SearchBudget& budget) {
  VerificationRecord rec = start(Statement::CorChirality, q);
  const BraidWord word = expand(q);
  rec.max_self_linking = qp_self_linking(q);
  const UnlinkResult u = unlink_status(word, budget);
  record_unlink(rec, u);
  if (u.status == UnlinkStatus::Unlink) {
    const int c = component_count(word);
    rec.braid_index.lower = c;
    rec.braid_index.upper = c;
    rec.braid_index.lower_certificate = "MFW from HOMFLY";
    rec.braid_index.upper_certificate = "trivializing move sequence";
    rec.minimal_writhe = 0;
    rec.representative = BraidWord(c, {});
    rec.status = VerificationStatus::Verified;
    rec.notes.push_back("unlink: amphicheiral equality case");
    return rec;
  }
  if (u.status == UnlinkStatus::Unknown) return rec;

  const MinimalRepresentatives reps = minimal(rec, word, budget);
  if (!reps.certified) {
    rec.notes.push_back("minimal braid index not certified");
    return rec;
  }
  for (const BraidWord& rep : reps.words) {
    if (writhe(rep) <= 0) {
      throw TheoremViolation("certified-minimal representative [" + rep.to_string() +
                             "] of a non-unlink has writhe " + std::to_string(writhe(rep)) + "; " + dump(q));
    }
    const QPSearchResult r = qp_search(mirror(rep), budget);
    rec.nodes_used += r.nodes_used;
    if (r.status != QPStatus::NotQuasipositive || r.reason != NotQPReason::NegativeWrithe) {
      throw TheoremViolation("mirror of [" + rep.to_string() + "] not excluded by the writhe obstruction; " +
                             dump(q));
    }
  }
  rec.representative = reps.words.front();
  rec.status = VerificationStatus::Verified;
  return rec;
}

VerificationRecord verify_property_transport(const QPFactorization& q, const BraidPredicate& property,
                                             const SearchBudget& budget, std::uint64_t seed, int spot_checks) {
  VerificationRecord rec = start(Statement::PropertyTransport, q);
  const BraidWord word = expand(q);
  rec.max_self_linking = qp_self_linking(q);
  if (!property(word)) {
    rec.notes.push_back("input does not satisfy the property");
    return rec;
  }
  Rng rng(seed);
  for (int i = 0; i < spot_checks; ++i) {
    const BraidWord moved = random_transverse_move(word, rng, budget.max_strands);
    if (!property(moved)) {
      throw InvalidInput("property is not invariant: fails on [" + moved.to_string() + "] on " +
                         std::to_string(moved.strands()) + " strands");
    }
  }
  const MinimalRepresentatives reps = minimal(rec, word, budget);
  if (!reps.certified) {
    rec.notes.push_back("minimal braid index not certified");
    return rec;
  }
  for (const BraidWord& rep : candidates(reps)) {
    if (property(rep)) {
      rec.representative = rep;
      rec.status = VerificationStatus::Verified;
      return rec;
    }
  }
  rec.notes.push_back("no minimal representative found satisfying the property");
  return rec;
}

VerificationRecord verify(Statement statement, const QPFactorization& q, const SearchBudget& budget) {
  switch (statement) {
    case Statement::ThmMain: return verify_thm_main(q, budget);
    case Statement::ThmSlBound: return verify_sl_bound(q, budget);
    case Statement::CorChirality: return verify_chirality(q, budget);
    case Statement::PropertyTransport:
      return verify_property_transport(
          q,
          [&budget](const BraidWord& w) {
            return qp_search(w, budget, budget.max_conjugator_length).status == QPStatus::Certificate;
          },
          budget, 1, 4);
  }
  throw InvalidInput("unknown statement");
}

}  // namespace quasibraid
