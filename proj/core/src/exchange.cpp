#include <unordered_map>

#include "quasibraid/error.hpp"
#include "quasibraid/garside.hpp"
#include "quasibraid/moves.hpp"

namespace quasibraid {

// No conjugator template valid for every alpha, gamma turned up, so the
// decomposition is searched per instance: find c in B_{n+1} and c3 in B_n with
//
//     c (beta sigma_n) c^{-1} = (c3^{-1} E c3) sigma_n,   E = exchange_move(beta),
//
// which gives stabilize(+), conjugate(c), rewrite, destabilize(+) ending at
// c3^{-1} E c3, and a final conjugation by c3 lands on E itself.
std::optional<ExchangeComposite> exchange_as_composite(const BraidWord& word, int max_conjugator_length) {
  if (!is_exchange_form(word)) {
    throw MovePreconditionError("exchange_as_composite: word [" + word.to_string() + "] is not in exchange form");
  }
  const int n = word.strands();
  const BraidWord exchanged = exchange_move(word);
  const BraidWord stabilized = stabilize(word, 1);

  std::unordered_map<CanonicalForm, BraidWord, CanonicalFormHash> targets;
  for (const BraidWord& c3 : reduced_words_up_to(n, max_conjugator_length)) {
    const BraidWord endpoint = free_reduce(conjugate(exchanged, c3.inverse()));
    targets.try_emplace(to_normal_form(stabilize(endpoint, 1)), c3);
  }

  for (const BraidWord& c : reduced_words_up_to(n + 1, max_conjugator_length)) {
    const auto it = targets.find(to_normal_form(conjugate(stabilized, c)));
    if (it == targets.end()) continue;
    const BraidWord& c3 = it->second;
    const BraidWord endpoint = free_reduce(conjugate(exchanged, c3.inverse()));
    ExchangeComposite out;
    out.sequence.initial = word;
    out.sequence.steps = {step::Stabilize{1}, step::Conjugate{c}, step::Rewrite{stabilize(endpoint, 1)},
                          step::Destabilize{1}, step::Conjugate{c3}};
    out.witness = BraidWord(n, {});
    return out;
  }
  return std::nullopt;
}

}  // namespace quasibraid
