#pragma once

// Random Markov and exchange move sequences, checking after every move that
// HOMFLY is unchanged and that self-linking changes exactly as each move
// dictates.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "quasibraid/homfly.hpp"
#include "quasibraid/moves.hpp"
#include "support/generators.hpp"

namespace testing_support {

enum MoveKind { kConjugate, kStabilizePlus, kStabilizeMinus, kDestabilize, kExchange, kMoveKinds };

struct MoveSuiteResult {
  int sequences = 0;
  int failures = 0;
  std::array<int, kMoveKinds> applied{};
  std::vector<std::string> messages;
};

struct MoveSuiteOptions {
  int sequences = 1000;
  int max_moves = 4;
  int max_strands = 4;
  int max_word_length = 12;
  int max_conjugator_length = 2;
  std::uint64_t seed = 2024;
};

inline MoveSuiteResult run_move_suite(const MoveSuiteOptions& opt) {
  using namespace quasibraid;
  MoveSuiteResult out;
  Rng rng(opt.seed);
  auto fail = [&](const std::string& what, const BraidWord& a, const BraidWord& b) {
    ++out.failures;
    if (out.messages.size() < 10) {
      out.messages.push_back(what + ": [" + a.to_string() + "]/" + std::to_string(a.strands()) + " -> [" +
                             b.to_string() + "]/" + std::to_string(b.strands()));
    }
  };
  for (int s = 0; s < opt.sequences; ++s) {
    ++out.sequences;
    const int n = rng.between(1, opt.max_strands);
    BraidWord cur = n >= 2 && rng.below(2) ? random_exchange_form(rng, n, (opt.max_word_length - 2) / 2)
                                           : random_word(rng, n, opt.max_word_length);
    HomflyPolynomial p = homfly(cur);
    const int moves = rng.between(1, opt.max_moves);
    for (int m = 0; m < moves; ++m) {
      BraidWord next = cur;
      int expected_sl_shift = 0;
      MoveKind kind = static_cast<MoveKind>(rng.below(kMoveKinds));
      if (kind == kExchange && !is_exchange_form(cur)) kind = kConjugate;
      if (kind == kDestabilize) {
        bool found = false;
        for (std::size_t r = 0; r < std::max<std::size_t>(cur.length(), 1) && !found; ++r) {
          const BraidWord rotated = free_reduce(rotate(cur, r));
          if (can_destabilize(rotated)) {
            const Destabilization d = destabilize(rotated);
            next = d.word;
            expected_sl_shift = d.sign > 0 ? 0 : 2;
            found = true;
          }
        }
        if (!found) kind = kStabilizePlus;
      }
      switch (kind) {
        case kConjugate: {
          const BraidWord c = random_word(rng, cur.strands(), opt.max_conjugator_length);
          next = free_reduce(conjugate(cur, c));
          break;
        }
        case kStabilizePlus: next = stabilize(cur, 1); break;
        case kStabilizeMinus:
          next = stabilize(cur, -1);
          expected_sl_shift = -2;
          break;
        case kExchange: next = exchange_move(cur); break;
        default: break;
      }
      ++out.applied[kind];
      const HomflyPolynomial q = homfly(next);
      if (q != p) fail("HOMFLY changed", cur, next);
      if (self_linking(next) - self_linking(cur) != expected_sl_shift) fail("self-linking shift", cur, next);
      cur = next;
      p = q;
    }
  }
  return out;
}

}  // namespace testing_support
