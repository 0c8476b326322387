#include "quasibraid/moves.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "quasibraid/error.hpp"
#include "quasibraid/garside.hpp"

namespace quasibraid {

BraidWord conjugate(const BraidWord& word, const BraidWord& c) {
  if (word.strands() != c.strands()) throw InvalidInput("conjugate: strand count mismatch");
  return c * word * c.inverse();
}

BraidWord stabilize(const BraidWord& word, int sign) {
  if (sign != 1 && sign != -1) throw InvalidInput("stabilization sign must be +1 or -1");
  std::vector<Letter> letters = word.letters();
  letters.push_back(sign * word.strands());
  return BraidWord(word.strands() + 1, std::move(letters));
}

bool can_destabilize(const BraidWord& word) {
  const BraidWord reduced = free_reduce(word);
  const int top = reduced.strands() - 1;
  return top >= 1 && !reduced.empty() && std::abs(reduced.letters().back()) == top &&
         generator_count(reduced, top) == 1;
}

Destabilization destabilize(const BraidWord& word) {
  if (!can_destabilize(word)) {
    throw MovePreconditionError("destabilize: word [" + word.to_string() + "] does not end in its only sigma_" +
                                std::to_string(word.strands() - 1) + " letter");
  }
  const BraidWord reduced = free_reduce(word);
  std::vector<Letter> letters = reduced.letters();
  const int sign = letters.back() > 0 ? 1 : -1;
  letters.pop_back();
  return {BraidWord(word.strands() - 1, std::move(letters)), sign};
}

int self_linking(const BraidWord& word) { return writhe(word) - word.strands(); }

bool cone_contains(const ConePoint& apex, const ConePoint& p) {
  const int dw = p.w - apex.w;
  const int dn = p.n - apex.n;
  return std::abs(dw) <= dn && (dw - dn) % 2 == 0;
}

std::vector<ConePoint> cone_points(const ConePoint& apex, int depth) {
  std::set<ConePoint> seen{apex};
  std::vector<ConePoint> frontier{apex};
  for (int d = 0; d < depth; ++d) {
    std::vector<ConePoint> next;
    for (const ConePoint& p : frontier) {
      for (int sign : {-1, 1}) {
        const ConePoint q{p.w + sign, p.n + 1};
        if (seen.insert(q).second) next.push_back(q);
      }
    }
    frontier = std::move(next);
  }
  std::vector<ConePoint> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const ConePoint& a, const ConePoint& b) {
    return a.n != b.n ? a.n < b.n : a.w < b.w;
  });
  return out;
}

bool jones_inequality_holds(const ConePoint& p, const ConePoint& minimal) {
  return std::abs(p.w - minimal.w) <= p.n - minimal.n;
}

bool jones_inequality_holds(const BraidWord& word, const BraidWord& minimal) {
  return jones_inequality_holds(cone_point(word), cone_point(minimal));
}

bool is_exchange_form(const BraidWord& word) {
  const int top = word.strands() - 1;
  if (top < 1 || word.empty()) return false;
  const auto& letters = word.letters();
  if (std::abs(letters.back()) != top || generator_count(word, top) != 2) return false;
  for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
    if (std::abs(letters[i]) == top) return letters[i] == -letters.back();
  }
  return false;
}

BraidWord exchange_move(const BraidWord& word) {
  if (!is_exchange_form(word)) {
    throw MovePreconditionError("exchange_move: word [" + word.to_string() + "] is not in exchange form");
  }
  const int top = word.strands() - 1;
  std::vector<Letter> letters = word.letters();
  for (Letter& e : letters) {
    if (std::abs(e) == top) e = -e;
  }
  return BraidWord(word.strands(), std::move(letters));
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::string describe(const MoveStep& s) {
  return std::visit(Overloaded{
                        [](const step::Conjugate& c) { return "conjugate [" + c.by.to_string() + "]"; },
                        [](const step::Stabilize& st) { return std::string(st.sign > 0 ? "stabilize +1" : "stabilize -1"); },
                        [](const step::Destabilize& d) {
                          return std::string(d.sign > 0 ? "destabilize +1" : d.sign < 0 ? "destabilize -1" : "destabilize");
                        },
                        [](const step::Exchange&) { return std::string("exchange"); },
                        [](const step::Rewrite& r) { return "rewrite [" + r.to.to_string() + "]"; },
                    },
                    s);
}

BraidWord apply_step(const BraidWord& word, const MoveStep& s) {
  return std::visit(Overloaded{
                        [&](const step::Conjugate& c) { return free_reduce(conjugate(word, c.by)); },
                        [&](const step::Stabilize& st) { return stabilize(word, st.sign); },
                        [&](const step::Destabilize& d) {
                          Destabilization result = destabilize(word);
                          if (d.sign != 0 && d.sign != result.sign) {
                            throw MovePreconditionError("destabilize: expected sign " + std::to_string(d.sign));
                          }
                          return result.word;
                        },
                        [&](const step::Exchange&) { return exchange_move(word); },
                        [&](const step::Rewrite& r) {
                          if (r.to.strands() != word.strands() || !words_equal(r.to, word)) {
                            throw MovePreconditionError("rewrite: [" + r.to.to_string() + "] is not equal to [" +
                                                        word.to_string() + "]");
                          }
                          return r.to;
                        },
                    },
                    s);
}

BraidWord replay(const MoveSequence& sequence) {
  BraidWord word = sequence.initial;
  for (const MoveStep& s : sequence.steps) word = apply_step(word, s);
  return word;
}

std::vector<BraidWord> replay_trace(const MoveSequence& sequence) {
  std::vector<BraidWord> trace{sequence.initial};
  for (const MoveStep& s : sequence.steps) trace.push_back(apply_step(trace.back(), s));
  return trace;
}

}  // namespace quasibraid
