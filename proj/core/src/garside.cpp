#include "quasibraid/garside.hpp"

#include <cstdlib>

#include "quasibraid/error.hpp"

namespace quasibraid {

// Permutation braids are identified with pi = s_{e1} * ... * s_{ek} for any
// positive reduced word e1..ek, so pi(x) is the slot where the strand ending
// at x started. Products compose as pi_{AB} = pi_A * pi_B.

namespace garside {

std::vector<bool> starting_set(const Permutation& simple) {
  const Permutation inv = simple.inverse();
  std::vector<bool> out(static_cast<std::size_t>(simple.size() > 0 ? simple.size() - 1 : 0));
  for (int i = 0; i + 1 < simple.size(); ++i) out[static_cast<std::size_t>(i)] = inv(i) > inv(i + 1);
  return out;
}

std::vector<bool> finishing_set(const Permutation& simple) {
  std::vector<bool> out(static_cast<std::size_t>(simple.size() > 0 ? simple.size() - 1 : 0));
  for (int i = 0; i + 1 < simple.size(); ++i) out[static_cast<std::size_t>(i)] = simple(i) > simple(i + 1);
  return out;
}

bool is_left_weighted(const Permutation& left, const Permutation& right) {
  const auto finish = finishing_set(left);
  const auto start = starting_set(right);
  for (std::size_t i = 0; i < start.size(); ++i) {
    if (start[i] && !finish[i]) return false;
  }
  return true;
}

Permutation flip(const Permutation& simple) {
  const Permutation r = Permutation::reversal(simple.size());
  return r * simple * r;
}

BraidWord simple_to_word(const Permutation& simple) {
  std::vector<Letter> letters;
  Permutation rest = simple;
  const int n = simple.size();
  for (;;) {
    const Permutation inv = rest.inverse();
    int found = -1;
    for (int i = 0; i + 1 < n; ++i) {
      if (inv(i) > inv(i + 1)) {
        found = i;
        break;
      }
    }
    if (found < 0) break;
    letters.push_back(found + 1);
    rest = Permutation::adjacent(n, found) * rest;
  }
  return BraidWord(n, std::move(letters));
}

bool is_valid(const CanonicalForm& form) {
  const Permutation delta = Permutation::reversal(form.strands);
  for (std::size_t i = 0; i < form.factors.size(); ++i) {
    const Permutation& f = form.factors[i];
    if (f.size() != form.strands || f.is_identity() || f == delta) return false;
    if (i + 1 < form.factors.size() && !is_left_weighted(f, form.factors[i + 1])) return false;
  }
  return true;
}

}  // namespace garside

namespace {

// Moves letters of `right` into `left` until the pair is left-weighted.
// Returns true if anything moved.
bool left_weight(Permutation& left, Permutation& right) {
  const int n = left.size();
  bool changed = false;
  for (;;) {
    const auto finish = garside::finishing_set(left);
    const auto start = garside::starting_set(right);
    int move = -1;
    for (int i = 0; i + 1 < n; ++i) {
      if (start[static_cast<std::size_t>(i)] && !finish[static_cast<std::size_t>(i)]) {
        move = i;
        break;
      }
    }
    if (move < 0) return changed;
    const Permutation s = Permutation::adjacent(n, move);
    left = left * s;
    right = s * right;
    changed = true;
  }
}

void append_simple(std::vector<Permutation>& factors, Permutation simple) {
  if (simple.is_identity()) return;
  factors.push_back(std::move(simple));
  for (std::size_t i = factors.size() - 1; i > 0; --i) {
    if (!left_weight(factors[i - 1], factors[i])) break;
    if (factors[i].is_identity()) factors.erase(factors.begin() + static_cast<std::ptrdiff_t>(i));
  }
}

// Full right-to-left passes until every adjacent pair is left-weighted. The
// single pass in append_simple already suffices in theory; this is a cheap check.
void settle(std::vector<Permutation>& factors) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = factors.size(); i-- > 1;) {
      if (left_weight(factors[i - 1], factors[i])) changed = true;
    }
    std::erase_if(factors, [](const Permutation& p) { return p.is_identity(); });
  }
}

BraidWord delta_word(int n) {
  std::vector<Letter> letters;
  for (int top = n - 1; top >= 1; --top) {
    for (int i = 1; i <= top; ++i) letters.push_back(i);
  }
  return BraidWord(n, std::move(letters));
}

}  // namespace

CanonicalForm to_normal_form(const BraidWord& word) {
  const int n = word.strands();
  CanonicalForm form;
  form.strands = n;
  if (n == 1) return form;

  const Permutation delta = Permutation::reversal(n);
  const auto& letters = word.letters();

  // sigma_i^{-1} = Delta^{-1} (Delta sigma_i^{-1}); every Delta^{-1} is pushed to the
  // front, flipping each simple factor it passes.
  int negatives_after = 0;
  for (Letter e : letters) negatives_after += e < 0 ? 1 : 0;
  form.infimum = -negatives_after;

  std::vector<Permutation> factors;
  for (Letter e : letters) {
    const int i = std::abs(e) - 1;
    Permutation simple = Permutation::adjacent(n, i);
    if (e < 0) {
      simple = delta * simple;
      --negatives_after;
    }
    if (negatives_after % 2 != 0) simple = garside::flip(simple);
    append_simple(factors, std::move(simple));
  }
  settle(factors);

  std::size_t leading = 0;
  while (leading < factors.size() && factors[leading] == delta) ++leading;
  form.infimum += static_cast<int>(leading);
  form.factors.assign(factors.begin() + static_cast<std::ptrdiff_t>(leading), factors.end());
  return form;
}

BraidWord from_normal_form(const CanonicalForm& form) {
  const int n = form.strands;
  BraidWord out(n);
  if (form.infimum != 0) {
    const BraidWord delta = form.infimum > 0 ? delta_word(n) : delta_word(n).inverse();
    for (int k = 0; k < std::abs(form.infimum); ++k) out = out * delta;
  }
  for (const Permutation& f : form.factors) out = out * garside::simple_to_word(f);
  return out;
}

bool words_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw InvalidInput("words_equal: strand count mismatch");
  return to_normal_form(a) == to_normal_form(b);
}

bool is_positive_braid(const CanonicalForm& form) { return form.infimum >= 0; }

std::size_t CanonicalFormHash::operator()(const CanonicalForm& form) const {
  std::size_t h = static_cast<std::size_t>(form.strands) * 0x9e3779b97f4a7c15ULL;
  h ^= static_cast<std::size_t>(form.infimum + 1024) + 0x7f4a7c15 + (h << 6) + (h >> 2);
  for (const Permutation& f : form.factors) h ^= f.hash() + 0x9e3779b9 + (h << 6) + (h >> 2);
  return h;
}

}  // namespace quasibraid
