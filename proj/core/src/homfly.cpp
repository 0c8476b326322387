#include "quasibraid/homfly.hpp"

#include <cstdlib>
#include <optional>

#include "quasibraid/error.hpp"

namespace quasibraid {

namespace {

// Index of the first crossing a descending traversal meets from below.
std::optional<std::size_t> first_ascending_crossing(const BraidWord& word) {
  const int n = word.strands();
  const auto& letters = word.letters();
  std::vector<bool> crossing_seen(letters.size(), false);
  std::vector<bool> slot_done(static_cast<std::size_t>(n), false);

  for (int base = 0; base < n; ++base) {
    if (slot_done[static_cast<std::size_t>(base)]) continue;
    int slot = base;
    do {
      slot_done[static_cast<std::size_t>(slot)] = true;
      for (std::size_t t = 0; t < letters.size(); ++t) {
        const Letter e = letters[t];
        const int left = std::abs(e) - 1;
        if (slot != left && slot != left + 1) continue;
        const bool from_left = slot == left;
        // sigma_i: the strand coming from the left slot passes over.
        const bool over = from_left == (e > 0);
        if (!crossing_seen[t]) {
          crossing_seen[t] = true;
          if (!over) return t;
        }
        slot = from_left ? left + 1 : left;
      }
    } while (slot != base);
  }
  return std::nullopt;
}

}  // namespace

HomflyCalculator::HomflyCalculator(std::size_t max_evaluations, std::size_t max_memo)
    : max_evaluations_(max_evaluations), max_memo_(max_memo) {}

HomflyPolynomial HomflyCalculator::operator()(const BraidWord& word) {
  std::size_t evaluations = 0;
  return evaluate(word, evaluations);
}

std::size_t HomflyCalculator::memo_size() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

void HomflyCalculator::clear() {
  std::lock_guard lock(mutex_);
  memo_.clear();
}

HomflyPolynomial HomflyCalculator::evaluate(BraidWord word, std::size_t& evaluations) {
  for (;;) {
    word = cyclic_reduce(word);
    const int n = word.strands();
    if (n == 1) return HomflyPolynomial::one();

    for (int i = 1; i < n; ++i) {
      if (generator_count(word, i) != 0) continue;
      std::vector<Letter> lower;
      std::vector<Letter> upper;
      for (Letter e : word.letters()) {
        if (std::abs(e) < i) {
          lower.push_back(e);
        } else {
          upper.push_back(e > 0 ? e - i : e + i);
        }
      }
      return HomflyPolynomial::split_unknot_factor() * evaluate(BraidWord(i, std::move(lower)), evaluations) *
             evaluate(BraidWord(n - i, std::move(upper)), evaluations);
    }

    if (generator_count(word, n - 1) == 1) {
      const auto& letters = word.letters();
      std::size_t pos = 0;
      while (std::abs(letters[pos]) != n - 1) ++pos;
      std::vector<Letter> rest(letters.begin() + static_cast<std::ptrdiff_t>(pos) + 1, letters.end());
      rest.insert(rest.end(), letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(pos));
      word = BraidWord(n - 1, std::move(rest));
      continue;
    }
    if (generator_count(word, 1) == 1) {
      word = flip(word);
      continue;
    }
    break;
  }

  const CanonicalForm key = to_normal_form(word);
  {
    std::lock_guard lock(mutex_);
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
  }

  HomflyPolynomial result = resolve(word, evaluations);

  std::lock_guard lock(mutex_);
  if (memo_.size() >= max_memo_) memo_.clear();
  memo_.emplace(key, result);
  return result;
}

HomflyPolynomial HomflyCalculator::resolve(const BraidWord& word, std::size_t& evaluations) {
  if (++evaluations > max_evaluations_) {
    throw BudgetExceeded("HOMFLY evaluation budget exceeded for word [" + word.to_string() + "] on " +
                         std::to_string(word.strands()) + " strands");
  }
  const auto crossing = first_ascending_crossing(word);
  if (!crossing) return unlink_polynomial(component_count(word));

  const std::size_t t = *crossing;
  const Letter e = word.letters()[t];
  std::vector<Letter> switched = word.letters();
  switched[t] = -e;
  std::vector<Letter> smoothed = word.letters();
  smoothed.erase(smoothed.begin() + static_cast<std::ptrdiff_t>(t));

  const HomflyPolynomial p_switched = evaluate(BraidWord(word.strands(), std::move(switched)), evaluations);
  const HomflyPolynomial p_smoothed = evaluate(BraidWord(word.strands(), std::move(smoothed)), evaluations);
  if (e > 0) {
    // P(L+) = v^2 P(L-) + v z P(L0)
    return p_switched.times_monomial(1, 2, 0) + p_smoothed.times_monomial(1, 1, 1);
  }
  // P(L-) = v^{-2} P(L+) - v^{-1} z P(L0)
  return p_switched.times_monomial(1, -2, 0) + p_smoothed.times_monomial(-1, -1, 1);
}

HomflyPolynomial homfly(const BraidWord& word) {
  thread_local HomflyCalculator calculator;
  return calculator(word);
}

HomflyPolynomial unlink_polynomial(int components) {
  return HomflyPolynomial::split_unknot_factor().pow(components - 1);
}

int mfw_braid_index_lower(const HomflyPolynomial& p) {
  if (p.is_zero()) throw InvalidInput("MFW bound of the zero polynomial");
  return (p.max_v_degree() - p.min_v_degree()) / 2 + 1;
}

int morton_sl_upper(const HomflyPolynomial& p) {
  if (p.is_zero()) throw InvalidInput("Morton bound of the zero polynomial");
  return p.min_v_degree() - 1;
}

HomflyPolynomial homfly_mirror(const HomflyPolynomial& p) {
  HomflyPolynomial out;
  for (const auto& [exp, c] : p.terms()) {
    out += HomflyPolynomial::monomial(exp.second % 2 != 0 ? BigInt(-c) : c, -exp.first, exp.second);
  }
  return out;
}

}  // namespace quasibraid
