#include "quasibraid/braid_word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "quasibraid/error.hpp"

namespace quasibraid {

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw InvalidInput("strand count must be at least 1");
  for (Letter e : letters_) {
    if (e == 0 || std::abs(e) >= strands_) {
      throw InvalidInput("letter " + std::to_string(e) + " out of range for " +
                         std::to_string(strands_) + " strands");
    }
  }
}

BraidWord BraidWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (Letter& e : out) e = -e;
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
  if (strands_ != rhs.strands_) throw InvalidInput("strand count mismatch in concatenation");
  std::vector<Letter> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return BraidWord(strands_, std::move(out));
}

std::string BraidWord::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out << ' ';
    out << letters_[i];
  }
  return out.str();
}

BraidWord parse_braid(std::string_view text, int strands) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    const std::string_view token = text.substr(pos, end - pos);
    // from_chars does not accept a leading '+'.
    const std::string_view digits = token.front() == '+' ? token.substr(1) : token;
    Letter value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() || value == 0) {
      throw InvalidInput("malformed braid letter '" + std::string(token) + "'");
    }
    letters.push_back(value);
    pos = end;
  }
  return BraidWord(strands, std::move(letters));
}

int writhe(const BraidWord& word) {
  int w = 0;
  for (Letter e : word.letters()) w += e > 0 ? 1 : -1;
  return w;
}

Permutation underlying_permutation(const BraidWord& word) {
  // Right-to-left accumulation realises s_{e1} * s_{e2} * ... * s_{ek} in place.
  std::vector<int> images(static_cast<std::size_t>(word.strands()));
  for (int x = 0; x < word.strands(); ++x) images[static_cast<std::size_t>(x)] = x;
  for (Letter e : word.letters()) {
    const int i = std::abs(e) - 1;
    std::swap(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(i + 1)]);
  }
  // images[x] now holds the starting slot of the strand that ends at x, which is
  // s_{e1} * ... * s_{ek} applied to x.
  return Permutation(std::move(images));
}

int component_count(const BraidWord& word) { return underlying_permutation(word).cycle_count(); }

BraidWord mirror(const BraidWord& word) {
  std::vector<Letter> out = word.letters();
  for (Letter& e : out) e = -e;
  return BraidWord(word.strands(), std::move(out));
}

BraidWord free_reduce(const BraidWord& word) {
  std::vector<Letter> stack;
  stack.reserve(word.length());
  for (Letter e : word.letters()) {
    if (!stack.empty() && stack.back() == -e) {
      stack.pop_back();
    } else {
      stack.push_back(e);
    }
  }
  return BraidWord(word.strands(), std::move(stack));
}

BraidWord cyclic_reduce(const BraidWord& word) {
  const BraidWord reduced = free_reduce(word);
  const auto& letters = reduced.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == -letters[hi - 1]) {
    ++lo;
    --hi;
  }
  return BraidWord(word.strands(), std::vector<Letter>(letters.begin() + static_cast<std::ptrdiff_t>(lo),
                                                       letters.begin() + static_cast<std::ptrdiff_t>(hi)));
}

BraidWord rotate(const BraidWord& word, std::size_t k) {
  std::vector<Letter> out = word.letters();
  if (!out.empty()) std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k % out.size()), out.end());
  return BraidWord(word.strands(), std::move(out));
}

int generator_count(const BraidWord& word, int generator) {
  return static_cast<int>(std::count_if(word.letters().begin(), word.letters().end(),
                                        [generator](Letter e) { return std::abs(e) == generator; }));
}

BraidWord with_strands(const BraidWord& word, int strands) { return BraidWord(strands, word.letters()); }

BraidWord flip(const BraidWord& word) {
  std::vector<Letter> out = word.letters();
  for (Letter& e : out) e = e > 0 ? word.strands() - e : -(word.strands() + e);
  return BraidWord(word.strands(), std::move(out));
}

std::vector<BraidWord> reduced_words_up_to(int strands, int max_length) {
  std::vector<Letter> alphabet;
  for (int i = 1; i < strands; ++i) {
    alphabet.push_back(i);
    alphabet.push_back(-i);
  }
  std::vector<BraidWord> out{BraidWord(strands)};
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_length; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t k = level_begin; k < level_end; ++k) {
      for (Letter e : alphabet) {
        const auto& prev = out[k].letters();
        if (!prev.empty() && prev.back() == -e) continue;
        std::vector<Letter> next = prev;
        next.push_back(e);
        out.emplace_back(strands, std::move(next));
      }
    }
    level_begin = level_end;
  }
  return out;
}

std::size_t BraidWordHash::operator()(const BraidWord& word) const {
  std::size_t h = static_cast<std::size_t>(word.strands()) * 0x9e3779b97f4a7c15ULL;
  for (Letter e : word.letters()) h = (h ^ static_cast<std::size_t>(e + 64)) * 0x100000001b3ULL;
  return h;
}

}  // namespace quasibraid
