#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quasibraid/permutation.hpp"

namespace quasibraid {

/// A signed generator index: e > 0 is sigma_e, e < 0 is sigma_{-e}^{-1}. Zero is never valid.
using Letter = int;

/// A word in the braid group B_n with an explicit strand count.
///
/// Words are read left to right. The strand count is never inferred from the
/// letters, so a word on more strands than it touches is legal (its closure
/// has split unknotted components).
class BraidWord {
public:
  /// The empty word on one strand.
  BraidWord() = default;
  /// Throws InvalidInput if strands < 1 or any letter is out of range.
  BraidWord(int strands, std::vector<Letter> letters = {});

  int strands() const { return strands_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// c^{-1}: reversed, every sign flipped.
  BraidWord inverse() const;
  /// Concatenation; strand counts must agree.
  BraidWord operator*(const BraidWord& rhs) const;

  /// Whitespace separated letters, "" for the empty word.
  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
  friend auto operator<=>(const BraidWord&, const BraidWord&) = default;

private:
  int strands_ = 1;
  std::vector<Letter> letters_;
};

/// Parses whitespace separated nonzero integers. Rejects malformed tokens and
/// letters with |e| >= strands.
BraidWord parse_braid(std::string_view text, int strands);

/// Exponent sum.
int writhe(const BraidWord& word);

/// Image of the word in the symmetric group: the product s_{|e1|} * s_{|e2|} * ...
/// of adjacent transpositions. Under this convention sigma_1 sigma_2 maps 1->2->3->1.
Permutation underlying_permutation(const BraidWord& word);

/// Number of link components of the closure.
int component_count(const BraidWord& word);

/// Every letter's sign flipped; the closure is the mirror link.
BraidWord mirror(const BraidWord& word);

/// Cancels adjacent pairs e, -e until none remain.
BraidWord free_reduce(const BraidWord& word);

/// Free reduction followed by cancelling matching first/last letters. The
/// result is conjugate to the input.
BraidWord cyclic_reduce(const BraidWord& word);

/// The word read starting at position k (conjugate by the length-k prefix).
BraidWord rotate(const BraidWord& word, std::size_t k);

/// Number of letters with |e| == generator.
int generator_count(const BraidWord& word, int generator);

/// Same word viewed on a different (compatible) strand count.
BraidWord with_strands(const BraidWord& word, int strands);

/// Applies sigma_i -> sigma_{n-i}: conjugation by the half twist.
BraidWord flip(const BraidWord& word);

/// Free-reduced words on `strands` strands of length <= max_length, in
/// length-lexicographic order over the alphabet 1, -1, 2, -2, ...
std::vector<BraidWord> reduced_words_up_to(int strands, int max_length);

struct BraidWordHash {
  std::size_t operator()(const BraidWord& word) const;
};

inline std::ostream& operator<<(std::ostream& os, const BraidWord& w) {
  return os << "B" << w.strands() << "[" << w.to_string() << "]";
}

}  // namespace quasibraid
