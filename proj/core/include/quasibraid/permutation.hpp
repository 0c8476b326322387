#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace quasibraid {

/// A bijection of {0, ..., n-1}. Printed 1-based, in cycle notation.
///
/// Composition follows function notation: (a * b)(x) = a(b(x)).
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(int n);
  /// Throws InvalidInput unless `images` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n) { return Permutation(n); }
  /// The transposition exchanging i and i+1 (0-based i).
  static Permutation adjacent(int n, int i);
  /// x -> n-1-x; the permutation of the half twist.
  static Permutation reversal(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  int cycle_count() const;
  /// Cycles of length > 1, each starting at its smallest element, ordered by that element.
  std::vector<std::vector<int>> cycles() const;
  /// One-line cycle notation, 1-based, e.g. "(1 2 3)" or "()" for the identity.
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  std::size_t hash() const;

private:
  std::vector<int> images_;
};

}  // namespace quasibraid
