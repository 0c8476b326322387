#include "quasibraid/permutation.hpp"

#include <numeric>
#include <sstream>

#include "quasibraid/error.hpp"

namespace quasibraid {

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(n < 0 ? 0 : n)) {
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int image : images_) {
    if (image < 0 || image >= size() || seen[static_cast<std::size_t>(image)]) {
      throw InvalidInput("permutation images are not a bijection");
    }
    seen[static_cast<std::size_t>(image)] = true;
  }
}

Permutation Permutation::adjacent(int n, int i) {
  Permutation p(n);
  std::swap(p.images_[static_cast<std::size_t>(i)], p.images_[static_cast<std::size_t>(i + 1)]);
  return p;
}

Permutation Permutation::reversal(int n) {
  Permutation p(n);
  for (int x = 0; x < n; ++x) p.images_[static_cast<std::size_t>(x)] = n - 1 - x;
  return p;
}

Permutation Permutation::inverse() const {
  Permutation inv(size());
  for (int x = 0; x < size(); ++x) inv.images_[static_cast<std::size_t>((*this)(x))] = x;
  return inv;
}

bool Permutation::is_identity() const {
  for (int x = 0; x < size(); ++x) {
    if ((*this)(x) != x) return false;
  }
  return true;
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(images_.size(), false);
  int count = 0;
  for (int start = 0; start < size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++count;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x)] = true;
    }
  }
  return count;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < size(); ++start) {
    if (seen[static_cast<std::size_t>(start)] || (*this)(start) == start) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& cycle : cs) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out << ' ';
      out << cycle[i] + 1;
    }
    out << ')';
  }
  return out.str();
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  Permutation out(a.size());
  for (int x = 0; x < a.size(); ++x) out.images_[static_cast<std::size_t>(x)] = a(b(x));
  return out;
}

std::size_t Permutation::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (int x : images_) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
  return h;
}

}  // namespace quasibraid
