#pragma once

// Every product of k bands w s_j w^{-1} with |w| <= l, listed by brute force.
// Products are compared by the library's normal form, which the relation
// oracle checks separately.

#include <set>
#include <vector>

#include "quasibraid/braid_word.hpp"
#include "quasibraid/garside.hpp"

namespace oracle {

/// All words (reduced or not) of length <= max_length on n strands.
inline std::vector<quasibraid::BraidWord> all_words(int strands, int max_length) {
  std::vector<quasibraid::BraidWord> out{quasibraid::BraidWord(strands, {})};
  std::vector<std::vector<int>> layer{{}};
  for (int len = 1; len <= max_length && strands > 1; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : layer) {
      for (int g = 1; g < strands; ++g) {
        for (int x : {g, -g}) {
          auto v = w;
          v.push_back(x);
          out.emplace_back(strands, v);
          next.push_back(std::move(v));
        }
      }
    }
    layer = std::move(next);
  }
  return out;
}

using FormSet = std::set<quasibraid::CanonicalForm>;

/// Normal forms of all k-band products with conjugator length <= l.
inline FormSet qp_products(int strands, int bands, int conjugator_length) {
  std::vector<quasibraid::BraidWord> band_words;
  for (const auto& w : all_words(strands, conjugator_length)) {
    for (int j = 1; j < strands; ++j) band_words.push_back(w * quasibraid::BraidWord(strands, {j}) * w.inverse());
  }
  std::vector<quasibraid::BraidWord> products{quasibraid::BraidWord(strands, {})};
  for (int i = 0; i < bands; ++i) {
    std::vector<quasibraid::BraidWord> next;
    for (const auto& p : products) {
      for (const auto& b : band_words) next.push_back(p * b);
    }
    products = std::move(next);
  }
  FormSet out;
  for (const auto& p : products) out.insert(quasibraid::to_normal_form(p));
  return out;
}

}  // namespace oracle
