#include "quasibraid/polynomial.hpp"

#include <sstream>

#include "quasibraid/error.hpp"

namespace quasibraid {

HomflyPolynomial HomflyPolynomial::monomial(const BigInt& coefficient, int v_exp, int z_exp) {
  HomflyPolynomial p;
  p.add_term({v_exp, z_exp}, coefficient);
  return p;
}

HomflyPolynomial HomflyPolynomial::split_unknot_factor() {
  return monomial(1, -1, -1) + monomial(-1, 1, -1);
}

BigInt HomflyPolynomial::coefficient(int v_exp, int z_exp) const {
  const auto it = terms_.find({v_exp, z_exp});
  return it == terms_.end() ? BigInt(0) : it->second;
}

int HomflyPolynomial::min_v_degree() const {
  if (terms_.empty()) throw InvalidInput("degree of the zero polynomial");
  return terms_.begin()->first.first;
}

int HomflyPolynomial::max_v_degree() const {
  if (terms_.empty()) throw InvalidInput("degree of the zero polynomial");
  return terms_.rbegin()->first.first;
}

void HomflyPolynomial::add_term(const Exponent& exponent, const BigInt& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

HomflyPolynomial HomflyPolynomial::times_monomial(const BigInt& coefficient, int v_exp, int z_exp) const {
  HomflyPolynomial out;
  if (coefficient == 0) return out;
  for (const auto& [exp, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), Exponent{exp.first + v_exp, exp.second + z_exp}, c * coefficient);
  return out;
}

HomflyPolynomial HomflyPolynomial::pow(int k) const {
  HomflyPolynomial out = one();
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

HomflyPolynomial& HomflyPolynomial::operator+=(const HomflyPolynomial& rhs) {
  for (const auto& [exp, c] : rhs.terms_) add_term(exp, c);
  return *this;
}

HomflyPolynomial& HomflyPolynomial::operator-=(const HomflyPolynomial& rhs) {
  for (const auto& [exp, c] : rhs.terms_) add_term(exp, -c);
  return *this;
}

HomflyPolynomial operator*(const HomflyPolynomial& lhs, const HomflyPolynomial& rhs) {
  HomflyPolynomial out;
  for (const auto& [a, ca] : lhs.terms_) {
    for (const auto& [b, cb] : rhs.terms_) out.add_term({a.first + b.first, a.second + b.second}, ca * cb);
  }
  return out;
}

std::string HomflyPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [exp, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c << "*v^" << exp.first << "*z^" << exp.second;
  }
  return out.str();
}

}  // namespace quasibraid
