#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>

namespace quasibraid {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse integer Laurent polynomial in v and z. Zero coefficients are never stored.
class HomflyPolynomial {
public:
  /// (v-exponent, z-exponent)
  using Exponent = std::pair<int, int>;
  using TermMap = std::map<Exponent, BigInt>;

  HomflyPolynomial() = default;

  static HomflyPolynomial one() { return monomial(1, 0, 0); }
  static HomflyPolynomial monomial(const BigInt& coefficient, int v_exp, int z_exp);
  /// (v^{-1} - v) z^{-1}: the factor contributed by each extra split unknot.
  static HomflyPolynomial split_unknot_factor();

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of v^a z^b (zero if absent).
  BigInt coefficient(int v_exp, int z_exp) const;

  /// Smallest and largest v-exponents. Throws InvalidInput on the zero polynomial.
  int min_v_degree() const;
  int max_v_degree() const;

  /// Multiplies by c * v^a * z^b.
  HomflyPolynomial times_monomial(const BigInt& coefficient, int v_exp, int z_exp) const;
  HomflyPolynomial pow(int k) const;

  HomflyPolynomial& operator+=(const HomflyPolynomial& rhs);
  HomflyPolynomial& operator-=(const HomflyPolynomial& rhs);
  friend HomflyPolynomial operator+(HomflyPolynomial lhs, const HomflyPolynomial& rhs) { return lhs += rhs; }
  friend HomflyPolynomial operator-(HomflyPolynomial lhs, const HomflyPolynomial& rhs) { return lhs -= rhs; }
  friend HomflyPolynomial operator*(const HomflyPolynomial& lhs, const HomflyPolynomial& rhs);
  friend bool operator==(const HomflyPolynomial&, const HomflyPolynomial&) = default;

  /// `c*v^a*z^b` terms sorted by (a, b), joined by " + "; "0" for the zero polynomial.
  std::string to_string() const;

private:
  void add_term(const Exponent& exponent, const BigInt& coefficient);
  TermMap terms_;
};

}  // namespace quasibraid
