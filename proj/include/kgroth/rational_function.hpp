#ifndef KGROTH_RATIONAL_FUNCTION_HPP
#define KGROTH_RATIONAL_FUNCTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "kgroth/laurent.hpp"

namespace kgroth {

// gcd in the Laurent polynomial ring, defined up to a unit (monomial times
// nonzero rational). The result is normalized to have unit leading
// coefficient and no monomial content. Primitive PRS over a recursively
// chosen main variable; fine for the small inputs normalize() sees.
LaurentPolynomial laurent_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

// Quotient of Laurent polynomials. The denominator is held as a factor list
// (den_factors) whose product is the denominator; residue extraction uses the
// factor structure to split off the factors involving the active variable
// without any factorization step. Zero denominators are rejected on
// construction. Arithmetic defers all gcd work; normalized() cancels.
class RationalFunction {
public:
  RationalFunction() : num_(Rational(0)) {}
  explicit RationalFunction(LaurentPolynomial num) : num_(std::move(num)) {}
  RationalFunction(LaurentPolynomial num, std::vector<LaurentPolynomial> den_factors);

  static RationalFunction constant(const Rational& c) {
    return RationalFunction(LaurentPolynomial(c));
  }

  const LaurentPolynomial& num() const { return num_; }
  const std::vector<LaurentPolynomial>& den_factors() const { return den_factors_; }
  LaurentPolynomial den() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_factors_.empty(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  friend RationalFunction operator*(const Rational& c, const RationalFunction& f);
  RationalFunction reciprocal() const;

  // Exact equality as rational functions, by cross multiplication; no
  // normalization required first.
  bool equals(const RationalFunction& o) const;

  RationalFunction substituted(const SubstMap& map) const;
  Rational evaluated(const std::unordered_map<VarId, Rational>& values) const;

  bool involves(VarId id) const;

  // Cheap cleanup: drop unit factors, cancel factors that divide the
  // numerator exactly when they are monomials, and pull monomial content out
  // of the denominator. Never runs a polynomial gcd.
  RationalFunction light_normalized() const;

  // Full normalization: cancel gcd(num, den), clear denominator monomial
  // content, scale the denominator's leading coefficient to 1. The result
  // carries a single denominator factor (or none when the denominator and
  // the cancellation leave a unit).
  RationalFunction normalized() const;

  // The polynomial this value equals, if the denominator cancels completely.
  std::optional<LaurentPolynomial> as_polynomial() const;

  std::string to_string() const;

private:
  LaurentPolynomial num_;
  std::vector<LaurentPolynomial> den_factors_;
};

}  // namespace kgroth

#endif
