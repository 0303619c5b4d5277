#ifndef KGROTH_LAURENT_HPP
#define KGROTH_LAURENT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kgroth/rational.hpp"
#include "kgroth/variable.hpp"

namespace kgroth {

struct VarExp {
  VarId id;
  int exp;  // never 0 in a stored monomial

  friend bool operator==(const VarExp& a, const VarExp& b) {
    return a.id == b.id && a.exp == b.exp;
  }
};

// Sparse exponent vector, entries sorted by variable id, zero exponents
// dropped. Exponents may be negative.
struct Monomial {
  std::vector<VarExp> factors;

  bool is_unit() const { return factors.empty(); }
  int exponent_of(VarId id) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors == b.factors;
  }
};

// Canonical term order: scan variables in ascending (family, index) order and
// order by the first differing exponent, larger exponent first. This is a
// multiplicative total order, so it doubles as the division order.
int compare_monomials(const Monomial& a, const Monomial& b);  // -1: a first

Monomial mul_monomials(const Monomial& a, const Monomial& b);
Monomial pow_monomial(const Monomial& a, int e);
// a / b; exponents may go negative (Laurent monomials are invertible).
Monomial div_monomials(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

struct Term {
  Monomial mono;
  Rational coeff;

  friend bool operator==(const Term& a, const Term& b) {
    return a.mono == b.mono && a.coeff == b.coeff;
  }
};

// Substitution target: variable |-> coeff * monomial. A pure numeric
// substitution has an empty monomial; variable renamings and inversions use
// coeff 1 with a one-entry monomial.
struct Subst {
  Rational coeff;
  Monomial mono;
};
using SubstMap = std::unordered_map<VarId, Subst>;

// Sparse multivariate Laurent polynomial with exact rational coefficients.
// Terms are kept sorted in the canonical order with no zero coefficients,
// so equality is plain term-list equality.
class LaurentPolynomial {
public:
  LaurentPolynomial() = default;
  explicit LaurentPolynomial(const Rational& c);
  static LaurentPolynomial variable(const Variable& v, int exp = 1);
  static LaurentPolynomial monomial(const Monomial& m, const Rational& c);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  // Nonzero constant times a single monomial?
  bool is_monomial() const { return terms_.size() == 1; }

  // Constant term (coefficient of the unit monomial).
  Rational constant_term() const;
  Rational coefficient_of(const Monomial& m) const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    a += b;
    return a;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
    a -= b;
    return a;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return !(a == b);
  }

  LaurentPolynomial scaled(const Rational& c) const;
  LaurentPolynomial mono_scaled(const Monomial& m, const Rational& c) const;
  LaurentPolynomial pow(int e) const;  // e >= 0

  // Simultaneous substitution; variables not in the map are untouched.
  // Throws if a variable with a negative exponent is mapped to coeff 0.
  LaurentPolynomial substituted(const SubstMap& map) const;
  LaurentPolynomial substituted(const Variable& v, const Subst& s) const;

  // Full numeric evaluation; every variable present must be mapped.
  Rational evaluated(const std::unordered_map<VarId, Rational>& values) const;

  bool involves(VarId id) const;
  std::vector<VarId> variables() const;

  // View as a univariate Laurent polynomial in v: exponent -> coefficient.
  std::map<int, LaurentPolynomial> collect(VarId v) const;
  static LaurentPolynomial assemble(VarId v, const std::map<int, LaurentPolynomial>& parts);
  int min_exponent(VarId v) const;  // throws on zero polynomial
  int max_exponent(VarId v) const;

  // Greatest monomial m with m | every term (componentwise min exponents).
  Monomial monomial_content() const;

  // Exact division: returns the quotient when divisor divides exactly,
  // nullopt otherwise. Works in the Laurent ring (monomials are units).
  std::optional<LaurentPolynomial> divided_exactly_by(const LaurentPolynomial& divisor) const;

  // Canonical text rendering, e.g. "1 - b1*b2*a1^-1*a2^-1".
  std::string to_string() const;

  // Takes ownership of an unsorted term list; merges and sorts.
  static LaurentPolynomial from_terms(std::vector<Term> terms);
  static LaurentPolynomial from_map(std::unordered_map<Monomial, Rational, MonomialHash>&& acc);

private:
  std::vector<Term> terms_;
};

LaurentPolynomial operator*(const Rational& c, const LaurentPolynomial& p);

// 1 +/- c*m convenience builders used all over the residue forms.
LaurentPolynomial one_minus(const Rational& c, const Monomial& m);
LaurentPolynomial one_minus(const LaurentPolynomial& p);

Monomial make_monomial(std::initializer_list<std::pair<Variable, int>> factors);

}  // namespace kgroth

#endif
