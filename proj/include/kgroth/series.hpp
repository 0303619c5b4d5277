#ifndef KGROTH_SERIES_HPP
#define KGROTH_SERIES_HPP

#include <map>

#include "kgroth/rational_function.hpp"

namespace kgroth {

// Laurent series in one variable, exact coefficients, known through an
// inclusive order bound. Absent exponents below the bound are zero.
struct TruncatedSeries {
  Variable var;
  int order_bound;
  std::map<int, RationalFunction> coeffs;

  RationalFunction coefficient(int exponent) const;
  // Smallest exponent with a nonzero coefficient; nullopt when the series is
  // zero through the bound.
  std::optional<int> valuation() const;
};

// Laurent expansion of f around var = 0 through the given order (inclusive).
// The other variables are treated as generic parameters: the expansion is the
// one valid near 0 for generic values, with denominators whose constant part
// in var is invertible.
//
// Internally solves D * S = N coefficientwise with the Horowitz-style scaling
// S_j = P_j / c0^(j+1), keeping every intermediate a Laurent polynomial.
TruncatedSeries series_expand(const RationalFunction& f, const Variable& v, int order);

// Single expansion coefficient of v^exponent of f around v = 0.
RationalFunction expansion_coefficient(const RationalFunction& f, const Variable& v,
                                       int exponent);

// exp of a series with positive valuation (no constant term), through
// a.order_bound. Uses n*b_n = sum k*a_k*b_(n-k).
TruncatedSeries series_exp(const TruncatedSeries& a);

}  // namespace kgroth

#endif
