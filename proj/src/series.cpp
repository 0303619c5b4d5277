#include "kgroth/series.hpp"

#include <utility>
#include <vector>

namespace kgroth {

namespace {

// f written as v^shift * (sum_j num[j] v^j) / ((sum_j den[j] v^j) * prod(rest))
// with den[0] nonzero, num/den keys >= 0.
struct SplitForm {
  bool zero = false;
  int shift = 0;
  std::map<int, LaurentPolynomial> num;
  std::map<int, LaurentPolynomial> den;
  std::vector<LaurentPolynomial> rest;
};

SplitForm split_at_zero(const RationalFunction& f, const Variable& v) {
  SplitForm out;
  if (f.num().is_zero()) {
    out.zero = true;
    return out;
  }
  auto num_parts = f.num().collect(var_id(v));
  const int p = num_parts.begin()->first;
  for (auto& [e, c] : num_parts) out.num.emplace(e - p, std::move(c));

  LaurentPolynomial dv(Rational(1));
  for (const auto& factor : f.den_factors()) {
    if (factor.involves(var_id(v))) {
      dv = dv * factor;
    } else {
      out.rest.push_back(factor);
    }
  }
  auto den_parts = dv.collect(var_id(v));
  const int m = den_parts.begin()->first;
  for (auto& [e, c] : den_parts) out.den.emplace(e - m, std::move(c));

  out.shift = p - m;
  return out;
}

// Coefficients of the expansion for v^(shift + j), j = 0..count-1, as
// pairs (P_j, j) with the true coefficient P_j / (c0^(j+1) * prod(rest)).
std::vector<LaurentPolynomial> scaled_coefficients(const SplitForm& s, int count) {
  const LaurentPolynomial& c0 = s.den.at(0);
  std::vector<LaurentPolynomial> c0_pow;
  c0_pow.emplace_back(Rational(1));
  for (int i = 1; i < count; ++i) c0_pow.push_back(c0_pow.back() * c0);

  std::vector<LaurentPolynomial> p;
  p.reserve(static_cast<size_t>(count));
  for (int j = 0; j < count; ++j) {
    LaurentPolynomial pj;
    auto nit = s.num.find(j);
    if (nit != s.num.end()) pj = c0_pow[static_cast<size_t>(j)] * nit->second;
    for (const auto& [e, de] : s.den) {
      if (e < 1) continue;
      if (e > j) break;
      pj = pj - de * p[static_cast<size_t>(j - e)] * c0_pow[static_cast<size_t>(e - 1)];
    }
    p.push_back(std::move(pj));
  }
  return p;
}

RationalFunction assemble_coefficient(const SplitForm& s, LaurentPolynomial pj, int j) {
  std::vector<LaurentPolynomial> factors = s.rest;
  const LaurentPolynomial& c0 = s.den.at(0);
  if (!c0.is_one()) {
    for (int i = 0; i <= j; ++i) factors.push_back(c0);
  }
  return RationalFunction(std::move(pj), std::move(factors)).light_normalized();
}

}  // namespace

RationalFunction TruncatedSeries::coefficient(int exponent) const {
  auto it = coeffs.find(exponent);
  if (it != coeffs.end()) return it->second;
  return RationalFunction(LaurentPolynomial());
}

std::optional<int> TruncatedSeries::valuation() const {
  for (const auto& [e, c] : coeffs) {
    if (!c.num().is_zero()) return e;
  }
  return std::nullopt;
}

TruncatedSeries series_expand(const RationalFunction& f, const Variable& v, int order) {
  TruncatedSeries out{v, order, {}};
  SplitForm s = split_at_zero(f, v);
  if (s.zero || s.shift > order) return out;
  const int count = order - s.shift + 1;
  auto scaled = scaled_coefficients(s, count);
  for (int j = 0; j < count; ++j) {
    if (scaled[static_cast<size_t>(j)].is_zero()) continue;
    out.coeffs.emplace(s.shift + j,
                       assemble_coefficient(s, std::move(scaled[static_cast<size_t>(j)]), j));
  }
  return out;
}

RationalFunction expansion_coefficient(const RationalFunction& f, const Variable& v,
                                       int exponent) {
  SplitForm s = split_at_zero(f, v);
  if (s.zero || s.shift > exponent) return RationalFunction(LaurentPolynomial());
  const int j = exponent - s.shift;
  auto scaled = scaled_coefficients(s, j + 1);
  return assemble_coefficient(s, std::move(scaled[static_cast<size_t>(j)]), j);
}

TruncatedSeries series_exp(const TruncatedSeries& a) {
  for (const auto& [e, c] : a.coeffs) {
    if (e < 1 && !c.num().is_zero()) {
      throw Error("series_exp: input must have positive valuation");
    }
  }
  TruncatedSeries out{a.var, a.order_bound, {}};
  std::vector<RationalFunction> b;
  b.emplace_back(LaurentPolynomial(Rational(1)));
  for (int n = 1; n <= a.order_bound; ++n) {
    RationalFunction acc{LaurentPolynomial()};
    for (int k = 1; k <= n; ++k) {
      auto it = a.coeffs.find(k);
      if (it == a.coeffs.end() || it->second.num().is_zero()) continue;
      acc += (Rational(k) * it->second) * b[static_cast<size_t>(n - k)];
    }
    b.push_back((rational_of(1, n) * acc).light_normalized());
  }
  for (int n = 0; n <= a.order_bound; ++n) {
    if (!b[static_cast<size_t>(n)].num().is_zero()) out.coeffs.emplace(n, b[static_cast<size_t>(n)]);
  }
  return out;
}

}  // namespace kgroth
