#include "kgroth/rational_function.hpp"

#include <sstream>

namespace kgroth {

RationalFunction::RationalFunction(LaurentPolynomial num,
                                   std::vector<LaurentPolynomial> den_factors)
    : num_(std::move(num)) {
  for (auto& f : den_factors) {
    if (f.is_zero()) throw Error("RationalFunction: zero denominator factor");
    if (f.is_one()) continue;
    den_factors_.push_back(std::move(f));
  }
}

LaurentPolynomial RationalFunction::den() const {
  LaurentPolynomial d{Rational(1)};
  for (const auto& f : den_factors_) d *= f;
  return d;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // Factors common to both denominators stay put; only the leftovers cross
  // multiply. Residue branch sums share most of their denominator, so this
  // keeps the factor list from doubling at every level.
  std::vector<LaurentPolynomial> common;
  std::vector<LaurentPolynomial> only_b = b.den_factors_;
  std::vector<LaurentPolynomial> only_a;
  for (const auto& f : a.den_factors_) {
    bool matched = false;
    for (std::size_t i = 0; i < only_b.size(); ++i) {
      if (only_b[i] == f) {
        common.push_back(f);
        only_b.erase(only_b.begin() + static_cast<std::ptrdiff_t>(i));
        matched = true;
        break;
      }
    }
    if (!matched) only_a.push_back(f);
  }
  LaurentPolynomial left = a.num_;
  for (const auto& f : only_b) left *= f;
  LaurentPolynomial right = b.num_;
  for (const auto& f : only_a) right *= f;
  std::vector<LaurentPolynomial> factors = std::move(common);
  factors.insert(factors.end(), only_a.begin(), only_a.end());
  factors.insert(factors.end(), only_b.begin(), only_b.end());
  return RationalFunction(left + right, std::move(factors));
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction();
  std::vector<LaurentPolynomial> factors = a.den_factors_;
  factors.insert(factors.end(), b.den_factors_.begin(), b.den_factors_.end());
  return RationalFunction(a.num_ * b.num_, std::move(factors));
}

RationalFunction operator*(const Rational& c, const RationalFunction& f) {
  if (c == 0 || f.is_zero()) return RationalFunction();
  return RationalFunction(f.num_.scaled(c), f.den_factors_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  *this = *this + o;
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  *this = *this * o;
  return *this;
}

RationalFunction RationalFunction::reciprocal() const {
  if (num_.is_zero()) throw Error("reciprocal: zero value");
  std::vector<LaurentPolynomial> factors{num_};
  LaurentPolynomial num{Rational(1)};
  for (const auto& f : den_factors_) num *= f;
  return RationalFunction(std::move(num), std::move(factors));
}

bool RationalFunction::equals(const RationalFunction& o) const {
  return num_ * o.den() == o.num_ * den();
}

RationalFunction RationalFunction::substituted(const SubstMap& map) const {
  LaurentPolynomial n = num_.substituted(map);
  std::vector<LaurentPolynomial> factors;
  factors.reserve(den_factors_.size());
  for (const auto& f : den_factors_) {
    LaurentPolynomial g = f.substituted(map);
    if (g.is_zero()) throw Error("substituted: denominator factor vanishes");
    factors.push_back(std::move(g));
  }
  return RationalFunction(std::move(n), std::move(factors));
}

Rational RationalFunction::evaluated(const std::unordered_map<VarId, Rational>& values) const {
  Rational n = num_.evaluated(values);
  Rational d(1);
  for (const auto& f : den_factors_) {
    Rational fv = f.evaluated(values);
    if (fv == 0) throw Error("evaluated: denominator vanishes at the given point");
    d *= fv;
  }
  return n / d;
}

bool RationalFunction::involves(VarId id) const {
  if (num_.involves(id)) return true;
  for (const auto& f : den_factors_)
    if (f.involves(id)) return true;
  return false;
}

RationalFunction RationalFunction::light_normalized() const {
  if (num_.is_zero()) return RationalFunction();
  LaurentPolynomial n = num_;
  std::vector<LaurentPolynomial> kept;
  Rational scale(1);
  Monomial shift;  // combined monomial pulled out of the denominator
  for (const auto& f : den_factors_) {
    if (f.is_constant()) {
      scale *= f.constant_term();
      continue;
    }
    if (f.is_monomial()) {
      const auto& t = f.terms()[0];
      scale *= t.coeff;
      shift = mul_monomials(shift, t.mono);
      continue;
    }
    // Pull the factor's monomial content out (units in the Laurent ring).
    Monomial c = f.monomial_content();
    if (!c.factors.empty()) {
      shift = mul_monomials(shift, c);
      kept.push_back(f.mono_scaled(pow_monomial(c, -1), Rational(1)));
    } else {
      kept.push_back(f);
    }
  }
  n = n.mono_scaled(pow_monomial(shift, -1), 1 / scale);
  return RationalFunction(std::move(n), std::move(kept));
}

RationalFunction RationalFunction::normalized() const {
  RationalFunction light = light_normalized();
  if (light.is_zero() || light.den_factors_.empty()) return light;
  LaurentPolynomial n = light.num_;
  LaurentPolynomial d = light.den();
  LaurentPolynomial g = laurent_gcd(n, d);
  if (!g.is_constant()) {
    auto qn = n.divided_exactly_by(g);
    auto qd = d.divided_exactly_by(g);
    if (!qn || !qd) throw Error("normalized: gcd does not divide");
    n = std::move(*qn);
    d = std::move(*qd);
  }
  Monomial c = d.monomial_content();
  if (!c.factors.empty()) {
    d = d.mono_scaled(pow_monomial(c, -1), Rational(1));
    n = n.mono_scaled(pow_monomial(c, -1), Rational(1));
  }
  if (d.is_constant()) {
    return RationalFunction(n.scaled(1 / d.constant_term()));
  }
  Rational lead = d.terms()[0].coeff;
  n = n.scaled(1 / lead);
  d = d.scaled(1 / lead);
  return RationalFunction(std::move(n), {std::move(d)});
}

std::optional<LaurentPolynomial> RationalFunction::as_polynomial() const {
  LaurentPolynomial n = num_;
  for (const auto& f : den_factors_) {
    auto q = n.divided_exactly_by(f);
    if (!q) {
      // Retry on the fully normalized form before giving up.
      RationalFunction norm = normalized();
      if (norm.den_factors_.empty()) return norm.num_;
      return std::nullopt;
    }
    n = std::move(*q);
  }
  return n;
}

std::string RationalFunction::to_string() const {
  if (den_factors_.empty()) return num_.to_string();
  std::ostringstream out;
  out << "(" << num_.to_string() << ")";
  for (const auto& f : den_factors_) out << " / (" << f.to_string() << ")";
  return out.str();
}

}  // namespace kgroth
