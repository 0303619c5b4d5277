#include "doctest.h"

#include "kgroth/laurent.hpp"

using namespace kgroth;

namespace {

LaurentPolynomial lv(const Variable& v, int e = 1) { return LaurentPolynomial::variable(v, e); }

}  // namespace

TEST_CASE("monomial ordering and arithmetic") {
  Monomial a = make_monomial({{alpha(1), 2}});
  Monomial b = make_monomial({{alpha(1), 1}, {beta(1), 1}});
  // Higher a1 exponent renders first.
  CHECK(compare_monomials(a, b) == -1);
  CHECK(compare_monomials(b, a) == 1);
  CHECK(compare_monomials(a, a) == 0);

  Monomial unit;
  Monomial neg = make_monomial({{alpha(1), -1}});
  CHECK(compare_monomials(unit, neg) == -1);  // 0 > -1 on a1

  CHECK(mul_monomials(a, neg) == make_monomial({{alpha(1), 1}}));
  CHECK(div_monomials(b, b).is_unit());
  CHECK(pow_monomial(b, -2) == make_monomial({{alpha(1), -2}, {beta(1), -2}}));
}

TEST_CASE("polynomial arithmetic basics") {
  LaurentPolynomial p = lv(alpha(1)) + LaurentPolynomial(Rational(1));
  LaurentPolynomial q = lv(alpha(1)) - LaurentPolynomial(Rational(1));
  LaurentPolynomial prod = p * q;
  LaurentPolynomial expect = lv(alpha(1), 2) - LaurentPolynomial(Rational(1));
  CHECK(prod == expect);
  CHECK((p - p).is_zero());
  CHECK(p.pow(0).is_one());
  CHECK(p.pow(3) == p * p * p);

  LaurentPolynomial inv = lv(alpha(1), -1);
  CHECK((inv * lv(alpha(1))).is_one());
}

TEST_CASE("rendering matches the canonical format") {
  LaurentPolynomial one{Rational(1)};
  CHECK(one.to_string() == "1");
  CHECK(LaurentPolynomial().to_string() == "0");

  // 1 - b1*b2*a1^-1*a2^-1
  LaurentPolynomial p =
      one - LaurentPolynomial::monomial(
                make_monomial({{beta(1), 1}, {beta(2), 1}, {alpha(1), -1}, {alpha(2), -1}}),
                Rational(1));
  CHECK(p.to_string() == "1 - b1*b2*a1^-1*a2^-1");

  LaurentPolynomial q = one - lv(beta(1)) * lv(alpha(1), -1);
  CHECK(q.to_string() == "1 - b1*a1^-1");

  LaurentPolynomial c = LaurentPolynomial(rational_of(3, 2)) * lv(alpha(1)) -
                        LaurentPolynomial(Rational(2));
  CHECK(c.to_string() == "3/2*a1 - 2");

  LaurentPolynomial neg = -lv(alpha(1));
  CHECK(neg.to_string() == "-a1");
}

TEST_CASE("substitution and evaluation") {
  // f = 1 - b1/a1
  LaurentPolynomial f = LaurentPolynomial(Rational(1)) - lv(beta(1)) * lv(alpha(1), -1);
  SUBCASE("numeric") {
    SubstMap m;
    m.emplace(var_id(beta(1)), Subst{Rational(1), Monomial{}});
    LaurentPolynomial g = f.substituted(m);
    CHECK(g == LaurentPolynomial(Rational(1)) - lv(alpha(1), -1));
  }
  SUBCASE("inversion") {
    SubstMap m;
    m.emplace(var_id(alpha(1)), Subst{Rational(1), make_monomial({{epsilon(1), -1}})});
    LaurentPolynomial g = f.substituted(m);
    CHECK(g == LaurentPolynomial(Rational(1)) - lv(beta(1)) * lv(epsilon(1)));
  }
  SUBCASE("swap is simultaneous") {
    SubstMap m;
    m.emplace(var_id(alpha(1)), Subst{Rational(1), make_monomial({{alpha(2), 1}})});
    m.emplace(var_id(alpha(2)), Subst{Rational(1), make_monomial({{alpha(1), 1}})});
    LaurentPolynomial p = lv(alpha(1), 2) + lv(alpha(2), 3);
    CHECK(p.substituted(m) == lv(alpha(2), 2) + lv(alpha(1), 3));
  }
  SUBCASE("evaluation") {
    std::unordered_map<VarId, Rational> vals;
    vals[var_id(alpha(1))] = rational_of(2);
    vals[var_id(beta(1))] = rational_of(3);
    CHECK(f.evaluated(vals) == rational_of(-1, 2));
  }
}

TEST_CASE("collect and assemble round-trip") {
  LaurentPolynomial f = lv(zvar(1), -1) * lv(alpha(1)) + lv(zvar(1), 2) +
                        LaurentPolynomial(Rational(5)) + lv(beta(1));
  auto parts = f.collect(var_id(zvar(1)));
  CHECK(parts.size() == 3);
  CHECK(parts.at(-1) == lv(alpha(1)));
  CHECK(parts.at(0) == LaurentPolynomial(Rational(5)) + lv(beta(1)));
  CHECK(parts.at(2).is_one());
  CHECK(LaurentPolynomial::assemble(var_id(zvar(1)), parts) == f);
  CHECK(f.min_exponent(var_id(zvar(1))) == -1);
  CHECK(f.max_exponent(var_id(zvar(1))) == 2);
}

TEST_CASE("exact division") {
  LaurentPolynomial a1 = lv(alpha(1)), a2 = lv(alpha(2));
  LaurentPolynomial num = a1 * a1 - a2 * a2;
  auto q = num.divided_exactly_by(a1 - a2);
  REQUIRE(q.has_value());
  CHECK(*q == a1 + a2);

  auto fail = (a1 * a1 + a2).divided_exactly_by(a1 - a2);
  CHECK(!fail.has_value());

  // Monomial divisor in the Laurent ring.
  auto m = (a1 * a2 + a1).divided_exactly_by(a1);
  REQUIRE(m.has_value());
  CHECK(*m == a2 + LaurentPolynomial(Rational(1)));

  // Laurent divisor with negative exponents.
  LaurentPolynomial f = LaurentPolynomial(Rational(1)) - lv(alpha(1), -2);
  LaurentPolynomial g = LaurentPolynomial(Rational(1)) - lv(alpha(1), -1);
  auto h = f.divided_exactly_by(g);
  REQUIRE(h.has_value());
  CHECK(*h == LaurentPolynomial(Rational(1)) + lv(alpha(1), -1));
}

TEST_CASE("monomial content") {
  LaurentPolynomial f = lv(alpha(1), 2) * lv(beta(1), -1) + lv(alpha(1), 3);
  Monomial c = f.monomial_content();
  CHECK(c == make_monomial({{alpha(1), 2}, {beta(1), -1}}));
  LaurentPolynomial g = lv(alpha(1)) + lv(beta(1));
  CHECK(g.monomial_content().is_unit());
}
