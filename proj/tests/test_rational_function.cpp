#include "doctest.h"

#include "kgroth/rational_function.hpp"

using namespace kgroth;

namespace {

LaurentPolynomial var_poly(const Variable& v) { return LaurentPolynomial::variable(v); }

}  // namespace

TEST_CASE("construction and denominator product") {
  auto a = var_poly(alpha(1));
  RationalFunction f(LaurentPolynomial(Rational(3)),
                     {LaurentPolynomial(Rational(1)), one_minus(a)});
  CHECK(f.den_factors().size() == 1);
  CHECK(f.den().to_string() == "-a1 + 1");

  CHECK_THROWS_AS(RationalFunction(a, {LaurentPolynomial()}), Error);
}

TEST_CASE("arithmetic and cross-multiplied equality") {
  auto a = var_poly(alpha(1));
  auto one = LaurentPolynomial(Rational(1));

  RationalFunction f(one, {one - a});
  RationalFunction g(one, {one + a});
  RationalFunction sum = f + g;
  RationalFunction expect(LaurentPolynomial(Rational(2)), {one - a * a});
  CHECK(sum.equals(expect));
  CHECK_FALSE(sum.equals(f));

  RationalFunction quot(a * a - one, {a - one});
  CHECK(quot.equals(RationalFunction(a + one)));

  CHECK((f - f).is_zero());
  CHECK((f * g).equals(RationalFunction(one, {one - a * a})));
  CHECK(f.reciprocal().equals(RationalFunction(one - a)));
  CHECK_THROWS_AS(RationalFunction().reciprocal(), Error);
}

TEST_CASE("light normalization folds constants and monomials") {
  auto a = var_poly(alpha(1));
  auto b = var_poly(beta(1));

  RationalFunction f(a * b, {a});
  auto p = f.light_normalized().as_polynomial();
  REQUIRE(p.has_value());
  CHECK(p->to_string() == "b1");

  RationalFunction g(b, {LaurentPolynomial(Rational(2))});
  auto q = g.light_normalized().as_polynomial();
  REQUIRE(q.has_value());
  CHECK(q->to_string() == "1/2*b1");
}

TEST_CASE("full normalization cancels gcd") {
  auto a = var_poly(alpha(1));
  auto b = var_poly(beta(1));
  auto one = LaurentPolynomial(Rational(1));

  RationalFunction f(a * a - b * b, {a - b});
  auto p = f.normalized().as_polynomial();
  REQUIRE(p.has_value());
  CHECK(*p == a + b);

  RationalFunction g((a - b) * (a + b), {(a - b) * (a + b)});
  auto q = g.normalized().as_polynomial();
  REQUIRE(q.has_value());
  CHECK(q->is_one());

  RationalFunction h(one, {a - b});
  auto r = h.normalized();
  CHECK(r.den_factors().size() == 1);
  CHECK(!r.as_polynomial().has_value());
}

TEST_CASE("laurent gcd") {
  auto a = var_poly(alpha(1));
  auto b = var_poly(beta(1));

  auto g1 = laurent_gcd((a - b) * (a + b), (a + b) * (a + b));
  CHECK(g1 == a + b);

  auto g2 = laurent_gcd(a + LaurentPolynomial(Rational(1)), b);
  CHECK(g2.is_one());

  auto g3 = laurent_gcd((a * a - b * b) * (a - b), (a - b).pow(2));
  CHECK(g3 == (a - b).pow(2));
}

TEST_CASE("substitution and evaluation guard vanishing denominators") {
  auto a = var_poly(alpha(1));
  auto one = LaurentPolynomial(Rational(1));
  RationalFunction f(one, {one - a});

  SubstMap kill;
  kill.emplace(var_id(alpha(1)), Subst{Rational(1), Monomial{}});
  CHECK_THROWS_AS(f.substituted(kill), Error);

  SubstMap shift;
  shift.emplace(var_id(alpha(1)), Subst{Rational(1), Monomial{{VarExp{var_id(beta(1)), 1}}}});
  auto g = f.substituted(shift);
  CHECK(g.equals(RationalFunction(one, {one - var_poly(beta(1))})));

  std::unordered_map<VarId, Rational> at;
  at.emplace(var_id(alpha(1)), Rational(3));
  CHECK(f.evaluated(at) == Rational(-1) / 2);
}

TEST_CASE("scalar multiple") {
  auto a = var_poly(alpha(1));
  RationalFunction f(a, {one_minus(a)});
  auto g = Rational(-2) * f;
  CHECK(g.equals(f + f - f - f - f - f));
  CHECK((Rational(0) * f).is_zero());
}
