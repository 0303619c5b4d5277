#include "kgroth/thom.hpp"

#include <map>
#include <utility>
#include <vector>

#include "doctest.h"
#include "kgroth/grothendieck.hpp"

using namespace kgroth;

namespace {

GExpansion expansion_of(std::initializer_list<std::pair<IntegerSequence, long>> terms) {
  GExpansion e;
  for (const auto& [key, coeff] : terms) e.add(key, Integer(coeff));
  return e;
}

LaurentPolynomial evaluate_expansion(const GExpansion& e, int a, int b) {
  LaurentPolynomial sum;
  for (const auto& [key, coeff] : e.entries()) {
    sum += g_residue_inverted(key, a, b).scaled(Rational(coeff));
  }
  return sum;
}

}  // namespace

TEST_CASE("thom instance validation") {
  CHECK(ThomInstance(1, 1).l() == 0);
  CHECK(ThomInstance(2, 4).l() == 2);
  CHECK_THROWS_WITH_AS(ThomInstance(2, 1), doctest::Contains("malformed-input"), Error);
  CHECK_THROWS_WITH_AS(ThomInstance(0, 3), doctest::Contains("malformed-input"), Error);
}

TEST_CASE("d coefficients match the printed grid") {
  // Rows of the coefficient grid, listed as (s, first r, values).
  struct Row {
    int s;
    int r0;
    std::vector<long> values;
  };
  const std::vector<Row> grid = {
      {-1, 0, {1, -2, 1}},
      {-2, 1, {2, -5, 4, -1}},
      {-3, 2, {4, -12, 13, -6, 1}},
      {-4, 3, {8, -28, 38, -25, 8, -1}},
      {-5, 4, {16, -64, 104}},
      {-6, 5, {32}},
  };
  for (const Row& row : grid) {
    for (std::size_t i = 0; i < row.values.size(); ++i) {
      CAPTURE(row.s);
      CAPTURE(row.r0 + static_cast<int>(i));
      CHECK(d_coeff(row.r0 + static_cast<int>(i), row.s) == Integer(row.values[i]));
    }
  }
  // Support boundaries: nothing outside -r-1 <= s <= -ceil(r/2).
  CHECK(d_coeff(0, 0) == 0);
  CHECK(d_coeff(1, 0) == 0);
  CHECK(d_coeff(2, -4) == 0);
  CHECK(d_coeff(3, -1) == 0);
  CHECK(d_coeff(-1, -1) == 0);
}

TEST_CASE("d closed form agrees with the series oracle") {
  const int r_max = 10;
  CoeffTable oracle = d_oracle(r_max);
  for (int r = 0; r <= r_max; ++r) {
    for (int s = -r - 2; s <= 0; ++s) {
      CAPTURE(r);
      CAPTURE(s);
      CHECK(Rational(d_coeff(r, s)) == oracle.value_at({r, s}));
    }
  }
  // Row sums vanish for r >= 1 and the r = 0 row is the single entry 1.
  for (int r = 1; r <= r_max; ++r) {
    Integer sum(0);
    for (int s = -r - 1; s <= 0; ++s) sum += d_coeff(r, s);
    CAPTURE(r);
    CHECK(sum == 0);
  }
  CHECK(d_coeff(0, -1) == 1);
  for (int s = -6; s <= 0; ++s) {
    if (s != -1) CHECK(d_coeff(0, s) == 0);
  }
}

TEST_CASE("D coefficients collapse the tail sums") {
  CHECK(D_coeff(2, -2, 0) == -1);
  CHECK(D_coeff(3, -3, 1) == -4);
  CHECK(D_coeff(2, -2, 1) == -5);
  CHECK(D_coeff(0, -1, 0) == 1);
  CHECK_THROWS_WITH_AS(D_coeff(3, -3, 0), doctest::Contains("malformed-input"), Error);
  CHECK_THROWS_WITH_AS(D_coeff(2, -4, 1), doctest::Contains("malformed-input"), Error);
  CHECK_THROWS_WITH_AS(D_coeff(4, -1, 1), doctest::Contains("malformed-input"), Error);
  CHECK_THROWS_WITH_AS(D_coeff(-1, -2, 0), doctest::Contains("malformed-input"), Error);
}

TEST_CASE("minimal expansions reproduce the small closed forms") {
  CHECK(ktp_a2_minimal(0) == expansion_of({{{1, 1}, 1},
                                           {{2}, 2},
                                           {{2, 1}, -2},
                                           {{3}, -1},
                                           {{3, 1}, 1}}));
  CHECK(ktp_a2_minimal(1) == expansion_of({{{2, 2}, 1},
                                           {{3, 1}, 2},
                                           {{4}, 4},
                                           {{3, 2}, -2},
                                           {{4, 1}, -5},
                                           {{5}, -4},
                                           {{4, 2}, 1},
                                           {{5, 1}, 4},
                                           {{6}, 1},
                                           {{6, 1}, -1}}));
  CHECK(ktp_a2_minimal(2) == expansion_of({{{3, 3}, 1},
                                           {{4, 2}, 2},
                                           {{5, 1}, 4},
                                           {{6}, 8},
                                           {{4, 3}, -2},
                                           {{5, 2}, -5},
                                           {{6, 1}, -12},
                                           {{7}, -12},
                                           {{5, 3}, 1},
                                           {{6, 2}, 4},
                                           {{7, 1}, 13},
                                           {{8}, 6},
                                           {{7, 2}, -1},
                                           {{8, 1}, -6},
                                           {{9}, -1},
                                           {{9, 1}, 1}}));
  for (int l = 0; l <= 2; ++l) {
    CHECK(ktp_a2_minimal(l).all_partition_keys());
  }
}

TEST_CASE("stable expansion straightens to the minimal one") {
  for (int l = 0; l <= 2; ++l) {
    CAPTURE(l);
    GExpansion stable = ktp_a2_stable(l, 2 * l + 3);
    CHECK(straightened(stable) == ktp_a2_minimal(l));
  }
  // Rows beyond r = 2l+2 straighten away entirely: a larger N gives the
  // same minimal form.
  CHECK(straightened(ktp_a2_stable(0, 6)) == ktp_a2_minimal(0));
  CHECK_THROWS_WITH_AS(ktp_a2_stable(1, 4), doctest::Contains("malformed-input"), Error);
}

TEST_CASE("sigma push-forward equals the inverted G values") {
  for (auto [r, a, b] : {std::tuple{1, 1, 1}, {1, 1, 2}, {1, 2, 2}, {2, 2, 2}, {2, 2, 3}}) {
    CAPTURE(r);
    CAPTURE(a);
    CAPTURE(b);
    IntegerSequence shape(static_cast<std::size_t>(r), r + b - a);
    CHECK(ktp_sigma_r(r, ThomInstance(a, b)) == g_residue_inverted(shape, a, b));
  }
  CHECK(ktp_sigma_r(1, ThomInstance(1, 1)).to_string() == "1 - e1*b1^-1");
  CHECK_THROWS_WITH_AS(ktp_sigma_r(3, ThomInstance(2, 3)),
                       doctest::Contains("malformed-input"), Error);
}

TEST_CASE("a2 residue equals the evaluated expansions") {
  for (auto [a, b] : {std::pair{1, 1}, {1, 2}, {2, 2}, {2, 3}}) {
    CAPTURE(a);
    CAPTURE(b);
    LaurentPolynomial direct = ktp_a2(ThomInstance(a, b));
    CHECK(evaluate_expansion(ktp_a2_minimal(b - a), a, b) == direct);
    CHECK(evaluate_expansion(ktp_a2_stable(b - a, 2 * (b - a) + 3), a, b) == direct);
  }
}

TEST_CASE("a2 residue order matters") {
  ThomInstance inst(2, 2);
  LaurentPolynomial standard = ktp_a2(inst);
  LaurentPolynomial swapped = ktp_a2(inst, true);
  CHECK(standard != swapped);
}

TEST_CASE("remainder identity holds through the bound") {
  for (int N = 0; N <= 6; ++N) {
    CAPTURE(N);
    RemainderReport report = remainder_identity_check(N);
    CHECK(report.pass);
    CHECK(report.defect.empty());
  }
  CHECK_THROWS_WITH_AS(remainder_identity_check(7), doctest::Contains("malformed-input"),
                       Error);
}

TEST_CASE("sign law reports") {
  for (int l = 0; l <= 3; ++l) {
    CAPTURE(l);
    CHECK(sign_report(ktp_a2_minimal(l)).pass);
  }
  for (int l = 0; l <= 1; ++l) {
    CAPTURE(l);
    CHECK(sign_report(ktp_a2_stable(l, 2 * l + 3)).pass);
  }
  GExpansion bad = expansion_of({{{2, 2}, -1}});
  SignReport report = sign_report(bad);
  CHECK_FALSE(report.pass);
  CHECK(report.violations.size() == 1);
  GExpansion deep = expansion_of({{{3, 2, 1}, 1}});
  CHECK_THROWS_WITH_AS(sign_report(deep), doctest::Contains("malformed-input"), Error);
}

TEST_CASE("a3 residue basics") {
  LaurentPolynomial a3 = ktp_a3(ThomInstance(2, 2));
  std::map<Variable, Rational> spec{{epsilon(1), Rational(2)},
                                    {epsilon(2), Rational(-3)},
                                    {beta(1), Rational(5)},
                                    {beta(2), rational_of(7, 2)}};
  LeadingTerm lead = leading_term(a3, 3, spec);
  CHECK(lead.order == 3);
  CHECK(lead.value != 0);
  CHECK_THROWS_WITH_AS(ktp_a3(ThomInstance(2, 5)), doctest::Contains("malformed-input"),
                       Error);
}

TEST_CASE("a3 supersymmetry specialization") {
  // Setting the last domain and target roots equal must reduce the (3,3)
  // class to the (2,2) one.
  LaurentPolynomial big = ktp_a3(ThomInstance(3, 3));
  LaurentPolynomial small = ktp_a3(ThomInstance(2, 2));
  Rational e1(3), e2(-2), b1(5), b2 = rational_of(7, 3), shared = rational_of(11, 2);
  Rational lhs = big.evaluated({{var_id(epsilon(1)), e1},
                                {var_id(epsilon(2)), e2},
                                {var_id(epsilon(3)), shared},
                                {var_id(beta(1)), b1},
                                {var_id(beta(2)), b2},
                                {var_id(beta(3)), shared}});
  Rational rhs = small.evaluated({{var_id(epsilon(1)), e1},
                                  {var_id(epsilon(2)), e2},
                                  {var_id(beta(1)), b1},
                                  {var_id(beta(2)), b2}});
  CHECK(lhs == rhs);
}

TEST_CASE("triple coefficient table") {
  CoeffTable table = d3_table(3, -6, 3, -12, -2);
  // Corner entry: the product of the two-variable base cases.
  CHECK(table.value_at({0, -1, -2}) == 1);
  // Marginalizing out the third variable (all t summed) recovers the
  // two-variable coefficients.
  for (int r = 0; r <= 3; ++r) {
    for (int s = -r - 1; s <= 0; ++s) {
      Rational sum(0);
      for (int t = -12; t <= -2; ++t) sum += table.value_at({r, s, t});
      CAPTURE(r);
      CAPTURE(s);
      CHECK(sum == Rational(d_coeff(r, s)));
    }
  }
  // Full-row sums vanish for r >= 1.
  for (int r = 1; r <= 3; ++r) {
    Rational sum(0);
    for (const auto& [key, value] : table.entries()) {
      if (key[0] == r) sum += value;
    }
    CAPTURE(r);
    CHECK(sum == 0);
  }
  CHECK_THROWS_WITH_AS(d3_table(-1, 0, 0, -2, -2), doctest::Contains("malformed-input"),
                       Error);
}

TEST_CASE("triple table multiplies back to the numerator") {
  const int rmax = 6, smin = -10, smax = 5, tmin = -18, tmax = -2;
  CoeffTable table = d3_table(rmax, smin, smax, tmin, tmax);
  LaurentPolynomial table_poly;
  for (const auto& [key, value] : table.entries()) {
    table_poly += LaurentPolynomial::monomial(
        make_monomial({{xvar(1), key[0]}, {xvar(2), key[1]}, {xvar(3), key[2]}}), value);
  }
  LaurentPolynomial x1 = LaurentPolynomial::variable(xvar(1));
  LaurentPolynomial x2 = LaurentPolynomial::variable(xvar(2));
  LaurentPolynomial x3 = LaurentPolynomial::variable(xvar(3));
  LaurentPolynomial one{Rational(1)};
  LaurentPolynomial E = x1.scaled(Rational(2)) - x1 * x1;
  LaurentPolynomial W = x1 + x2 - x1 * x2;
  LaurentPolynomial lhs = table_poly * (x2 - E) * (x3 - E) * (x3 - W);
  LaurentPolynomial rhs = (one - x1).pow(5) * (one - x2);
  // The window truncation distorts coefficients near its edges, so compare
  // on an interior sub-window only.
  for (int r = 0; r <= rmax - 2; ++r) {
    for (int s = smin + 3; s <= smax - 3; ++s) {
      for (int t = tmin + 3; t <= tmax - 1; ++t) {
        Monomial m = make_monomial({{xvar(1), r}, {xvar(2), s}, {xvar(3), t}});
        CAPTURE(r);
        CAPTURE(s);
        CAPTURE(t);
        CHECK(lhs.coefficient_of(m) == rhs.coefficient_of(m));
      }
    }
  }
}

TEST_CASE("localization matches the iterated residue") {
  CHECK(localization_vs_residue(1, 2, LaurentPolynomial(Rational(1))));
  CHECK(localization_vs_residue(1, 3, LaurentPolynomial::variable(sigma(1))));
  CHECK(localization_vs_residue(
      2, 3, LaurentPolynomial::monomial(make_monomial({{sigma(1), 1}, {sigma(2), 1}}),
                                        Rational(1))));
  // Symmetric non-monomial class with a negative exponent.
  LaurentPolynomial cls = LaurentPolynomial::variable(sigma(1), -1) +
                          LaurentPolynomial::variable(sigma(2), -1);
  CHECK(localization_vs_residue(2, 4, cls));
  CHECK_THROWS_WITH_AS(localization_vs_residue(3, 2, LaurentPolynomial(Rational(1))),
                       doctest::Contains("malformed-input"), Error);
  CHECK_THROWS_WITH_AS(localization_vs_residue(1, 2, LaurentPolynomial::variable(sigma(2))),
                       doctest::Contains("malformed-input"), Error);
}

TEST_CASE("ronga polynomial") {
  // l = 0 in one variable of each kind: s_{1,1} + 2 s_2 explicitly.
  LaurentPolynomial expected =
      jacobi_trudi({1, 1}, 1, 1) + jacobi_trudi({2}, 1, 1).scaled(Rational(2));
  CHECK(ronga_tp(0, 1, 1) == expected);
  CHECK(ronga_tp(0, 1, 1).to_string() == "2*A1^2 - 3*A1*B1 + B1^2");
  // l = 1 and l = 2 against the displayed Schur combinations.
  LaurentPolynomial l1 = jacobi_trudi({2, 2}, 2, 3) +
                         jacobi_trudi({3, 1}, 2, 3).scaled(Rational(2)) +
                         jacobi_trudi({4}, 2, 3).scaled(Rational(4));
  CHECK(ronga_tp(1, 2, 3) == l1);
  LaurentPolynomial l2 = jacobi_trudi({3, 3}, 2, 4) +
                         jacobi_trudi({4, 2}, 2, 4).scaled(Rational(2)) +
                         jacobi_trudi({5, 1}, 2, 4).scaled(Rational(4)) +
                         jacobi_trudi({6}, 2, 4).scaled(Rational(8));
  CHECK(ronga_tp(2, 2, 4) == l2);
}

TEST_CASE("leading terms under the exponential substitution") {
  CHECK(leading_term(LaurentPolynomial(Rational(1)), 0, {}).value == 1);
  CHECK(leading_term(LaurentPolynomial(Rational(1)), 0, {}).order == 0);

  // G_(1) in one domain root: 1 - epsilon after inversion; the linear
  // coefficient is minus the assigned root value.
  LaurentPolynomial g1 = g_residue_inverted({1}, 1, 0);
  LeadingTerm lead = leading_term(g1, 1, {{epsilon(1), Rational(2)}});
  CHECK(lead.order == 1);
  CHECK(lead.value == -2);

  // The A2 class has cohomological order 2(l+1) and its leading value is the
  // ronga_tp evaluation at matching root values.
  LaurentPolynomial a2 = ktp_a2(ThomInstance(1, 1));
  LeadingTerm a2_lead =
      leading_term(a2, 2, {{epsilon(1), Rational(2)}, {beta(1), Rational(5)}});
  Rational ronga_value = ronga_tp(0, 1, 1).evaluated(
      {{var_id(abar(1)), Rational(2)}, {var_id(bbar(1)), Rational(5)}});
  CHECK(a2_lead.order == 2);
  CHECK(a2_lead.value == ronga_value);

  CHECK_THROWS_WITH_AS(leading_term(g1, 2, {{epsilon(1), Rational(2)}}),
                       doctest::Contains("leading-term-violation"), Error);
  CHECK_THROWS_WITH_AS(leading_term(LaurentPolynomial(), 1, {}),
                       doctest::Contains("leading-term-violation"), Error);
}

TEST_CASE("coefficient table container rules") {
  CoeffTable table(2);
  table.set({0, -1}, Rational(1));
  table.set({1, -1}, Rational(-2));
  CHECK(table.value_at({0, -1}) == 1);
  CHECK(table.value_at({5, -5}) == 0);
  table.set({0, -1}, Rational(0));
  CHECK(table.value_at({0, -1}) == 0);
  CHECK(table.to_json() == "[{\"r\":1,\"s\":-1,\"value\":-2}]");
  CHECK_THROWS_WITH_AS(table.set({1, 2, 3}, Rational(1)),
                       doctest::Contains("malformed-input"), Error);
  CHECK_THROWS_WITH_AS(table.set({1, 1}, rational_of(1, 2)),
                       doctest::Contains("integrality-failure"), Error);
  CoeffTable triple(3);
  triple.set({0, -1, -2}, Rational(1));
  CHECK(triple.to_json() == "[{\"r\":0,\"s\":-1,\"t\":-2,\"value\":1}]");
  CHECK_THROWS_WITH_AS(CoeffTable(4), doctest::Contains("malformed-input"), Error);
}
