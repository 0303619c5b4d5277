#include "doctest.h"

#include "kgroth/linalg.hpp"

using namespace kgroth;

namespace {

std::vector<std::vector<Rational>> mat(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<Rational>> out;
  for (auto& r : rows) {
    std::vector<Rational> row;
    for (int v : r) row.emplace_back(v);
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<Rational> vec(std::initializer_list<int> vals) {
  std::vector<Rational> out;
  for (int v : vals) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_CASE("unique solution") {
  auto r = solve_linear_exact(mat({{2, 1}, {1, -1}}), vec({5, 1}));
  REQUIRE(r.status == SolveStatus::solved);
  CHECK(r.solution == std::vector<Rational>{Rational(2), Rational(1)});
}

TEST_CASE("fractional entries") {
  std::vector<std::vector<Rational>> a(3, std::vector<Rational>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a[i][j] = rational_of(1, i + j + 1);
  auto x = vec({1, -2, 3});
  std::vector<Rational> b(3, Rational(0));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b[i] += a[i][j] * x[j];
  auto r = solve_linear_exact(a, b);
  REQUIRE(r.status == SolveStatus::solved);
  CHECK(r.solution == x);
}

TEST_CASE("inconsistent") {
  auto r = solve_linear_exact(mat({{1, 1}, {1, 1}}), vec({1, 2}));
  CHECK(r.status == SolveStatus::inconsistent);
}

TEST_CASE("underdetermined") {
  auto r = solve_linear_exact(mat({{1, 1}, {2, 2}}), vec({1, 2}));
  CHECK(r.status == SolveStatus::underdetermined);
}

TEST_CASE("inconsistency wins over free columns") {
  auto r = solve_linear_exact(mat({{1, 1}, {2, 2}}), vec({1, 3}));
  CHECK(r.status == SolveStatus::inconsistent);
}

TEST_CASE("overdetermined but consistent") {
  auto r = solve_linear_exact(mat({{1, 0}, {0, 1}, {1, 1}}), vec({4, -7, -3}));
  REQUIRE(r.status == SolveStatus::solved);
  CHECK(r.solution == std::vector<Rational>{Rational(4), Rational(-7)});
}

TEST_CASE("degenerate shapes") {
  auto r0 = solve_linear_exact({}, {});
  CHECK(r0.status == SolveStatus::solved);
  CHECK(r0.solution.empty());

  auto r1 = solve_linear_exact({{}, {}}, vec({0, 3}));
  CHECK(r1.status == SolveStatus::inconsistent);
}
