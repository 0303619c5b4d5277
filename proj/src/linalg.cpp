#include "kgroth/linalg.hpp"

#include <utility>

namespace kgroth {

LinearSolveResult solve_linear_exact(const std::vector<std::vector<Rational>>& a,
                                     const std::vector<Rational>& b) {
  const size_t rows = a.size();
  if (b.size() != rows) throw Error("solve_linear_exact: row count mismatch");
  const size_t cols = rows == 0 ? 0 : a.front().size();
  for (const auto& row : a) {
    if (row.size() != cols) throw Error("solve_linear_exact: ragged matrix");
  }

  // Integer augmented matrix, each row scaled by the lcm of its denominators.
  std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols + 1));
  for (size_t i = 0; i < rows; ++i) {
    Integer scale = 1;
    for (size_t j = 0; j < cols; ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), a[i][j].get_den_mpz_t());
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), b[i].get_den_mpz_t());
    for (size_t j = 0; j <= cols; ++j) {
      Rational scaled = (j < cols ? a[i][j] : b[i]) * scale;
      m[i][j] = scaled.get_num();
    }
  }

  std::vector<std::pair<size_t, size_t>> pivots;
  Integer prev = 1;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t pr = row;
    while (pr < rows && m[pr][col] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(m[row], m[pr]);
    for (size_t i = row + 1; i < rows; ++i) {
      for (size_t j = col + 1; j <= cols; ++j) {
        Integer t = m[i][j] * m[row][col] - m[i][col] * m[row][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = m[row][col];
    pivots.emplace_back(row, col);
    ++row;
  }

  for (size_t i = pivots.size(); i < rows; ++i) {
    if (m[i][cols] != 0) return {SolveStatus::inconsistent, {}};
  }
  if (pivots.size() < cols) return {SolveStatus::underdetermined, {}};

  std::vector<Rational> x(cols);
  for (size_t k = pivots.size(); k-- > 0;) {
    const auto [pr, pc] = pivots[k];
    Rational acc(m[pr][cols]);
    for (size_t j = pc + 1; j < cols; ++j) acc -= Rational(m[pr][j]) * x[j];
    x[pc] = acc / Rational(m[pr][pc]);
  }
  return {SolveStatus::solved, std::move(x)};
}

}  // namespace kgroth
