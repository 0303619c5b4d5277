#ifndef KGROTH_LINALG_HPP
#define KGROTH_LINALG_HPP

#include <vector>

#include "kgroth/rational.hpp"

namespace kgroth {

enum class SolveStatus { solved, inconsistent, underdetermined };

struct LinearSolveResult {
  SolveStatus status;
  // Populated only when status == solved; one entry per column.
  std::vector<Rational> solution;
};

// Exact solve of A x = b over the rationals. Rows are scaled to integers and
// eliminated with fraction-free (Bareiss) pivoting, so intermediate entries
// stay integral; back substitution is rational. Inconsistency is reported in
// preference to underdetermination.
LinearSolveResult solve_linear_exact(const std::vector<std::vector<Rational>>& a,
                                     const std::vector<Rational>& b);

}  // namespace kgroth

#endif
