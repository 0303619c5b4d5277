#ifndef KGROTH_GROTHENDIECK_HPP
#define KGROTH_GROTHENDIECK_HPP

#include "kgroth/gexpansion.hpp"
#include "kgroth/permutation.hpp"
#include "kgroth/rational_function.hpp"

namespace kgroth {

// Largest symmetric group handled by the full divided-difference recursion.
inline constexpr int kGrothRecursionBound = 6;
// Bound on m + n for the shifted permutation 1^m x w in truncated_stable's
// general (non-Grassmannian) path.
inline constexpr int kGrothShiftBound = 8;
// Rewrite-step budget for straightening.
inline constexpr long kStraightenFuel = 1000000;

// pi_i: f |-> (a_i*f - a_{i+1}*swap_i(f)) / (a_i - a_{i+1}). The polynomial
// overload uses the per-monomial closed form; the rational-function overload
// divides exactly and is meant for small inputs.
LaurentPolynomial isobaric_divided_difference(const LaurentPolynomial& f, int i);
RationalFunction isobaric_divided_difference(const RationalFunction& f, int i);

// Product formula for dominant permutations: one factor (1 - b_j/a_i) per
// cell (i, j) of the Rothe diagram.
LaurentPolynomial dominant_groth(const Permutation& w);

// Full double Grothendieck polynomial by divided differences down from the
// longest element. check_paths recomputes along a second reduced path and
// verifies path independence.
RationalFunction groth_recursive(const Permutation& w, bool check_paths = false,
                                 int size_bound = kGrothRecursionBound);

// G_w^{k,l}: the stable polynomial truncated to k alpha and l beta variables.
// Computes the polynomial at a stabilization level and again one level
// higher; disagreement raises a stabilization-mismatch error. Grassmannian
// permutations take a product-plus-divided-difference route that stays small;
// others shift by 1^m, subject to shift_bound on the total letter count.
RationalFunction truncated_stable(const Permutation& w, int k, int l,
                                  int shift_bound = kGrothShiftBound);

// Residue form of G_I over k alpha and l beta variables. Raises an
// internal-consistency error when the residue fails to close to a Laurent
// polynomial.
LaurentPolynomial g_residue(const IntegerSequence& seq, int k, int l);

// The same value with alpha_i -> epsilon_i^{-1} and beta_j -> beta_j^{-1},
// the argument convention of the Thom-polynomial expansions.
LaurentPolynomial g_residue_inverted(const IntegerSequence& seq, int a, int b);

// Symmetrization over S_r of prod (1-1/a_{s(i)})^{lambda_i+r-i} divided by
// prod_{i>j} (1 - a_{s(i)}/a_{s(j)}); independent oracle for g_residue with
// no beta variables.
RationalFunction symmetrization_formula(const Partition& lambda, int r);

// Rewrite G_seq into a partition-keyed combination via the straightening
// laws. Fuel counts rewrite applications; exhaustion raises a
// non-termination-guard error naming the offending sequence.
GExpansion straighten(const IntegerSequence& seq, long fuel = kStraightenFuel);
GExpansion straightened(const GExpansion& e, long fuel = kStraightenFuel);

// Exact expansion of f in the basis {G_lambda^{k,l}} over partitions within
// box_rows x box_cols. Errors: box-too-small (inconsistent system),
// independence-failure (underdetermined), integrality-failure.
GExpansion expand_in_G_basis(const LaurentPolynomial& f, int k, int l,
                             int box_rows, int box_cols);

// Structure constants: g_left * g_right expanded in the G basis.
GExpansion multiply_G(const IntegerSequence& left, const IntegerSequence& right,
                      int k, int l, int box_rows, int box_cols);

// Residue form of the double stable Schur polynomial s_I in the abar/bbar
// variables (residues at infinity only, overall sign (-1)^r).
LaurentPolynomial schur_residue(const IntegerSequence& seq, int k, int l);

// Jacobi-Trudi determinant det(c_{lambda_i+j-i}) with c_m the t^m coefficient
// of prod (1+bbar_j t) / prod (1+abar_i t); oracle for schur_residue.
LaurentPolynomial jacobi_trudi(const Partition& lambda, int k, int l);

}  // namespace kgroth

#endif
