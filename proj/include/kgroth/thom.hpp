#ifndef KGROTH_THOM_HPP
#define KGROTH_THOM_HPP

#include <map>
#include <string>
#include <vector>

#include "kgroth/gexpansion.hpp"
#include "kgroth/grothendieck.hpp"

namespace kgroth {

// Source/target dimension pair of a stable map germ. Domain Chern roots are
// written in the epsilon family and target roots in the beta family; the
// expansions below depend on the pair only through l = b - a.
struct ThomInstance {
  int a;
  int b;

  ThomInstance(int a_, int b_) : a(a_), b(b_) {
    if (a < 1 || b < a) {
      throw Error("thom instance: malformed-input (need 1 <= a <= b)");
    }
  }

  int l() const { return b - a; }
};

// Exact integer coefficient table keyed by (r, s) pairs or (r, s, t) triples.
// Values are stored as Rationals but must be integers; set() enforces both
// the arity and the integrality.
class CoeffTable {
 public:
  using Map = std::map<std::vector<int>, Rational>;

  explicit CoeffTable(int arity) : arity_(arity) {
    if (arity != 2 && arity != 3) {
      throw Error("coeff table: malformed-input (arity must be 2 or 3)");
    }
  }

  int arity() const { return arity_; }
  const Map& entries() const { return entries_; }

  // Records a nonzero value; zero values are dropped so the table equals its
  // own support.
  void set(std::vector<int> key, const Rational& value);

  // 0 when the key is absent.
  Rational value_at(const std::vector<int>& key) const;

  // Rows {"r": .., "s": .., ("t": ..,) "value": ..} sorted by key.
  std::string to_json() const;

  // Pair tables render as a grid (columns r, rows s descending); triple
  // tables render one "d[r,s,t] = value" line per entry.
  std::string to_text() const;

 private:
  int arity_;
  Map entries_;
};

struct RemainderReport {
  bool pass = false;
  std::string defect;  // empty when pass
};

struct SignReport {
  bool pass = false;
  std::vector<std::string> violations;
};

struct LeadingTerm {
  int order = 0;
  Rational value;
};

// Coefficient of x1^r x2^s in (1-2x1+x1^2)/(x2-2x1+x1^2) expanded on
// |x1| < |x2|, by the three-binomial closed form with the convention
// C(n,k) = 0 unless 0 <= k <= n. Out-of-range pairs return 0.
Integer d_coeff(int r, int s);

// The same coefficients for all r <= r_max, computed by direct series
// manipulation (sum over x2^-k (2x1-x1^2)^(k-1)), independent of d_coeff.
CoeffTable d_oracle(int r_max);

// Collapsed coefficients of the minimal two-row expansion: d_{r,s} when
// s > -l-2, and the tail sum over t <= -l-2 of d_{r,t} when s = -l-2.
// Requires 0 <= r <= 2l+2 and -l-2 <= s <= -ceil(r/2).
Integer D_coeff(int r, int s, int l);

// Push-forward of the vanishing-locus Euler class over the Grassmannian of
// r-planes: an iterated residue whose value is G_{(r+l)^r} with all
// variables inverted. Requires r <= inst.a.
LaurentPolynomial ktp_sigma_r(int r, const ThomInstance& inst);

// Double-residue formula for the A2 class, z2 innermost. The swapped_order
// flag reverses the residue order for diagnostics; the two orders genuinely
// differ, only the default is the defined value.
LaurentPolynomial ktp_a2(const ThomInstance& inst, bool swapped_order = false);

// Triple-residue formula for the A3 class, z3 innermost, then z2, then z1.
// Refuses instances with a or b above dimension_bound.
LaurentPolynomial ktp_a3(const ThomInstance& inst, int dimension_bound = 4);

// Truncated two-row expansion of the A2 class: sum over r <= N of
// d_{r,s} * G_{(r+l+1, s+l+2)}; keys need not be partitions. Requires
// N > 2l+2.
GExpansion ktp_a2_stable(int l, int N);

// Straightened form of the same expansion: sum over r <= 2l+2 of
// D_{r,s,l} * G_{(r+l+1, s+l+2)}; every key is a partition.
GExpansion ktp_a2_minimal(int l);

// Symbolic check of the order-N series-with-remainder identity for
// 1/(1-z2/z1^2) around z1 = 1.
RemainderReport remainder_identity_check(int N, int bound = 6);

// Checks that each coefficient of G_{a,b} has sign (-1)^(a+b). Keys longer
// than two raise a malformed-input error; shorter keys pad with zeros.
SignReport sign_report(const GExpansion& e);

// Coefficients d_{r,s,t} of 1/((1-z2/z1^2)(1-z3/z1^2)(1-z3/(z1 z2))) in the
// basis (1-z1)^r (1-z2)^s (1-z3)^t on |1-z1| < |1-z2| < |1-z3|, restricted
// to the requested window.
CoeffTable d3_table(int r_max, int s_min, int s_max, int t_min, int t_max);

// Compares the fixed-point localization sum over r-subsets of the w weights
// against the iterated-residue push-forward of g(sigma_1..sigma_r); true
// when they agree exactly. Requires r <= w <= 4.
bool localization_vs_residue(int r, int w, const LaurentPolynomial& g);

// Cohomological second-order Thom polynomial: sum over i <= l+1 of
// 2^i * s_{(l+1+i, l+1-i)} in k abar and m bbar variables.
LaurentPolynomial ronga_tp(int l, int k, int m);

// Substitutes every K-theoretic root v of f by exp(t * spec[v]) (missing
// variables count as 0), expands through t^expected_order, and returns the
// first nonzero order with its coefficient. A nonzero coefficient below
// expected_order, or none at all through it, raises a
// leading-term-violation error.
LeadingTerm leading_term(const LaurentPolynomial& f, int expected_order,
                         const std::map<Variable, Rational>& spec);

}  // namespace kgroth

#endif
