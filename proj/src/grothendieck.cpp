#include "kgroth/grothendieck.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kgroth/residue.hpp"

namespace kgroth {

namespace {

// pi_i on a single Laurent monomial in a_i = x, a_{i+1} = y with exponents
// (p, q): for p >= q the result is (xy)^q * h_{p-q}(x, y); for p < q it is
// -(xy)^{p+1} * h_{q-p-2}(x, y), the empty sum when q = p + 1.
void accumulate_pi_term(std::unordered_map<Monomial, Rational, MonomialHash>& acc,
                        const Monomial& mono, const Rational& coeff, VarId x, VarId y) {
  int p = mono.exponent_of(x);
  int q = mono.exponent_of(y);
  Monomial rest;
  rest.factors.reserve(mono.factors.size());
  for (const auto& ve : mono.factors) {
    if (ve.id != x && ve.id != y) rest.factors.push_back(ve);
  }
  auto emit = [&](int ex, int ey, const Rational& c) {
    Monomial m = rest;
    Monomial xy;
    if (ex != 0) xy.factors.push_back({x, ex});
    if (ey != 0) xy.factors.push_back({y, ey});
    if (x > y) std::swap(xy.factors.front(), xy.factors.back());
    m = mul_monomials(m, xy);
    auto [it, inserted] = acc.try_emplace(m, c);
    if (!inserted) it->second += c;
  };
  if (p >= q) {
    for (int j = 0; j <= p - q; ++j) emit(q + j, p - j, coeff);
  } else {
    for (int j = 0; j <= q - p - 2; ++j) emit(p + 1 + j, q - 1 - j, -coeff);
  }
}

SubstMap swap_alpha_map(int i) {
  SubstMap map;
  map.emplace(var_id(alpha(i)), Subst{Rational(1), Monomial{{{var_id(alpha(i + 1)), 1}}}});
  map.emplace(var_id(alpha(i + 1)), Subst{Rational(1), Monomial{{{var_id(alpha(i)), 1}}}});
  return map;
}

}  // namespace

LaurentPolynomial isobaric_divided_difference(const LaurentPolynomial& f, int i) {
  if (i < 1) throw Error("isobaric_divided_difference: index must be positive");
  VarId x = var_id(alpha(i));
  VarId y = var_id(alpha(i + 1));
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(f.terms().size() * 2);
  for (const auto& t : f.terms()) accumulate_pi_term(acc, t.mono, t.coeff, x, y);
  return LaurentPolynomial::from_map(std::move(acc));
}

RationalFunction isobaric_divided_difference(const RationalFunction& f, int i) {
  if (f.is_polynomial()) {
    return RationalFunction(isobaric_divided_difference(f.num(), i));
  }
  if (i < 1) throw Error("isobaric_divided_difference: index must be positive");
  RationalFunction swapped = f.substituted(swap_alpha_map(i));
  RationalFunction ai{LaurentPolynomial::variable(alpha(i))};
  RationalFunction aj{LaurentPolynomial::variable(alpha(i + 1))};
  RationalFunction diff = ai * f - aj * swapped;
  RationalFunction quotient(diff.num(), [&] {
    auto factors = diff.den_factors();
    factors.push_back(LaurentPolynomial::variable(alpha(i)) -
                      LaurentPolynomial::variable(alpha(i + 1)));
    return factors;
  }());
  return quotient.normalized();
}

LaurentPolynomial dominant_groth(const Permutation& w) {
  Partition shape = dominant_shape(w);
  LaurentPolynomial out{Rational(1)};
  for (std::size_t i = 0; i < shape.size(); ++i) {
    for (int j = 1; j <= shape[i]; ++j) {
      out *= one_minus(Rational(1), make_monomial({{beta(j), 1}, {alpha(static_cast<int>(i) + 1), -1}}));
    }
  }
  return out;
}

namespace {

// Dominant product with beta_i = 1 substituted for i > l (valid at any point
// of the divided-difference chain because the betas are never touched).
LaurentPolynomial dominant_groth_beta_truncated(const Permutation& w, int l) {
  Partition shape = dominant_shape(w);
  LaurentPolynomial out{Rational(1)};
  for (std::size_t i = 0; i < shape.size(); ++i) {
    Monomial inv_alpha = make_monomial({{alpha(static_cast<int>(i) + 1), -1}});
    int betas = std::min(shape[i], l);
    for (int j = 1; j <= betas; ++j) {
      out *= one_minus(Rational(1), make_monomial({{beta(j), 1}, {alpha(static_cast<int>(i) + 1), -1}}));
    }
    if (shape[i] > l) out *= one_minus(Rational(1), inv_alpha).pow(shape[i] - l);
  }
  return out;
}

LaurentPolynomial groth_poly_impl(const Permutation& w,
                                  std::map<std::vector<int>, LaurentPolynomial>& memo,
                                  bool check_paths, int beta_limit) {
  auto it = memo.find(w.one_line());
  if (it != memo.end()) return it->second;
  int n = w.size();
  LaurentPolynomial result;
  if (w == Permutation::longest(n)) {
    result = beta_limit < 0 ? dominant_groth(w) : dominant_groth_beta_truncated(w, beta_limit);
  } else {
    int first = -1;
    int last = -1;
    for (int i = 1; i < n; ++i) {
      if (w.ascent_at(i)) {
        if (first < 0) first = i;
        last = i;
      }
    }
    result = isobaric_divided_difference(
        groth_poly_impl(w.times_swap(first), memo, check_paths, beta_limit), first);
    if (check_paths && last != first) {
      LaurentPolynomial other = isobaric_divided_difference(
          groth_poly_impl(w.times_swap(last), memo, check_paths, beta_limit), last);
      if (!(other == result)) {
        throw Error("groth_recursive: reduced paths disagree at " + w.to_string());
      }
    }
  }
  memo.emplace(w.one_line(), result);
  return result;
}

Permutation strip_trailing_fixed(const Permutation& w) {
  int n = w.size();
  while (n > 1 && w(n) == n) --n;
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) images.push_back(w(i));
  return Permutation(images);
}

}  // namespace

RationalFunction groth_recursive(const Permutation& w, bool check_paths, int size_bound) {
  Permutation v = strip_trailing_fixed(w);
  if (v.size() > size_bound) {
    throw Error("groth_recursive: size-limit exceeded (permutation acts on more than " +
                std::to_string(size_bound) + " letters)");
  }
  std::map<std::vector<int>, LaurentPolynomial> memo;
  return RationalFunction(groth_poly_impl(v, memo, check_paths, -1));
}

namespace {

// G_lambda^{k,l} through the Grassmannian permutation with descent at
// stabilization level p: start from the dominant factor of w_lambda(p),
// divide down along a reduced word of the longest element of S_p, then
// substitute alpha_i = 1 for i > k.
LaurentPolynomial grassmannian_stable_poly(const Partition& lambda, int p, int k, int l) {
  std::vector<int> mu;
  for (int j = 1; j <= p; ++j) {
    int part = j <= static_cast<int>(lambda.size()) ? lambda[j - 1] : 0;
    mu.push_back(part + p - j);
  }
  LaurentPolynomial poly{Rational(1)};
  for (int j = 1; j <= p; ++j) {
    int betas = std::min(mu[j - 1], l);
    for (int i = 1; i <= betas; ++i) {
      poly *= one_minus(Rational(1), make_monomial({{beta(i), 1}, {alpha(j), -1}}));
    }
    if (mu[j - 1] > l) {
      poly *= one_minus(Rational(1), make_monomial({{alpha(j), -1}})).pow(mu[j - 1] - l);
    }
  }
  for (int i : longest_element_word(p)) {
    poly = isobaric_divided_difference(poly, i);
  }
  if (p > k) {
    SubstMap map;
    for (int i = k + 1; i <= p; ++i) map.emplace(var_id(alpha(i)), Subst{Rational(1), Monomial{}});
    poly = poly.substituted(map);
  }
  return poly;
}

Partition grassmannian_shape(const Permutation& w, int descent) {
  Partition lambda;
  for (int i = descent; i >= 1; --i) lambda.push_back(w(i) - i);
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  return lambda;
}

LaurentPolynomial shifted_truncated_poly(const Permutation& w, int m, int k, int l) {
  Permutation v = w.shifted(m);
  std::map<std::vector<int>, LaurentPolynomial> memo;
  LaurentPolynomial poly = groth_poly_impl(v, memo, false, l);
  SubstMap map;
  for (int i = k + 1; i <= v.size(); ++i) {
    map.emplace(var_id(alpha(i)), Subst{Rational(1), Monomial{}});
  }
  return map.empty() ? poly : poly.substituted(map);
}

}  // namespace

RationalFunction truncated_stable(const Permutation& w, int k, int l, int shift_bound) {
  if (k < 0 || l < 0) throw Error("truncated_stable: negative variable count");
  Permutation v = strip_trailing_fixed(w);
  if (v == Permutation::identity(v.size())) return RationalFunction::constant(Rational(1));
  int descent = 0;
  if (is_grassmannian(v, &descent)) {
    Partition lambda = grassmannian_shape(v, descent);
    // Stabilization level: tableau entries above k must pair with one of the
    // l betas, which caps them at l + len - 1; levels beyond that add
    // nothing. The level-(p+1) guard below re-checks this bound.
    int len = static_cast<int>(lambda.size());
    int p = std::max({k, l + len - 1, len, 1});
    LaurentPolynomial value = grassmannian_stable_poly(lambda, p, k, l);
    LaurentPolynomial guard = grassmannian_stable_poly(lambda, p + 1, k, l);
    if (!(value == guard)) {
      throw Error("truncated_stable: stabilization-mismatch between levels " +
                  std::to_string(p) + " and " + std::to_string(p + 1));
    }
    return RationalFunction(value);
  }
  int m = k + l;
  if (m + 1 + v.size() > shift_bound) {
    throw Error("truncated_stable: size-limit exceeded (1^" + std::to_string(m + 1) + " x w acts on " +
                std::to_string(m + 1 + v.size()) + " > " + std::to_string(shift_bound) + " letters)");
  }
  LaurentPolynomial value = shifted_truncated_poly(v, m, k, l);
  LaurentPolynomial guard = shifted_truncated_poly(v, m + 1, k, l);
  if (!(value == guard)) {
    throw Error("truncated_stable: stabilization-mismatch between shifts " +
                std::to_string(m) + " and " + std::to_string(m + 1));
  }
  return RationalFunction(value);
}

namespace {

bool has_z_variable(const LaurentPolynomial& p) {
  for (VarId id : p.variables()) {
    if (var_of_id(id).family == VarFamily::z) return true;
  }
  return false;
}

}  // namespace

LaurentPolynomial g_residue(const IntegerSequence& seq, int k, int l) {
  if (k < 0 || l < 0) throw Error("g_residue: negative variable count");
  int r = static_cast<int>(seq.size());
  LaurentPolynomial num{Rational(1)};
  std::vector<LaurentPolynomial> den;
  for (int j = 1; j <= r; ++j) {
    Variable zj = zvar(j);
    LaurentPolynomial one_minus_z = one_minus(Rational(1), make_monomial({{zj, 1}}));
    // (1-z_j)^{I_j - j} merged with the M-form's (1-z_j)^{k-l}.
    int e = seq[j - 1] - j + k - l;
    if (e >= 0) {
      num *= one_minus_z.pow(e);
    } else {
      for (int c = 0; c < -e; ++c) den.push_back(one_minus_z);
    }
    for (int i = 1; i < j; ++i) {
      num *= one_minus(Rational(1), make_monomial({{zj, 1}, {zvar(i), -1}}));
    }
    for (int i = 1; i <= l; ++i) {
      num *= one_minus(Rational(1), make_monomial({{zj, 1}, {beta(i), 1}}));
    }
    for (int i = 1; i <= k; ++i) {
      den.push_back(one_minus(Rational(1), make_monomial({{zj, 1}, {alpha(i), 1}})));
    }
    den.push_back(LaurentPolynomial::variable(zj));
  }
  ResidueForm form{RationalFunction(std::move(num), std::move(den)), {}};
  for (int j = r; j >= 1; --j) {
    form.specs.push_back({zvar(j), ResidueLocation::zero_and_infinity});
  }
  RationalFunction res = iterated_residue(form);
  auto poly = res.as_polynomial();
  if (!poly || has_z_variable(*poly)) {
    throw Error("g_residue: internal-consistency failure, residue of G_(" +
                sequence_to_string(seq) + ") is not a Laurent polynomial");
  }
  return *poly;
}

LaurentPolynomial g_residue_inverted(const IntegerSequence& seq, int a, int b) {
  LaurentPolynomial g = g_residue(seq, a, b);
  SubstMap map;
  for (int i = 1; i <= a; ++i) {
    map.emplace(var_id(alpha(i)), Subst{Rational(1), Monomial{{{var_id(epsilon(i)), -1}}}});
  }
  for (int j = 1; j <= b; ++j) {
    map.emplace(var_id(beta(j)), Subst{Rational(1), Monomial{{{var_id(beta(j)), -1}}}});
  }
  return g.substituted(map);
}

namespace {

std::vector<std::vector<int>> all_permutations(int r) {
  std::vector<int> base(static_cast<std::size_t>(r));
  std::iota(base.begin(), base.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

}  // namespace

RationalFunction symmetrization_formula(const Partition& lambda, int r) {
  if (!is_partition(lambda)) throw Error("symmetrization_formula: not a partition");
  if (r < static_cast<int>(canonical_sequence(lambda).size())) {
    throw Error("symmetrization_formula: r below the partition length");
  }
  if (r == 0) return RationalFunction::constant(Rational(1));
  // Common denominator: every ordered pair (a, b), a != b, contributes one
  // factor 1 - alpha_a/alpha_b. The sigma-term's own denominator uses the
  // pairs (sigma(i), sigma(j)) for i > j; the complementary pairs multiply
  // its numerator.
  std::vector<LaurentPolynomial> den;
  std::map<std::pair<int, int>, LaurentPolynomial> pair_factor;
  for (int a = 1; a <= r; ++a) {
    for (int b = 1; b <= r; ++b) {
      if (a == b) continue;
      LaurentPolynomial f = one_minus(Rational(1), make_monomial({{alpha(a), 1}, {alpha(b), -1}}));
      pair_factor[{a, b}] = f;
      den.push_back(f);
    }
  }
  LaurentPolynomial num;
  for (const auto& sigma : all_permutations(r)) {
    LaurentPolynomial term{Rational(1)};
    for (int i = 1; i <= r; ++i) {
      int part = i <= static_cast<int>(lambda.size()) ? lambda[i - 1] : 0;
      term *= one_minus(Rational(1), make_monomial({{alpha(sigma[i - 1]), -1}})).pow(part + r - i);
    }
    std::set<std::pair<int, int>> denominator_pairs;
    for (int i = 1; i <= r; ++i) {
      for (int j = 1; j < i; ++j) {
        denominator_pairs.insert({sigma[i - 1], sigma[j - 1]});
      }
    }
    for (const auto& [key, f] : pair_factor) {
      if (!denominator_pairs.count(key)) term *= f;
    }
    num += term;
  }
  // The symmetrized sum is a polynomial, so the expanded denominator divides
  // the numerator exactly; fall back to the factored form if it ever fails.
  LaurentPolynomial den_expanded{Rational(1)};
  for (const auto& f : den) den_expanded *= f;
  if (auto q = num.divided_exactly_by(den_expanded)) return RationalFunction(*q);
  return RationalFunction(std::move(num), std::move(den));
}

LaurentPolynomial schur_residue(const IntegerSequence& seq, int k, int l) {
  if (k < 0 || l < 0) throw Error("schur_residue: negative variable count");
  int r = static_cast<int>(seq.size());
  LaurentPolynomial num{Rational(1)};
  std::vector<LaurentPolynomial> den;
  for (int j = 1; j <= r; ++j) {
    Variable zj = zvar(j);
    if (seq[j - 1] != 0) {
      num *= LaurentPolynomial::variable(zj, seq[j - 1]);
    }
    for (int i = 1; i < j; ++i) {
      num *= one_minus(Rational(1), make_monomial({{zvar(i), 1}, {zj, -1}}));
    }
    for (int i = 1; i <= l; ++i) {
      num *= LaurentPolynomial(Rational(1)) +
             LaurentPolynomial::monomial(make_monomial({{bbar(i), 1}, {zj, -1}}), Rational(1));
    }
    for (int i = 1; i <= k; ++i) {
      den.push_back(LaurentPolynomial(Rational(1)) +
                    LaurentPolynomial::monomial(make_monomial({{abar(i), 1}, {zj, -1}}), Rational(1)));
    }
    den.push_back(LaurentPolynomial::variable(zj));
  }
  ResidueForm form{RationalFunction(std::move(num), std::move(den)), {}};
  for (int j = r; j >= 1; --j) {
    form.specs.push_back({zvar(j), ResidueLocation::infinity});
  }
  RationalFunction res = iterated_residue(form);
  if (r % 2 == 1) res = Rational(-1) * res;
  auto poly = res.as_polynomial();
  if (!poly || has_z_variable(*poly)) {
    throw Error("schur_residue: internal-consistency failure for sequence (" +
                sequence_to_string(seq) + ")");
  }
  return *poly;
}

namespace {

LaurentPolynomial determinant(const std::vector<std::vector<LaurentPolynomial>>& m) {
  std::size_t n = m.size();
  if (n == 0) return LaurentPolynomial(Rational(1));
  if (n == 1) return m[0][0];
  LaurentPolynomial det;
  std::vector<std::vector<LaurentPolynomial>> minor(n - 1, std::vector<LaurentPolynomial>(n - 1));
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t mj = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == col) continue;
        minor[i - 1][mj++] = m[i][j];
      }
    }
    LaurentPolynomial contribution = m[0][col] * determinant(minor);
    if (col % 2 == 0) {
      det += contribution;
    } else {
      det -= contribution;
    }
  }
  return det;
}

}  // namespace

LaurentPolynomial jacobi_trudi(const Partition& lambda, int k, int l) {
  if (!is_partition(lambda)) throw Error("jacobi_trudi: not a partition");
  Partition lam = canonical_sequence(lambda);
  int r = static_cast<int>(lam.size());
  if (r == 0) return LaurentPolynomial(Rational(1));
  int max_order = lam[0] + r - 1;
  Variable t = tvar();
  LaurentPolynomial num{Rational(1)};
  std::vector<LaurentPolynomial> den;
  for (int j = 1; j <= l; ++j) {
    num *= LaurentPolynomial(Rational(1)) +
           LaurentPolynomial::monomial(make_monomial({{bbar(j), 1}, {t, 1}}), Rational(1));
  }
  for (int i = 1; i <= k; ++i) {
    den.push_back(LaurentPolynomial(Rational(1)) +
                  LaurentPolynomial::monomial(make_monomial({{abar(i), 1}, {t, 1}}), Rational(1)));
  }
  TruncatedSeries series = series_expand(RationalFunction(std::move(num), std::move(den)), t, max_order);
  std::vector<LaurentPolynomial> c(static_cast<std::size_t>(max_order) + 1);
  for (int m = 0; m <= max_order; ++m) {
    auto poly = series.coefficient(m).as_polynomial();
    if (!poly) throw Error("jacobi_trudi: series coefficient failed to normalize");
    c[static_cast<std::size_t>(m)] = *poly;
  }
  std::vector<std::vector<LaurentPolynomial>> matrix(static_cast<std::size_t>(r),
                                                     std::vector<LaurentPolynomial>(static_cast<std::size_t>(r)));
  for (int i = 1; i <= r; ++i) {
    for (int j = 1; j <= r; ++j) {
      int idx = lam[i - 1] + j - i;
      if (idx < 0 || idx > max_order) continue;  // c_{<0} = 0
      matrix[i - 1][j - 1] = c[static_cast<std::size_t>(idx)];
    }
  }
  return determinant(matrix);
}

}  // namespace kgroth
