#include "kgroth/thom.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "kgroth/residue.hpp"

namespace kgroth {

namespace {

Integer two_to(long e) {
  if (e < 0) throw Error("d_coeff: internal-consistency failure, negative power of two");
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return out;
}

bool has_z_variable(const LaurentPolynomial& p) {
  for (VarId id : p.variables()) {
    if (var_of_id(id).family == VarFamily::z) return true;
  }
  return false;
}

// Shared K-root block of the push-forward integrands: multiplies
// prod_j (1 - z_i/beta_j) into num and appends the (1 - z_i/epsilon_j)
// factors and z_i itself to den, for each listed z-index.
void append_root_factors(const ThomInstance& inst, const std::vector<int>& z_indices,
                         LaurentPolynomial& num, std::vector<LaurentPolynomial>& den) {
  for (int i : z_indices) {
    Variable zi = zvar(i);
    for (int j = 1; j <= inst.b; ++j) {
      num *= one_minus(Rational(1), make_monomial({{zi, 1}, {beta(j), -1}}));
    }
    for (int j = 1; j <= inst.a; ++j) {
      den.push_back(one_minus(Rational(1), make_monomial({{zi, 1}, {epsilon(j), -1}})));
    }
    den.push_back(LaurentPolynomial::variable(zi));
  }
}

LaurentPolynomial run_residue(ResidueForm form, const std::vector<int>& order,
                              const std::string& who) {
  for (int j : order) {
    form.specs.push_back({zvar(j), ResidueLocation::zero_and_infinity});
  }
  RationalFunction res = iterated_residue(form);
  auto poly = res.as_polynomial();
  if (!poly || has_z_variable(*poly)) {
    throw Error(who + ": internal-consistency failure, residue is not a Laurent polynomial");
  }
  return *poly;
}

// x-variables of the coefficient-table expansions.
const VarId kX1 = var_id(xvar(1));
const VarId kX2 = var_id(xvar(2));

// Drops monomials whose x1-exponent exceeds bound.
LaurentPolynomial truncate_x1(const LaurentPolynomial& p, int bound) {
  std::vector<Term> kept;
  for (const Term& t : p.terms()) {
    if (t.mono.exponent_of(kX1) <= bound) kept.push_back(t);
  }
  return LaurentPolynomial::from_terms(std::move(kept));
}

std::string key_to_string(const std::vector<int>& key) {
  std::ostringstream out;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) out << ",";
    out << key[i];
  }
  return out.str();
}

}  // namespace

void CoeffTable::set(std::vector<int> key, const Rational& value) {
  if (static_cast<int>(key.size()) != arity_) {
    throw Error("coeff table: malformed-input (key (" + key_to_string(key) +
                ") does not match arity " + std::to_string(arity_) + ")");
  }
  if (value.get_den() != 1) {
    throw Error("coeff table: integrality-failure (value " + std::string(value.get_str()) +
                " at (" + key_to_string(key) + ") is not an integer)");
  }
  if (value == 0) {
    entries_.erase(key);
  } else {
    entries_[std::move(key)] = value;
  }
}

Rational CoeffTable::value_at(const std::vector<int>& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? Rational(0) : it->second;
}

std::string CoeffTable::to_json() const {
  std::ostringstream out;
  out << "[";
  bool first = true;
  for (const auto& [key, value] : entries_) {
    if (!first) out << ",";
    first = false;
    out << "{\"r\":" << key[0] << ",\"s\":" << key[1];
    if (arity_ == 3) out << ",\"t\":" << key[2];
    out << ",\"value\":" << value.get_num().get_str() << "}";
  }
  out << "]";
  return out.str();
}

std::string CoeffTable::to_text() const {
  std::ostringstream out;
  if (entries_.empty()) return "(empty table)\n";
  if (arity_ == 3) {
    for (const auto& [key, value] : entries_) {
      out << "d[" << key_to_string(key) << "] = " << value.get_num().get_str() << "\n";
    }
    return out.str();
  }
  int r_lo = 0, r_hi = 0, s_lo = 0, s_hi = 0;
  bool first = true;
  for (const auto& [key, value] : entries_) {
    (void)value;
    if (first) {
      r_lo = r_hi = key[0];
      s_lo = s_hi = key[1];
      first = false;
    } else {
      r_lo = std::min(r_lo, key[0]);
      r_hi = std::max(r_hi, key[0]);
      s_lo = std::min(s_lo, key[1]);
      s_hi = std::max(s_hi, key[1]);
    }
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"s\\r"};
  for (int r = r_lo; r <= r_hi; ++r) header.push_back(std::to_string(r));
  cells.push_back(std::move(header));
  for (int s = s_hi; s >= s_lo; --s) {
    std::vector<std::string> row{std::to_string(s)};
    for (int r = r_lo; r <= r_hi; ++r) {
      Rational v = value_at({r, s});
      row.push_back(v == 0 ? "." : v.get_num().get_str());
    }
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << "  ";
      out << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << "\n";
  }
  return out.str();
}

Integer d_coeff(int r, int s) {
  if (r < 0) return Integer(0);
  long n = -static_cast<long>(s) - 1;
  // Each term is 2^e * C(n, k); whenever the binomial is nonzero the matching
  // exponent is nonnegative, so the sum is an integer.
  const std::pair<long, long> terms[3] = {
      {-2L * s - 2 - r, -2L * s - r - 2},
      {-2L * s - r, -2L * s - r - 1},
      {-2L * s - r, -2L * s - r},
  };
  Integer sum(0);
  for (const auto& [e, k] : terms) {
    Integer c = binomial(n, k);
    if (c != 0) sum += two_to(e) * c;
  }
  if ((r + s + 1) % 2 != 0) sum = -sum;
  return sum;
}

CoeffTable d_oracle(int r_max) {
  if (r_max < 0) throw Error("d_oracle: malformed-input (r_max must be nonnegative)");
  LaurentPolynomial x1 = LaurentPolynomial::variable(xvar(1));
  LaurentPolynomial geom_core = x1.scaled(Rational(2)) - x1 * x1;  // 2x1 - x1^2
  // sum over k >= 1 of x2^-k (2x1 - x1^2)^(k-1); powers above k = r_max + 1
  // cannot reach x1-degree r_max.
  LaurentPolynomial sum;
  LaurentPolynomial core_power{Rational(1)};
  for (int k = 1; k <= r_max + 1; ++k) {
    sum += core_power.mono_scaled(make_monomial({{xvar(2), -k}}), Rational(1));
    core_power = truncate_x1(core_power * geom_core, r_max);
  }
  LaurentPolynomial numerator =
      LaurentPolynomial(Rational(1)) - x1.scaled(Rational(2)) + x1 * x1;
  LaurentPolynomial product = sum * numerator;
  CoeffTable table(2);
  for (const Term& t : product.terms()) {
    int r = t.mono.exponent_of(kX1);
    int s = t.mono.exponent_of(kX2);
    if (r <= r_max) table.set({r, s}, t.coeff);
  }
  return table;
}

Integer D_coeff(int r, int s, int l) {
  if (l < 0 || r < 0 || r > 2 * l + 2 || s < -l - 2 || s > -((r + 1) / 2)) {
    throw Error("D_coeff: malformed-input (r=" + std::to_string(r) + ", s=" +
                std::to_string(s) + " outside the l=" + std::to_string(l) + " window)");
  }
  if (s > -l - 2) return d_coeff(r, s);
  Integer sum(0);
  for (int t = -r - 1; t <= -l - 2; ++t) sum += d_coeff(r, t);
  return sum;
}

LaurentPolynomial ktp_sigma_r(int r, const ThomInstance& inst) {
  if (r < 1 || r > inst.a) {
    throw Error("ktp_sigma_r: malformed-input (need 1 <= r <= a)");
  }
  LaurentPolynomial num{Rational(1)};
  std::vector<LaurentPolynomial> den;
  std::vector<int> indices;
  for (int i = 1; i <= r; ++i) {
    indices.push_back(i);
    for (int j = 1; j < i; ++j) {
      num *= one_minus(Rational(1), make_monomial({{zvar(i), 1}, {zvar(j), -1}}));
    }
  }
  append_root_factors(inst, indices, num, den);
  std::vector<int> order;
  for (int j = r; j >= 1; --j) order.push_back(j);
  return run_residue(ResidueForm{RationalFunction(std::move(num), std::move(den)), {}},
                     order, "ktp_sigma_r");
}

LaurentPolynomial ktp_a2(const ThomInstance& inst, bool swapped_order) {
  LaurentPolynomial num = one_minus(Rational(1), make_monomial({{zvar(2), 1}, {zvar(1), -1}}));
  std::vector<LaurentPolynomial> den;
  den.push_back(one_minus(Rational(1), make_monomial({{zvar(2), 1}, {zvar(1), -2}})));
  append_root_factors(inst, {1, 2}, num, den);
  std::vector<int> order = swapped_order ? std::vector<int>{1, 2} : std::vector<int>{2, 1};
  return run_residue(ResidueForm{RationalFunction(std::move(num), std::move(den)), {}},
                     order, "ktp_a2");
}

LaurentPolynomial ktp_a3(const ThomInstance& inst, int dimension_bound) {
  if (inst.a > dimension_bound || inst.b > dimension_bound) {
    throw Error("ktp_a3: malformed-input (dimensions exceed the bound " +
                std::to_string(dimension_bound) + ")");
  }
  LaurentPolynomial num{Rational(1)};
  num *= one_minus(Rational(1), make_monomial({{zvar(2), 1}, {zvar(1), -1}}));
  num *= one_minus(Rational(1), make_monomial({{zvar(3), 1}, {zvar(1), -1}}));
  num *= one_minus(Rational(1), make_monomial({{zvar(3), 1}, {zvar(2), -1}}));
  std::vector<LaurentPolynomial> den;
  den.push_back(one_minus(Rational(1), make_monomial({{zvar(2), 1}, {zvar(1), -2}})));
  den.push_back(one_minus(Rational(1), make_monomial({{zvar(3), 1}, {zvar(1), -2}})));
  den.push_back(one_minus(Rational(1), make_monomial({{zvar(3), 1}, {zvar(1), -1}, {zvar(2), -1}})));
  append_root_factors(inst, {1, 2, 3}, num, den);
  return run_residue(ResidueForm{RationalFunction(std::move(num), std::move(den)), {}},
                     {3, 2, 1}, "ktp_a3");
}

GExpansion ktp_a2_stable(int l, int N) {
  if (l < 0 || N <= 2 * l + 2) {
    throw Error("ktp_a2_stable: malformed-input (need l >= 0 and N > 2l+2)");
  }
  GExpansion out;
  for (int r = 0; r <= N; ++r) {
    for (int s = -r - 1; s <= -(r / 2); ++s) {
      Integer d = d_coeff(r, s);
      if (d != 0) out.add({r + l + 1, s + l + 2}, d);
    }
  }
  return out;
}

GExpansion ktp_a2_minimal(int l) {
  if (l < 0) throw Error("ktp_a2_minimal: malformed-input (l must be nonnegative)");
  GExpansion out;
  for (int r = 0; r <= 2 * l + 2; ++r) {
    for (int s = -l - 2; s <= -((r + 1) / 2); ++s) {
      Integer D = D_coeff(r, s, l);
      if (D != 0) out.add({r + l + 1, s + l + 2}, D);
    }
  }
  return out;
}

RemainderReport remainder_identity_check(int N, int bound) {
  if (N < 0 || N > bound) {
    throw Error("remainder_identity_check: malformed-input (need 0 <= N <= " +
                std::to_string(bound) + ")");
  }
  LaurentPolynomial one{Rational(1)};
  LaurentPolynomial z1 = LaurentPolynomial::variable(zvar(1));
  LaurentPolynomial z2 = LaurentPolynomial::variable(zvar(2));
  LaurentPolynomial one_minus_z1 = one - z1;
  LaurentPolynomial one_minus_z2 = one - z2;

  RationalFunction lhs(one, {one_minus(Rational(1), make_monomial({{zvar(2), 1}, {zvar(1), -2}}))});

  RationalFunction rhs;
  for (int r = 0; r <= N; ++r) {
    // sum_s d_{r,s} (1-z2)^s = P_r(z2) / (1-z2)^(r+1) with polynomial P_r.
    LaurentPolynomial p_r;
    for (int s = -r - 1; s <= -(r / 2); ++s) {
      Integer d = d_coeff(r, s);
      if (d != 0) p_r += one_minus_z2.pow(s + r + 1).scaled(Rational(d));
    }
    if (p_r.is_zero()) continue;
    std::vector<LaurentPolynomial> den(static_cast<std::size_t>(r + 1), one_minus_z2);
    rhs = rhs + RationalFunction(p_r * one_minus_z1.pow(r), std::move(den));
  }

  LaurentPolynomial p_poly, q_poly;
  for (int i = 0; 2 * i <= N + 1; ++i) {
    p_poly += z2.pow(i).scaled(Rational(binomial(N + 1, 2 * i)));
  }
  for (int i = 0; 2 * i + 1 <= N + 1; ++i) {
    q_poly += z2.pow(i).scaled(Rational(binomial(N + 1, 2 * i + 1)));
  }
  LaurentPolynomial rem_num = (z1 * q_poly + p_poly) * one_minus_z1.pow(N + 1);
  std::vector<LaurentPolynomial> rem_den(static_cast<std::size_t>(N + 1), one_minus_z2);
  rem_den.push_back(one_minus(Rational(1), make_monomial({{zvar(1), 2}, {zvar(2), -1}})));
  rhs = rhs + RationalFunction(-rem_num, std::move(rem_den));

  RemainderReport report;
  report.pass = lhs.equals(rhs);
  if (!report.pass) {
    RationalFunction diff = (lhs - rhs).normalized();
    std::string text = diff.to_string();
    if (text.size() > 200) text = text.substr(0, 200) + "...";
    report.defect = "order-" + std::to_string(N) + " defect: " + text;
  }
  return report;
}

SignReport sign_report(const GExpansion& e) {
  SignReport report;
  for (const auto& [key, coeff] : e.entries()) {
    if (key.size() > 2) {
      throw Error("sign_report: malformed-input (key (" + sequence_to_string(key) +
                  ") has more than two rows)");
    }
    long a = key.size() > 0 ? key[0] : 0;
    long b = key.size() > 1 ? key[1] : 0;
    bool even = ((a + b) % 2) == 0;
    bool positive = coeff > 0;
    if (positive != even) {
      report.violations.push_back("coefficient of G_(" + sequence_to_string(key) + ") is " +
                                  coeff.get_str() + ", violating the (-1)^(a+b) sign law");
    }
  }
  report.pass = report.violations.empty();
  return report;
}

CoeffTable d3_table(int r_max, int s_min, int s_max, int t_min, int t_max) {
  if (r_max < 0 || s_min > s_max || t_min > t_max) {
    throw Error("d3_table: malformed-input (empty window)");
  }
  LaurentPolynomial x1 = LaurentPolynomial::variable(xvar(1));
  LaurentPolynomial x2 = LaurentPolynomial::variable(xvar(2));
  LaurentPolynomial one{Rational(1)};
  // In x_i = 1 - z_i the three denominators become x2 - E, x3 - E, x3 - W.
  LaurentPolynomial E = x1.scaled(Rational(2)) - x1 * x1;
  LaurentPolynomial W = x1 + x2 - x1 * x2;
  LaurentPolynomial shell = (one - x1).pow(5) * (one - x2);

  // Geometric expansion of each factor: 1/(x2-E) = sum_k x2^-k E^(k-1) and
  // the two x3 factors likewise, giving terms indexed by (k, m, n >= 1) with
  // x3-exponent -(m+n). E powers are truncated in x1; W powers raise the
  // x2-degree, so a term reaches the window only when -k <= s_max and
  // n - k >= s_min.
  std::vector<LaurentPolynomial> e_pows{LaurentPolynomial{Rational(1)}};
  while (static_cast<int>(e_pows.size()) <= r_max) {
    e_pows.push_back(truncate_x1(e_pows.back() * E, r_max));
  }
  std::vector<LaurentPolynomial> w_pows{LaurentPolynomial{Rational(1)}};
  while (static_cast<int>(w_pows.size()) <= std::max(0, -t_min - 2)) {
    w_pows.push_back(truncate_x1(w_pows.back() * W, r_max));
  }
  CoeffTable table(3);
  std::map<std::vector<int>, Rational> acc;
  int m_hi = std::min(r_max + 1, -t_min - 1);
  for (int m = 1; m <= m_hi; ++m) {
    for (int n = 1; m + n <= -t_min; ++n) {
      int t = -(m + n);
      if (t > t_max) continue;
      int k_hi = std::min(r_max + 2 - m, n - s_min);
      for (int k = std::max(1, -s_max); k <= k_hi; ++k) {
        // E^(k+m-2) reaches the window only when its minimal x1-degree
        // k+m-2 stays within r_max; the k bound above ensures that.
        LaurentPolynomial piece =
            truncate_x1(e_pows[static_cast<std::size_t>(k + m - 2)] *
                            w_pows[static_cast<std::size_t>(n - 1)] * shell,
                        r_max);
        for (const Term& term : piece.terms()) {
          int r = term.mono.exponent_of(kX1);
          int s = term.mono.exponent_of(kX2) - k;
          if (r > r_max || s < s_min || s > s_max) continue;
          acc[{r, s, t}] += term.coeff;
        }
      }
    }
  }
  for (auto& [key, value] : acc) {
    if (value != 0) table.set(key, value);
  }
  return table;
}

bool localization_vs_residue(int r, int w, const LaurentPolynomial& g) {
  if (r < 1 || r > w || w > 4) {
    throw Error("localization_vs_residue: malformed-input (need 1 <= r <= w <= 4)");
  }
  for (VarId id : g.variables()) {
    Variable v = var_of_id(id);
    if (v.family != VarFamily::sigma || v.index < 1 || v.index > r) {
      throw Error("localization_vs_residue: malformed-input (class must use s1..s" +
                  std::to_string(r) + " only)");
    }
  }

  // Fixed-point side: sum over r-element subsets of the weights.
  RationalFunction local_sum;
  std::vector<int> subset(static_cast<std::size_t>(r));
  std::iota(subset.begin(), subset.end(), 1);
  while (true) {
    SubstMap rename;
    for (int i = 0; i < r; ++i) {
      rename.emplace(var_id(sigma(i + 1)),
                     Subst{Rational(1), Monomial{{{var_id(omega(subset[i])), 1}}}});
    }
    std::vector<LaurentPolynomial> den;
    for (int i : subset) {
      for (int j = 1; j <= w; ++j) {
        if (std::find(subset.begin(), subset.end(), j) != subset.end()) continue;
        den.push_back(one_minus(Rational(1), make_monomial({{omega(i), 1}, {omega(j), -1}})));
      }
    }
    local_sum = local_sum + RationalFunction(g.substituted(rename), std::move(den));

    // Next r-subset of {1..w} in lexicographic order.
    int pos = r - 1;
    while (pos >= 0 && subset[pos] == w - (r - 1 - pos)) --pos;
    if (pos < 0) break;
    ++subset[pos];
    for (int q = pos + 1; q < r; ++q) subset[q] = subset[q - 1] + 1;
  }

  // Residue side of the push-forward.
  SubstMap to_z;
  for (int i = 1; i <= r; ++i) {
    to_z.emplace(var_id(sigma(i)), Subst{Rational(1), Monomial{{{var_id(zvar(i)), 1}}}});
  }
  LaurentPolynomial num = g.substituted(to_z);
  std::vector<LaurentPolynomial> den;
  for (int i = 1; i <= r; ++i) {
    for (int j = 1; j < i; ++j) {
      num *= one_minus(Rational(1), make_monomial({{zvar(i), 1}, {zvar(j), -1}}));
    }
    for (int j = 1; j <= w; ++j) {
      den.push_back(one_minus(Rational(1), make_monomial({{zvar(i), 1}, {omega(j), -1}})));
    }
    den.push_back(LaurentPolynomial::variable(zvar(i)));
  }
  ResidueForm form{RationalFunction(std::move(num), std::move(den)), {}};
  for (int j = r; j >= 1; --j) {
    form.specs.push_back({zvar(j), ResidueLocation::zero_and_infinity});
  }
  RationalFunction residue_side = iterated_residue(form);
  return residue_side.equals(local_sum);
}

LaurentPolynomial ronga_tp(int l, int k, int m) {
  if (l < 0 || k < 0 || m < 0) {
    throw Error("ronga_tp: malformed-input (negative argument)");
  }
  LaurentPolynomial out;
  Integer weight(1);
  for (int i = 0; i <= l + 1; ++i) {
    Partition shape{l + 1 + i};
    if (l + 1 - i > 0) shape.push_back(l + 1 - i);
    out += jacobi_trudi(shape, k, m).scaled(Rational(weight));
    weight *= 2;
  }
  return out;
}

LeadingTerm leading_term(const LaurentPolynomial& f, int expected_order,
                         const std::map<Variable, Rational>& spec) {
  if (expected_order < 0) {
    throw Error("leading_term: malformed-input (expected_order must be nonnegative)");
  }
  // Substituting v -> exp(t * spec[v]) turns each term into its coefficient
  // times exp(t * weight); the t^j coefficient of f is then
  // sum_m c_m weight_m^j / j!.
  std::vector<std::pair<Rational, Rational>> weighted;  // (coeff, weight)
  for (const Term& term : f.terms()) {
    Rational weight(0);
    for (const VarExp& ve : term.mono.factors) {
      auto it = spec.find(var_of_id(ve.id));
      if (it != spec.end()) weight += Rational(ve.exp) * it->second;
    }
    weighted.emplace_back(term.coeff, weight);
  }
  Rational factorial(1);
  for (int j = 0; j <= expected_order; ++j) {
    if (j > 0) factorial *= j;
    Rational coeff(0);
    for (const auto& [c, weight] : weighted) {
      coeff += c * pow_rational(weight, j);
    }
    coeff /= factorial;
    if (coeff != 0) {
      if (j < expected_order) {
        throw Error("leading_term: leading-term-violation (order " + std::to_string(j) +
                    " coefficient " + std::string(coeff.get_str()) + " is nonzero below " +
                    std::to_string(expected_order) + ")");
      }
      return LeadingTerm{j, coeff};
    }
  }
  throw Error("leading_term: leading-term-violation (all coefficients vanish through order " +
              std::to_string(expected_order) + ")");
}

}  // namespace kgroth
