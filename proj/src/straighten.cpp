#include <map>
#include <utility>
#include <vector>

#include "kgroth/grothendieck.hpp"
#include "kgroth/linalg.hpp"

namespace kgroth {

namespace {

// Trailing entries <= 0 drop without changing the function; the remaining
// sequence is straight exactly when it is a partition.
IntegerSequence pop_trailing(IntegerSequence s) {
  while (!s.empty() && s.back() <= 0) s.pop_back();
  return s;
}

using StraightenMemo = std::map<IntegerSequence, GExpansion, SequenceKeyLess>;

const GExpansion& straighten_impl(const IntegerSequence& raw, StraightenMemo& memo, long& fuel) {
  IntegerSequence s = pop_trailing(raw);
  auto it = memo.find(s);
  if (it != memo.end()) return it->second;
  if (--fuel < 0) {
    throw Error("straighten: non-termination-guard tripped while reducing (" +
                sequence_to_string(raw) + ")");
  }
  GExpansion out;
  if (is_partition(s)) {
    out.add(s, Integer(1));
  } else {
    // Leftmost ascent s[i] = p < q = s[i+1]; exchange it for pairs led by q
    // or q-1 with second entries above p, then keep straightening.
    std::size_t i = 0;
    while (i + 1 < s.size() && s[i] >= s[i + 1]) ++i;
    int p = s[i];
    int q = s[i + 1];
    auto with_pair = [&](int first, int second) {
      IntegerSequence t = s;
      t[i] = first;
      t[i + 1] = second;
      return t;
    };
    for (int k = p + 1; k <= q; ++k) {
      out += straighten_impl(with_pair(q, k), memo, fuel);
    }
    for (int k = p + 1; k <= q - 1; ++k) {
      out += straighten_impl(with_pair(q - 1, k), memo, fuel).scaled(Integer(-1));
    }
  }
  return memo.emplace(std::move(s), std::move(out)).first->second;
}

}  // namespace

GExpansion straighten(const IntegerSequence& seq, long fuel) {
  StraightenMemo memo;
  return straighten_impl(seq, memo, fuel);
}

GExpansion straightened(const GExpansion& e, long fuel) {
  StraightenMemo memo;
  GExpansion out;
  for (const auto& [key, coeff] : e.entries()) {
    out += straighten_impl(key, memo, fuel).scaled(coeff);
  }
  return out;
}

namespace {

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare_monomials(a, b) < 0;
  }
};

}  // namespace

GExpansion expand_in_G_basis(const LaurentPolynomial& f, int k, int l, int box_rows,
                             int box_cols) {
  if (box_rows < 0 || box_cols < 0) throw Error("expand_in_G_basis: negative box");
  if (box_rows > k) {
    throw Error(
        "expand_in_G_basis: independence-failure (box rows exceed the alpha count, so "
        "basis elements with that many parts vanish identically)");
  }
  std::vector<Partition> keys = partitions_in_box(box_rows, box_cols);
  std::vector<LaurentPolynomial> basis;
  basis.reserve(keys.size());
  for (const auto& key : keys) basis.push_back(g_residue(key, k, l));

  std::map<Monomial, std::size_t, MonomialLess> row_of;
  auto index_monomials = [&](const LaurentPolynomial& p) {
    for (const auto& t : p.terms()) row_of.try_emplace(t.mono, 0);
  };
  index_monomials(f);
  for (const auto& g : basis) index_monomials(g);
  std::size_t rows = 0;
  for (auto& [mono, idx] : row_of) idx = rows++;

  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(keys.size(), Rational(0)));
  std::vector<Rational> b(rows, Rational(0));
  for (std::size_t col = 0; col < basis.size(); ++col) {
    for (const auto& t : basis[col].terms()) a[row_of[t.mono]][col] = t.coeff;
  }
  for (const auto& t : f.terms()) b[row_of[t.mono]] = t.coeff;

  LinearSolveResult result = solve_linear_exact(a, b);
  if (result.status == SolveStatus::inconsistent) {
    throw Error("expand_in_G_basis: box-too-small (no expansion exists inside a " +
                std::to_string(box_rows) + "x" + std::to_string(box_cols) + " box)");
  }
  if (result.status == SolveStatus::underdetermined) {
    throw Error("expand_in_G_basis: independence-failure (basis values are linearly "
                "dependent over the monomials present)");
  }
  GExpansion out;
  for (std::size_t col = 0; col < keys.size(); ++col) {
    const Rational& c = result.solution[col];
    if (c == 0) continue;
    if (!is_integral(c)) {
      throw Error("expand_in_G_basis: integrality-failure (coefficient of G_(" +
                  sequence_to_string(keys[col]) + ") is " + to_string(c) + ")");
    }
    out.add(keys[col], c.get_num());
  }
  return out;
}

GExpansion multiply_G(const IntegerSequence& left, const IntegerSequence& right, int k, int l,
                      int box_rows, int box_cols) {
  LaurentPolynomial product = g_residue(left, k, l) * g_residue(right, k, l);
  return expand_in_G_basis(product, k, l, box_rows, box_cols);
}

}  // namespace kgroth
