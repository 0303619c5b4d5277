#include <map>

#include "kgroth/rational_function.hpp"

namespace kgroth {

namespace {

// Strip monomial content so all exponents are >= 0 and the polynomial has a
// nonzero constant-free... i.e. a true polynomial with trivial monomial gcd.
LaurentPolynomial strip_content(const LaurentPolynomial& p) {
  Monomial c = p.monomial_content();
  if (c.factors.empty()) return p;
  return p.mono_scaled(pow_monomial(c, -1), Rational(1));
}

LaurentPolynomial make_unit_lead(const LaurentPolynomial& p) {
  if (p.is_zero()) return p;
  return p.scaled(1 / p.terms()[0].coeff);
}

int degree_in(const std::map<int, LaurentPolynomial>& coeffs) {
  return coeffs.rbegin()->first;
}

// content (gcd of coefficients) of p viewed in R[v].
LaurentPolynomial content_in(const std::map<int, LaurentPolynomial>& coeffs) {
  LaurentPolynomial g;
  for (const auto& [e, c] : coeffs) {
    g = laurent_gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

LaurentPolynomial primitive_part(const LaurentPolynomial& p, const LaurentPolynomial& content) {
  if (content.is_one()) return p;
  auto q = p.divided_exactly_by(content);
  if (!q) throw Error("laurent_gcd: content division failed");
  return *q;
}

// Pseudo-remainder of a by b in R[v]; both maps must be nonempty with
// deg(a) >= deg(b).
LaurentPolynomial pseudo_rem(std::map<int, LaurentPolynomial> a,
                             const std::map<int, LaurentPolynomial>& b, VarId v) {
  const int db = degree_in(b);
  const LaurentPolynomial& lcb = b.rbegin()->second;
  int e = degree_in(a) - db + 1;
  while (!a.empty() && degree_in(a) >= db) {
    int da = degree_in(a);
    LaurentPolynomial lca = a.rbegin()->second;
    a.erase(da);
    // a := lcb*a - lca*v^(da-db)*b, with the cancelled lead dropped above.
    for (auto& [ea, ca] : a) ca = ca * lcb;
    for (const auto& [eb, cb] : b) {
      if (eb == db) continue;
      int shift = eb + da - db;
      auto it = a.find(shift);
      if (it == a.end()) {
        a.emplace(shift, -(lca * cb));
      } else {
        it->second -= lca * cb;
        if (it->second.is_zero()) a.erase(it);
      }
    }
    --e;
  }
  LaurentPolynomial out;
  LaurentPolynomial scale = LaurentPolynomial(Rational(1));
  for (int i = 0; i < e; ++i) scale = scale * lcb;
  for (const auto& [ea, ca] : a) {
    Monomial m;
    if (ea != 0) m.factors.push_back({v, ea});
    out += (ca * scale).mono_scaled(m, Rational(1));
  }
  return out;
}

}  // namespace

LaurentPolynomial laurent_gcd(const LaurentPolynomial& a_in, const LaurentPolynomial& b_in) {
  if (a_in.is_zero()) return make_unit_lead(strip_content(b_in));
  if (b_in.is_zero()) return make_unit_lead(strip_content(a_in));
  LaurentPolynomial a = strip_content(a_in);
  LaurentPolynomial b = strip_content(b_in);
  if (a.is_constant() || b.is_constant()) return LaurentPolynomial(Rational(1));
  if (a == b) return make_unit_lead(a);

  // Main variable: lowest-ranked variable common to both; disjoint supports
  // have only unit common divisors.
  std::vector<VarId> va = a.variables();
  std::vector<VarId> vb = b.variables();
  VarId v = 0;
  bool found = false;
  for (VarId id : va) {
    for (VarId jd : vb) {
      if (id == jd) {
        v = id;
        found = true;
        break;
      }
    }
    if (found) break;
  }
  if (!found) return LaurentPolynomial(Rational(1));

  auto ca = a.collect(v);
  auto cb = b.collect(v);
  LaurentPolynomial cont_a = content_in(ca);
  LaurentPolynomial cont_b = content_in(cb);
  LaurentPolynomial cont_gcd = laurent_gcd(cont_a, cont_b);

  LaurentPolynomial pa = primitive_part(a, cont_a);
  LaurentPolynomial pb = primitive_part(b, cont_b);
  // Primitive PRS in v.
  while (true) {
    auto ma = pa.collect(v);
    auto mb = pb.collect(v);
    if (degree_in(ma) < degree_in(mb)) {
      std::swap(pa, pb);
      std::swap(ma, mb);
    }
    LaurentPolynomial r = pseudo_rem(ma, mb, v);
    if (r.is_zero()) {
      pa = pb;
      break;
    }
    if (!r.involves(v)) {
      pa = LaurentPolynomial(Rational(1));
      break;
    }
    auto mr = r.collect(v);
    r = strip_content(primitive_part(r, content_in(mr)));
    pa = pb;
    pb = r;
  }
  return make_unit_lead(strip_content(cont_gcd * pa));
}

}  // namespace kgroth
