#include "kgroth/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace kgroth {

int Monomial::exponent_of(VarId id) const {
  for (const auto& f : factors)
    if (f.id == id) return f.exp;
  return 0;
}

int compare_monomials(const Monomial& a, const Monomial& b) {
  std::size_t i = 0, j = 0;
  while (i < a.factors.size() || j < b.factors.size()) {
    // Next variable position in the global order, treating absence as exp 0.
    VarId ida = i < a.factors.size() ? a.factors[i].id : ~VarId{0};
    VarId idb = j < b.factors.size() ? b.factors[j].id : ~VarId{0};
    int ea = 0, eb = 0;
    if (ida <= idb) ea = a.factors[i].exp;
    if (idb <= ida) eb = b.factors[j].exp;
    if (ea != eb) return ea > eb ? -1 : 1;
    if (ida <= idb) ++i;
    if (idb <= ida) ++j;
  }
  return 0;
}

Monomial mul_monomials(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors.reserve(a.factors.size() + b.factors.size());
  std::size_t i = 0, j = 0;
  while (i < a.factors.size() && j < b.factors.size()) {
    if (a.factors[i].id < b.factors[j].id) {
      out.factors.push_back(a.factors[i++]);
    } else if (b.factors[j].id < a.factors[i].id) {
      out.factors.push_back(b.factors[j++]);
    } else {
      int e = a.factors[i].exp + b.factors[j].exp;
      if (e != 0) out.factors.push_back({a.factors[i].id, e});
      ++i, ++j;
    }
  }
  for (; i < a.factors.size(); ++i) out.factors.push_back(a.factors[i]);
  for (; j < b.factors.size(); ++j) out.factors.push_back(b.factors[j]);
  return out;
}

Monomial pow_monomial(const Monomial& a, int e) {
  Monomial out;
  if (e == 0) return out;
  out.factors.reserve(a.factors.size());
  for (const auto& f : a.factors) out.factors.push_back({f.id, f.exp * e});
  return out;
}

Monomial div_monomials(const Monomial& a, const Monomial& b) {
  return mul_monomials(a, pow_monomial(b, -1));
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& f : m.factors) {
    h ^= f.id;
    h *= 1099511628211ull;
    h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(f.exp));
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

LaurentPolynomial::LaurentPolynomial(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

LaurentPolynomial LaurentPolynomial::variable(const Variable& v, int exp) {
  LaurentPolynomial p;
  if (exp == 0) return LaurentPolynomial(Rational(1));
  p.terms_.push_back({Monomial{{{var_id(v), exp}}}, Rational(1)});
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(const Monomial& m, const Rational& c) {
  LaurentPolynomial p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

bool LaurentPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_unit());
}

bool LaurentPolynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_unit() && terms_[0].coeff == 1;
}

Rational LaurentPolynomial::constant_term() const {
  for (const auto& t : terms_)
    if (t.mono.is_unit()) return t.coeff;
  return Rational(0);
}

Rational LaurentPolynomial::coefficient_of(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return Rational(0);
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int cmp = compare_monomials(terms_[i].mono, o.terms_[j].mono);
    if (cmp < 0) {
      merged.push_back(std::move(terms_[i++]));
    } else if (cmp > 0) {
      merged.push_back(o.terms_[j++]);
    } else {
      Rational c = terms_[i].coeff + o.terms_[j].coeff;
      if (c != 0) merged.push_back({std::move(terms_[i].mono), std::move(c)});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) merged.push_back(std::move(terms_[i]));
  for (; j < o.terms_.size(); ++j) merged.push_back(o.terms_[j]);
  terms_ = std::move(merged);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  return *this += -o;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPolynomial();
  if (b.is_monomial()) return a.mono_scaled(b.terms_[0].mono, b.terms_[0].coeff);
  if (a.is_monomial()) return b.mono_scaled(a.terms_[0].mono, a.terms_[0].coeff);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.terms_.size() * 2);
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      Monomial m = mul_monomials(ta.mono, tb.mono);
      auto [it, fresh] = acc.try_emplace(std::move(m), Rational(0));
      it->second += ta.coeff * tb.coeff;
    }
  }
  return LaurentPolynomial::from_map(std::move(acc));
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
  *this = *this * o;
  return *this;
}

LaurentPolynomial LaurentPolynomial::scaled(const Rational& c) const {
  if (c == 0) return LaurentPolynomial();
  LaurentPolynomial out = *this;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

LaurentPolynomial LaurentPolynomial::mono_scaled(const Monomial& m, const Rational& c) const {
  if (c == 0) return LaurentPolynomial();
  LaurentPolynomial out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({mul_monomials(t.mono, m), t.coeff * c});
  // Multiplying by a fixed monomial preserves the canonical order.
  return out;
}

LaurentPolynomial LaurentPolynomial::pow(int e) const {
  if (e < 0) {
    if (is_monomial()) {
      const auto& t = terms_[0];
      if (t.coeff == 0) throw Error("pow: zero base");
      return LaurentPolynomial::monomial(pow_monomial(t.mono, e), pow_rational(t.coeff, e));
    }
    throw Error("pow: negative exponent on a non-monomial");
  }
  LaurentPolynomial result{Rational(1)};
  LaurentPolynomial base = *this;
  int n = e;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::substituted(const SubstMap& map) const {
  if (map.empty()) return *this;
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  std::vector<LaurentPolynomial> pieces;
  for (const auto& t : terms_) {
    Monomial kept;
    Rational coeff = t.coeff;
    Monomial image;  // product of mapped monomial targets
    bool dead = false;
    for (const auto& f : t.mono.factors) {
      auto it = map.find(f.id);
      if (it == map.end()) {
        kept.factors.push_back(f);
        continue;
      }
      const Subst& s = it->second;
      if (s.coeff == 0) {
        if (f.exp < 0) throw Error("substituted: zero target with negative exponent");
        dead = true;
        break;
      }
      coeff *= pow_rational(s.coeff, f.exp);
      if (!s.mono.is_unit()) image = mul_monomials(image, pow_monomial(s.mono, f.exp));
    }
    if (dead) continue;
    Monomial m = mul_monomials(kept, image);
    auto [it2, fresh] = acc.try_emplace(std::move(m), Rational(0));
    it2->second += coeff;
  }
  return from_map(std::move(acc));
}

LaurentPolynomial LaurentPolynomial::substituted(const Variable& v, const Subst& s) const {
  SubstMap m;
  m.emplace(var_id(v), s);
  return substituted(m);
}

Rational LaurentPolynomial::evaluated(const std::unordered_map<VarId, Rational>& values) const {
  Rational total(0);
  for (const auto& t : terms_) {
    Rational val = t.coeff;
    for (const auto& f : t.mono.factors) {
      auto it = values.find(f.id);
      if (it == values.end()) throw Error("evaluated: unmapped variable " + var_name(var_of_id(f.id)));
      val *= pow_rational(it->second, f.exp);
    }
    total += val;
  }
  return total;
}

bool LaurentPolynomial::involves(VarId id) const {
  for (const auto& t : terms_)
    for (const auto& f : t.mono.factors)
      if (f.id == id) return true;
  return false;
}

std::vector<VarId> LaurentPolynomial::variables() const {
  std::vector<VarId> ids;
  for (const auto& t : terms_)
    for (const auto& f : t.mono.factors) ids.push_back(f.id);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

std::map<int, LaurentPolynomial> LaurentPolynomial::collect(VarId v) const {
  std::map<int, std::vector<Term>> buckets;
  for (const auto& t : terms_) {
    int e = 0;
    Monomial rest;
    rest.factors.reserve(t.mono.factors.size());
    for (const auto& f : t.mono.factors) {
      if (f.id == v) {
        e = f.exp;
      } else {
        rest.factors.push_back(f);
      }
    }
    buckets[e].push_back({std::move(rest), t.coeff});
  }
  std::map<int, LaurentPolynomial> out;
  for (auto& [e, terms] : buckets) {
    // Removing one variable keeps the relative canonical order of the rest.
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
      return compare_monomials(a.mono, b.mono) < 0;
    });
    LaurentPolynomial p;
    for (auto& t : terms) p.terms_.push_back(std::move(t));
    out.emplace(e, std::move(p));
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::assemble(VarId v,
                                              const std::map<int, LaurentPolynomial>& parts) {
  LaurentPolynomial total;
  for (const auto& [e, p] : parts) {
    Monomial m;
    if (e != 0) m.factors.push_back({v, e});
    total += p.mono_scaled(m, Rational(1));
  }
  return total;
}

int LaurentPolynomial::min_exponent(VarId v) const {
  if (terms_.empty()) throw Error("min_exponent: zero polynomial");
  int best = 0;
  bool first = true;
  for (const auto& t : terms_) {
    int e = t.mono.exponent_of(v);
    if (first || e < best) best = e;
    first = false;
  }
  return best;
}

int LaurentPolynomial::max_exponent(VarId v) const {
  if (terms_.empty()) throw Error("max_exponent: zero polynomial");
  int best = 0;
  bool first = true;
  for (const auto& t : terms_) {
    int e = t.mono.exponent_of(v);
    if (first || e > best) best = e;
    first = false;
  }
  return best;
}

Monomial LaurentPolynomial::monomial_content() const {
  if (terms_.empty()) return Monomial{};
  std::map<VarId, int> mins;
  for (const auto& t : terms_)
    for (const auto& f : t.mono.factors) mins.emplace(f.id, f.exp);
  for (const auto& t : terms_)
    for (auto& [id, e] : mins) {
      int cur = t.mono.exponent_of(id);
      if (cur < e) e = cur;
    }
  Monomial m;
  for (const auto& [id, e] : mins)
    if (e != 0) m.factors.push_back({id, e});
  return m;
}

std::optional<LaurentPolynomial> LaurentPolynomial::divided_exactly_by(
    const LaurentPolynomial& divisor) const {
  if (divisor.is_zero()) throw Error("divided_exactly_by: zero divisor");
  if (is_zero()) return LaurentPolynomial();
  if (divisor.is_monomial()) {
    return mono_scaled(pow_monomial(divisor.terms_[0].mono, -1),
                       1 / divisor.terms_[0].coeff);
  }
  // Leading-term elimination under the canonical order, which is
  // multiplicative, so lead(q*d) = lead(q)*lead(d) and every exact quotient
  // is found in |quotient| rounds. The fuel bound only guards against an
  // inexact division spiralling in the Laurent ring.
  LaurentPolynomial r = *this;
  std::vector<Term> q;
  const Term& dlead = divisor.terms_[0];
  long fuel = 64 * static_cast<long>(terms_.size() + divisor.terms_.size()) + 65536;
  while (!r.is_zero()) {
    if (--fuel < 0) return std::nullopt;
    Term t{div_monomials(r.terms_[0].mono, dlead.mono), r.terms_[0].coeff / dlead.coeff};
    r -= divisor.mono_scaled(t.mono, t.coeff);
    q.push_back(std::move(t));
  }
  return from_terms(std::move(q));
}

LaurentPolynomial LaurentPolynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return compare_monomials(a.mono, b.mono) < 0;
  });
  LaurentPolynomial p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (t.coeff == 0) continue;
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

LaurentPolynomial LaurentPolynomial::from_map(
    std::unordered_map<Monomial, Rational, MonomialHash>&& acc) {
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) terms.push_back({m, std::move(c)});
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return compare_monomials(a.mono, b.mono) < 0;
  });
  LaurentPolynomial p;
  p.terms_ = std::move(terms);
  return p;
}

LaurentPolynomial operator*(const Rational& c, const LaurentPolynomial& p) {
  return p.scaled(c);
}

LaurentPolynomial one_minus(const Rational& c, const Monomial& m) {
  return LaurentPolynomial(Rational(1)) - LaurentPolynomial::monomial(m, c);
}

LaurentPolynomial one_minus(const LaurentPolynomial& p) {
  return LaurentPolynomial(Rational(1)) - p;
}

Monomial make_monomial(std::initializer_list<std::pair<Variable, int>> factors) {
  std::vector<VarExp> fs;
  for (const auto& [v, e] : factors)
    if (e != 0) fs.push_back({var_id(v), e});
  std::sort(fs.begin(), fs.end(), [](const VarExp& a, const VarExp& b) { return a.id < b.id; });
  Monomial m;
  m.factors = std::move(fs);
  return m;
}

namespace {

void render_coefficient(std::ostringstream& out, const Rational& mag, bool unit_monomial) {
  if (unit_monomial || mag != 1) {
    out << mag.get_str();
    if (!unit_monomial) out << "*";
  }
}

}  // namespace

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = t.coeff < 0;
    Rational mag = negative ? Rational(-t.coeff) : t.coeff;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    render_coefficient(out, mag, t.mono.is_unit());
    // Positive-exponent factors before negative ones, each group in
    // canonical variable order; matches the frozen golden renderings.
    bool started = false;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& f : t.mono.factors) {
        if ((pass == 0) != (f.exp > 0)) continue;
        if (started) out << "*";
        out << var_name(var_of_id(f.id));
        if (f.exp != 1) out << "^" << f.exp;
        started = true;
      }
    }
  }
  return out.str();
}

}  // namespace kgroth
