#ifndef KGROTH_RATIONAL_HPP
#define KGROTH_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace kgroth {

// Exact arbitrary-precision arithmetic. All coefficient arithmetic in the
// library goes through these aliases; no floating point anywhere.
using Integer = mpz_class;
using Rational = mpq_class;

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

inline Rational rational_of(long num, long den = 1) {
  if (den == 0) throw Error("rational_of: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// q^e for integer e of either sign; q must be nonzero when e < 0.
inline Rational pow_rational(const Rational& q, long e) {
  if (e == 0) return Rational(1);
  if (q == 0) {
    if (e < 0) throw Error("pow_rational: zero base with negative exponent");
    return Rational(0);
  }
  Rational base = q;
  bool invert = e < 0;
  unsigned long n = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), n);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), n);
  out.canonicalize();
  if (invert) out = 1 / out;
  return out;
}

inline Integer pow_integer(const Integer& b, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
  return out;
}

// binomial(n, k) with the convention that it vanishes for k < 0 or k > n;
// n may be any integer >= 0 here (negative upper index is not needed because
// callers guard with the vanishing convention first).
inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Integer(0);
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

inline Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Parses "p", "-p" or "p/q". Returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& text);

}  // namespace kgroth

#endif
