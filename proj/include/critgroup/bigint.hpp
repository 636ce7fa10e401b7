#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace critgroup {

using BigInt = mpz_class;

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline BigInt gcd(const BigInt& a, const BigInt& b, const BigInt& c) {
  return gcd(gcd(a, b), c);
}

// lcm(0, x) == 0, always nonnegative.
inline BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline BigInt abs(const BigInt& a) {
  BigInt r;
  mpz_abs(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

/// True when d divides n; every integer divides 0 and 0 divides only 0.
inline bool divides(const BigInt& d, const BigInt& n) {
  if (sgn(d) == 0) return sgn(n) == 0;
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// Quotient of an exact division; the caller has checked divisibility.
inline BigInt divexact(const BigInt& n, const BigInt& d) {
  BigInt q;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline int cmpabs(const BigInt& a, const BigInt& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

inline bool is_odd(const BigInt& a) { return mpz_odd_p(a.get_mpz_t()) != 0; }

inline std::string to_string(const BigInt& a) { return a.get_str(10); }

/// Parses an optionally signed run of decimal digits. Nothing else is accepted.
inline BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9')
      throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return BigInt(digits, 10);
}

inline std::int64_t to_int64(const BigInt& a) {
  if (!a.fits_slong_p()) throw std::out_of_range("integer does not fit in 64 bits: " + to_string(a));
  return a.get_si();
}

}  // namespace critgroup
