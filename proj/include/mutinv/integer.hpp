#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mutinv {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer pos_part(const Integer& x) { return x > 0 ? x : Integer(0); }

inline std::string to_string(const Integer& x) { return x.get_str(); }

inline std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Parses an optionally signed decimal integer; throws std::invalid_argument.
inline Integer parse_integer(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  if (i == text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') throw std::invalid_argument("not an integer: '" + text + "'");
  }
  return Integer(text[0] == '+' ? text.substr(1) : text, 10);
}

inline bool is_square(const Integer& x) { return x >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0; }

inline Integer isqrt(const Integer& x) {
  if (x < 0) throw std::domain_error("isqrt of negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

inline bool fits_long(const Integer& x) { return x.fits_slong_p(); }

// Exponent conversion for symbolic work; exponents beyond int range are refused.
inline int to_exponent(const Integer& x) {
  if (!x.fits_sint_p()) throw std::overflow_error("exponent out of range: " + x.get_str());
  return static_cast<int>(x.get_si());
}

inline Integer pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational pow(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("division by zero");
    Rational inv = 1 / base;
    return pow(inv, -e);
  }
  Rational r = 1;
  Rational b = base;
  auto n = static_cast<unsigned long>(e);
  while (n) {
    if (n & 1UL) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

inline Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Positive divisors of |x| in increasing order; x must be nonzero.
inline std::vector<Integer> positive_divisors(const Integer& x) {
  Integer n = abs(x);
  if (n == 0) throw std::invalid_argument("divisors of zero");
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace mutinv
