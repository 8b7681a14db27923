#pragma once

#include <cstdlib>
#include <numeric>
#include <random>
#include <string>

#include "mutinv/mutinv.hpp"

namespace mutinv::testing {

// MUTINV_SEED overrides the default seed of randomized tests.
inline std::uint64_t test_seed() {
  if (const char* s = std::getenv("MUTINV_SEED")) return std::stoull(s);
  return 20240917;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(test_seed());
  return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline RationalFn fx(const std::string& s, std::size_t n = 2) { return parse_expression(s, n); }

inline Poly px(const std::string& s, std::size_t n = 2) {
  ExprOptions o;
  o.nvars = n;
  return parse_polynomial(s, o);
}

// Random skew-symmetrizable matrix: d_i b_ij = -d_j b_ji by construction.
inline ExchangeMatrix random_symmetrizable(std::size_t n, long entry = 3) {
  std::vector<long> d(n);
  for (auto& x : d) x = uniform(1, 3);
  std::vector<std::vector<Integer>> b(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      long m = uniform(-entry, entry);
      long g = std::gcd(d[i], d[j]);
      b[i][j] = m * d[j] / g;
      b[j][i] = -m * d[i] / g;
    }
  }
  return ExchangeMatrix::from_rows(b);
}

// Random Laurent polynomial in two variables with nonnegative integer coefficients.
inline LaurentPoly random_laurent(int terms = 4, int lo = -2, int hi = 3) {
  Poly p(2);
  for (int t = 0; t < terms; ++t) p.add_term({static_cast<int>(uniform(lo, hi)), static_cast<int>(uniform(lo, hi))}, Rational(uniform(1, 5)));
  return LaurentPoly(p);
}

}  // namespace mutinv::testing
