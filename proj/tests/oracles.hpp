#pragma once

#include <cmath>
#include <set>
#include <vector>

#include "mutinv/dioph.hpp"

// Brute-force solution sets, independent of mutations: each family is a quadratic in its
// first coordinate, so for every choice of the others the candidates come from an exact
// integer square root of the discriminant.
namespace mutinv::testing {

using SolutionSet = std::set<Tuple>;

inline bool exact_sqrt(long long d, long long& r) {
  if (d < 0) return false;
  r = static_cast<long long>(std::sqrt(static_cast<long double>(d)));
  while (r * r > d) --r;
  while ((r + 1) * (r + 1) <= d) ++r;
  return r * r == d;
}

// Positive integer roots of x^2 + p x + q = 0 that are <= box.
inline void add_roots(long long p, long long q, long long box, std::vector<long long>& out) {
  long long r;
  if (!exact_sqrt(p * p - 4 * q, r)) return;
  for (long long num : {-p + r, -p - r}) {
    if (num <= 0 || num % 2 != 0) continue;
    long long x = num / 2;
    if (x <= box) out.push_back(x);
  }
}

inline SolutionSet brute_force(Family f, long long k, long long box) {
  SolutionSet s;
  std::vector<long long> roots;
  auto put = [&](std::initializer_list<long long> t) {
    Tuple tu;
    for (long long x : t) tu.emplace_back(static_cast<long>(x));
    s.insert(tu);
  };
  switch (f) {
    case Family::Markov3:
      // x1^2 - k x2 x3 x1 + x2^2 + x3^2 = 0
      for (long long b = 1; b <= box; ++b)
        for (long long c = 1; c <= box; ++c) {
          roots.clear();
          add_roots(-k * b * c, b * b + c * c, box, roots);
          for (long long a : roots) put({a, b, c});
        }
      break;
    case Family::Lampe3:
      // x1^2 + (2 x2^2 + 2 x3^2 - k x2^2 x3^2) x1 + x2^4 + x3^4 = 0
      for (long long b = 1; b <= box; ++b)
        for (long long c = 1; c <= box; ++c) {
          roots.clear();
          long long b2 = b * b, c2 = c * c;
          add_roots(2 * b2 + 2 * c2 - k * b2 * c2, b2 * b2 + c2 * c2, box, roots);
          for (long long a : roots) put({a, b, c});
        }
      break;
    case Family::Rank2Markov:
      // x1^2 - k x2 x1 + x2^2 + 1 = 0
      for (long long b = 1; b <= box; ++b) {
        roots.clear();
        add_roots(-k * b, b * b + 1, box, roots);
        for (long long a : roots) put({a, b});
      }
      break;
    case Family::Rank2Quartic:
      // x1^2 + (2 - k x2^2) x1 + x2^4 + 1 = 0
      for (long long b = 1; b <= box; ++b) {
        roots.clear();
        add_roots(2 - k * b * b, b * b * b * b + 1, box, roots);
        for (long long a : roots) put({a, b});
      }
      break;
  }
  return s;
}

inline SolutionSet tree_set(const SolutionTree& t) {
  SolutionSet s;
  for (const auto& n : t.nodes) s.insert(n.tuple);
  return s;
}

}  // namespace mutinv::testing
