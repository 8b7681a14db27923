#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mutinv/finite_type.hpp"

namespace mutinv {

/// T(x1, x2) = T(a, b) for a mutation invariant T of a rank-2 finite type.
struct FiniteTypeEquation {
  FiniteType type = FiniteType::A2;
  RationalFn invariant = RationalFn(2);
  Integer a = 1, b = 1;
};

inline FiniteTypeEquation make_equation(const InvariantSpec& spec, const Integer& a, const Integer& b) {
  return {spec.type, build_invariant(spec).value, a, b};
}

struct FiniteSolution {
  Integer x1, x2;
  std::optional<std::size_t> orbit_row;  // 1-based catalog row whose specialization at (a, b) equals it

  bool in_orbit() const { return orbit_row.has_value(); }
};

struct FiniteSolutionSet {
  Rational level;  // T(a, b)
  Integer min_bound;  // floor(T(a, b)) + 1
  Integer scan_bound;  // min coordinate bound actually scanned, derived from the witness term
  ReductivityWitness witness;
  std::vector<FiniteSolution> solutions;  // sorted by (x1, x2)
  std::vector<std::pair<Rational, Rational>> orbit;  // catalog rows specialized at (a, b)
};

namespace detail {

// Univariate Laurent polynomial in y after fixing one coordinate; exponent -> coefficient.
inline std::map<int, Rational> specialize(const Poly& l, std::size_t fixed, const Integer& value) {
  std::map<int, Rational> out;
  const Rational v(value);
  for (const auto& [e, c] : l.terms()) {
    int ef = e[fixed], ey = e[1 - fixed];
    Rational term = c * pow(v, ef);
    out[ey] += term;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline Rational evaluate_univariate(const std::map<int, Rational>& p, const Integer& y) {
  Rational s = 0, yy(y);
  for (const auto& [e, c] : p) s += c * pow(yy, e);
  return s;
}

}  // namespace detail

/// All positive integer solutions of T(x1, x2) = T(a, b).
///
/// If the witness term c*x1^p*x2^q (p, q >= 0, not both 0) of the Laurent form of T has
/// nonnegative coefficients alongside it, then T(x) >= c*min(x)^(p+q), which bounds min(x).
/// With the smaller coordinate fixed, the remaining Laurent polynomial in y is a positive
/// part (increasing) plus nonnegative terms, so the scan stops once the positive part alone
/// exceeds the level. `search_cap` limits that scan.
inline FiniteSolutionSet solve_finite_type(const FiniteTypeEquation& eq, const Integer& search_cap = 1000000) {
  if (eq.a <= 0 || eq.b <= 0) throw std::invalid_argument("initial point must be positive integers");
  if (eq.invariant.nvars() != 2) throw std::invalid_argument("invariant must be in x1, x2");
  if (eq.invariant.is_constant()) throw std::domain_error("invariant is constant");
  auto lp = as_laurent(eq.invariant);
  if (!lp) throw std::domain_error("invariant is not a Laurent polynomial: " + to_string(eq.invariant));
  for (const auto& [e, c] : lp->poly().terms())
    if (c < 0) throw std::domain_error("invariant has negative coefficients");
  auto witness = is_reductive(*lp);
  if (!witness) throw std::domain_error("invariant is not reductive, finiteness of the solution set is not guaranteed");

  FiniteSolutionSet out;
  out.witness = *witness;
  auto level = eq.invariant.evaluate({Rational(eq.a), Rational(eq.b)});
  if (!level) throw std::domain_error("invariant undefined at the initial point");
  out.level = *level;
  out.min_bound = floor_of(out.level) + 1;

  const auto [p, q] = witness->cofactor;
  Exponents we{p, q};
  const Rational c = lp->poly().terms().at(we);
  Integer m = 1;
  while (c * pow(Rational(m + 1), p + q) <= out.level) ++m;
  out.scan_bound = m;

  std::set<std::pair<Integer, Integer>> found;
  for (std::size_t fixed = 0; fixed < 2; ++fixed) {
    for (Integer v = 1; v <= out.scan_bound; ++v) {
      auto uni = detail::specialize(lp->poly(), fixed, v);
      if (uni.empty() || uni.rbegin()->first <= 0) {
        throw std::domain_error("cannot bound the scan: no positive power of x" + std::to_string(2 - fixed) +
                                " once x" + std::to_string(fixed + 1) + " is fixed");
      }
      std::map<int, Rational> positive;
      for (const auto& [e, cc] : uni)
        if (e > 0) positive[e] = cc;
      for (Integer y = v;; ++y) {
        if (y > search_cap) throw std::runtime_error("search cap " + search_cap.get_str() + " exceeded");
        if (detail::evaluate_univariate(positive, y) > out.level) break;
        if (detail::evaluate_univariate(uni, y) == out.level) found.insert(fixed == 0 ? std::pair{v, y} : std::pair{y, v});
      }
    }
  }

  const FiniteTypeCatalog cat = enumerate_finite_type(eq.type);
  for (const auto& row : cat.rows) {
    auto c1 = row[0].evaluate({Rational(eq.a), Rational(eq.b)});
    auto c2 = row[1].evaluate({Rational(eq.a), Rational(eq.b)});
    out.orbit.emplace_back(*c1, *c2);
  }
  for (const auto& [x1, x2] : found) {
    FiniteSolution s{x1, x2, std::nullopt};
    for (std::size_t i = 0; i < out.orbit.size(); ++i) {
      if (out.orbit[i].first == Rational(x1) && out.orbit[i].second == Rational(x2)) {
        s.orbit_row = i + 1;
        break;
      }
    }
    out.solutions.push_back(s);
  }
  return out;
}

}  // namespace mutinv
