#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mutinv/dioph.hpp"

namespace mutinv {

/// F(T(x)) = F(t), with T the family's invariant and F a univariate integer polynomial.
struct FComposed {
  Family base = Family::Markov3;
  Poly f = Poly(1);
  Integer t;
};

struct NonMonicError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Invariant values for which the base family has positive solutions.
inline std::vector<Integer> admissible_values(Family f) {
  switch (f) {
    case Family::Markov3: return {1, 3};
    case Family::Lampe3: return {7};
    case Family::Rank2Markov: return {3};
    case Family::Rank2Quartic: return {5};
  }
  throw std::logic_error("unknown family");
}

struct FComposedDecision {
  bool solvable = false;
  Integer f_of_t;
  std::vector<Integer> integer_roots;  // positive integer k with F(k) = F(t)
  std::vector<Integer> admissible_hits;  // those that are admissible
  std::vector<Tuple> fundamental;  // generators of the solution set
  std::string summary;
};

namespace detail {

inline Rational eval_univariate(const Poly& f, const Rational& x) { return f.evaluate({x}); }

// Positive rational roots of an integer polynomial, by the rational root theorem.
inline std::vector<Rational> positive_rational_roots(const Poly& g) {
  if (g.is_zero()) throw std::invalid_argument("zero polynomial has every root");
  const int low = g.min_degree_in(0);
  const Integer lead = g.leading().second.get_num();
  Integer constant = g.coefficient_in(0, low).constant_term().get_num();
  std::set<Rational> roots;
  for (const auto& p : positive_divisors(abs(constant))) {
    for (const auto& q : positive_divisors(abs(lead))) {
      Rational r(p, q);
      r.canonicalize();
      if (eval_univariate(g, r) == 0) roots.insert(r);
    }
  }
  return {roots.begin(), roots.end()};
}

inline void check_integer_univariate(const Poly& f) {
  if (f.nvars() != 1) throw std::invalid_argument("F must be a polynomial in one variable X");
  if (f.has_negative_exponents()) throw std::invalid_argument("F must be a polynomial");
  if (f.is_constant()) throw std::invalid_argument("F must be non-constant");
  for (const auto& [e, c] : f.terms())
    if (c.get_den() != 1) throw std::invalid_argument("F must have integer coefficients");
}

}  // namespace detail

/// Decides F(T(x)) = F(t) for monic F: T(x) is then an integer root of F(X) - F(t), and
/// the equation reduces to the base family at each admissible root.
inline FComposedDecision solve_f_composed(const FComposed& spec) {
  detail::check_integer_univariate(spec.f);
  const Rational ft = detail::eval_univariate(spec.f, Rational(spec.t));
  const Poly g = spec.f - Poly::constant(1, ft);
  const auto roots = detail::positive_rational_roots(g);

  if (spec.f.leading().second != 1) {
    std::string msg = "F is not monic (leading coefficient " + to_string(spec.f.leading().second) +
                      "); the invariant value need not be an integer, so solutions may lie outside every orbit";
    std::vector<Rational> fractional;
    for (const auto& r : roots)
      if (r.get_den() != 1) fractional.push_back(r);
    for (const auto& r : fractional) {
      msg += "; F(X) - F(t) has the non-integral root " + to_string(r);
      std::vector<Tuple> hits;
      const long box = arity(spec.base) == 2 ? 12 : 8;
      std::vector<long> x(arity(spec.base), 1);
      while (true) {
        Tuple tup(x.begin(), x.end());
        if (invariant_value(spec.base, tup) == r) hits.push_back(tup);
        std::size_t i = 0;
        while (i < x.size() && x[i] == box) x[i++] = 1;
        if (i == x.size()) break;
        ++x[i];
      }
      std::sort(hits.begin(), hits.end());
      if (!hits.empty()) {
        msg += ", attained at";
        for (const auto& h : hits) msg += " " + to_string(h);
      }
    }
    throw NonMonicError(msg);
  }

  FComposedDecision d;
  d.f_of_t = ft.get_num();
  const auto adm = admissible_values(spec.base);
  for (const auto& r : roots) {
    if (r.get_den() != 1) throw std::logic_error("monic integer polynomial with a non-integral rational root");
    Integer k = r.get_num();
    d.integer_roots.push_back(k);
    if (std::find(adm.begin(), adm.end(), k) != adm.end()) {
      d.admissible_hits.push_back(k);
      for (const auto& s : fundamental_solutions(spec.base, k)) d.fundamental.push_back(s);
    }
  }
  d.solvable = !d.admissible_hits.empty();
  if (d.solvable) {
    d.summary = "solvable: F(t) = F(k) for admissible k in {";
    for (std::size_t i = 0; i < d.admissible_hits.size(); ++i) d.summary += (i ? "," : "") + d.admissible_hits[i].get_str();
    d.summary += "}, solutions generated from";
    for (const auto& s : d.fundamental) d.summary += " " + to_string(s);
  } else {
    d.summary = "unsolvable: F(t) = " + d.f_of_t.get_str() + " is not F(k) for any admissible k";
  }
  return d;
}

}  // namespace mutinv
