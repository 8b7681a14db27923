#pragma once

#include <optional>
#include <stdexcept>
#include <utility>

#include "mutinv/rational_fn.hpp"

namespace mutinv {

/// Laurent polynomial: a Poly whose exponents may be negative.
class LaurentPoly {
 public:
  explicit LaurentPoly(Poly p) : p_(std::move(p)) {}
  explicit LaurentPoly(std::size_t nvars = 0) : p_(nvars) {}

  const Poly& poly() const { return p_; }
  std::size_t nvars() const { return p_.nvars(); }
  std::size_t size() const { return p_.size(); }

  RationalFn to_rational() const { return RationalFn(p_); }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return LaurentPoly(a.p_ + b.p_); }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return LaurentPoly(a.p_ * b.p_); }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.p_ == b.p_; }

 private:
  Poly p_;
};

/// Present iff the reduced denominator is a monomial.
inline std::optional<LaurentPoly> as_laurent(const RationalFn& t) {
  if (!t.den().is_monomial()) return std::nullopt;
  const auto& [e, c] = t.den().leading();
  Exponents neg(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
  return LaurentPoly(t.num().shifted(neg) * (1 / c));
}

struct ReductivityWitness {
  std::pair<int, int> base_exponents;  // (u, v): L = f / (x1^u x2^v)
  std::pair<int, int> witness_term;  // (u', v'): a term of f with u' >= u, v' >= v
  std::pair<int, int> cofactor;  // exponent of the dominating term of L: (u'-u, v'-v)
};

/// Writes L = f / x1^u x2^v with (u, v) minimal and looks for a term of f dominating (u, v).
/// The term chosen is the graded-lex largest one.
inline std::optional<ReductivityWitness> is_reductive(const LaurentPoly& l) {
  if (l.nvars() != 2) throw std::invalid_argument("reductivity is defined for two variables");
  for (const auto& [e, c] : l.poly().terms())
    if (c < 0) throw std::invalid_argument("reductivity requires nonnegative coefficients");
  if (l.poly().is_zero()) return std::nullopt;
  Exponents m = l.poly().min_exponents();
  const int u = std::max(0, -m[0]), v = std::max(0, -m[1]);
  for (auto it = l.poly().terms().rbegin(); it != l.poly().terms().rend(); ++it) {
    const Exponents& e = it->first;
    if (e[0] >= 0 && e[1] >= 0 && (e[0] != 0 || e[1] != 0)) {
      return ReductivityWitness{{u, v}, {e[0] + u, e[1] + v}, {e[0], e[1]}};
    }
  }
  return std::nullopt;
}

}  // namespace mutinv
