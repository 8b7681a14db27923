#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mutinv/poly.hpp"

namespace mutinv {

/// Reduced fraction num/den of polynomials over Q. The denominator is primitive with
/// integer coefficients and a positive leading coefficient, so equal functions have
/// identical representations.
class RationalFn {
 public:
  explicit RationalFn(std::size_t nvars = 0) : num_(nvars), den_(Poly::constant(nvars, 1)) {}

  RationalFn(const Poly& num, const Poly& den) : num_(num), den_(den) {
    if (num.nvars() != den.nvars()) throw std::invalid_argument("numerator and denominator variable counts differ");
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    reduce();
  }

  /// Accepts Laurent input (negative exponents move to the denominator).
  explicit RationalFn(const Poly& p) : RationalFn(split_laurent(p)) {}

  static RationalFn constant(std::size_t nvars, const Rational& c) { return RationalFn(Poly::constant(nvars, c)); }
  static RationalFn variable(std::size_t nvars, std::size_t i) { return RationalFn(Poly::variable(nvars, i)); }

  std::size_t nvars() const { return num_.nvars(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool has_monomial_denominator() const { return den_.is_monomial(); }

  RationalFn operator-() const { return raw(-num_, den_); }

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    if (a.den_ == b.den_) return RationalFn(a.num_ + b.num_, a.den_);
    return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
  RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
  RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }
  RationalFn& operator/=(const RationalFn& o) { return *this = *this / o; }

  friend bool operator==(const RationalFn& a, const RationalFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

  // Arbitrary but deterministic order, used for sorting and sets.
  friend bool operator<(const RationalFn& a, const RationalFn& b) {
    if (a.num_ != b.num_) return poly_less(a.num_, b.num_);
    return poly_less(a.den_, b.den_);
  }

  /// Value at a point, or nothing when the denominator vanishes there.
  std::optional<Rational> evaluate(const std::vector<Rational>& point) const {
    Rational d = den_.evaluate(point);
    if (d == 0) return std::nullopt;
    Rational r = num_.evaluate(point) / d;
    r.canonicalize();
    return r;
  }

 private:
  static RationalFn raw(Poly num, Poly den) {
    RationalFn r(num.nvars());
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }

  static bool poly_less(const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    auto ia = a.terms().rbegin();
    auto ib = b.terms().rbegin();
    GrlexLess less;
    for (; ia != a.terms().rend(); ++ia, ++ib) {
      if (ia->first != ib->first) return less(ia->first, ib->first);
      if (ia->second != ib->second) return ia->second < ib->second;
    }
    return false;
  }

  static RationalFn split_laurent(const Poly& p) {
    Exponents m = p.min_exponents(), shift(p.nvars()), den(p.nvars());
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      shift[i] = m[i] < 0 ? -m[i] : 0;
      den[i] = shift[i];
    }
    return raw(p.shifted(shift), Poly::monomial(den, 1));
  }

  void reduce() {
    const std::size_t n = num_.nvars();
    if (num_.is_zero()) {
      den_ = Poly::constant(n, 1);
      return;
    }
    if (num_.has_negative_exponents() || den_.has_negative_exponents()) {
      RationalFn a(num_), b(den_);
      num_ = a.num_ * b.den_;
      den_ = a.den_ * b.num_;
    }
    // Common monomial factor.
    Exponents mn = num_.min_exponents(), md = den_.min_exponents(), s(n);
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = -std::min(mn[i], md[i]);
      any = any || s[i] != 0;
    }
    if (any) {
      num_ = num_.shifted(s);
      den_ = den_.shifted(s);
    }
    if (!den_.is_monomial()) {
      // Cheap attempt: the non-monomial part of the denominator divides the numerator.
      Exponents dm = den_.min_exponents(), neg(n);
      for (std::size_t i = 0; i < n; ++i) neg[i] = -dm[i];
      Poly core = den_.shifted(neg);
      if (auto q = divide_exact(num_, core)) {
        num_ = std::move(*q);
        den_ = Poly::monomial(dm, 1);
      } else {
        Poly g = gcd(num_, den_);
        if (!g.is_constant()) {
          num_ = *divide_exact(num_, g);
          den_ = *divide_exact(den_, g);
        }
      }
    }
    Poly nd = primitive_normalized(den_);
    Rational scale = nd.leading().second / den_.leading().second;
    num_ *= scale;
    den_ = std::move(nd);
  }

  Poly num_, den_;
};

inline RationalFn pow(const RationalFn& base, int e) {
  if (e < 0) {
    if (base.is_zero()) throw std::domain_error("negative power of zero");
    return pow(RationalFn(base.den(), base.num()), -e);
  }
  return RationalFn(pow(base.num(), static_cast<unsigned>(e)), pow(base.den(), static_cast<unsigned>(e)));
}

/// Composition T(images) as an unreduced pair (numerator, denominator).
inline std::pair<Poly, Poly> compose_fraction(const RationalFn& t, const std::vector<RationalFn>& images) {
  const std::size_t n = t.nvars();
  if (images.size() != n) throw std::invalid_argument("substitution needs one image per variable");
  if (n == 0) return {t.num(), t.den()};
  const std::size_t m = images.front().nvars();
  for (const auto& img : images)
    if (img.nvars() != m) throw std::invalid_argument("substitution images over different variable counts");
  // Clear denominators: every variable is raised to at most E_i in num and den.
  std::vector<int> top(n, 0);
  for (std::size_t i = 0; i < n; ++i) top[i] = std::max(t.num().degree_in(i), t.den().degree_in(i));
  std::vector<std::vector<Poly>> pn(n), pd(n);
  for (std::size_t i = 0; i < n; ++i) {
    pn[i].push_back(Poly::constant(m, 1));
    pd[i].push_back(Poly::constant(m, 1));
    for (int e = 1; e <= top[i]; ++e) {
      pn[i].push_back(pn[i].back() * images[i].num());
      pd[i].push_back(pd[i].back() * images[i].den());
    }
  }
  auto image_of = [&](const Poly& p) {
    Poly out(m);
    for (const auto& [e, c] : p.terms()) {
      Poly term = Poly::constant(m, c);
      for (std::size_t i = 0; i < n; ++i) {
        if (e[i] > 0) term *= pn[i][e[i]];
        if (top[i] - e[i] > 0) term *= pd[i][top[i] - e[i]];
      }
      out += term;
    }
    return out;
  };
  return {image_of(t.num()), image_of(t.den())};
}

/// Exact composition T(images), reduced.
inline RationalFn substitute(const RationalFn& t, const std::vector<RationalFn>& images) {
  auto [num, den] = compose_fraction(t, images);
  if (den.is_zero()) throw std::domain_error("substitution produces a zero denominator");
  return RationalFn(num, den);
}

/// True when T(images) equals T, checked by cross-multiplication.
inline bool is_fixed_by(const RationalFn& t, const std::vector<RationalFn>& images) {
  auto [num, den] = compose_fraction(t, images);
  if (den.is_zero()) throw std::domain_error("substitution produces a zero denominator");
  return num * t.den() == den * t.num();
}

inline std::string to_string(const RationalFn& f, const VariableNames& names = {}) {
  if (f.is_polynomial()) {
    Rational d = f.den().constant_term();
    return to_string(f.num() * (1 / d), names);
  }
  std::string n = to_string(f.num(), names);
  std::string d = to_string(f.den(), names);
  if (f.num().size() > 1) n = "(" + n + ")";
  if (f.den().size() > 1 || d.find('*') != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace mutinv
