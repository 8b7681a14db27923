#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mutinv/integer.hpp"

namespace mutinv {

using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
  int s = 0;
  for (int x : e) s += x;
  return s;
}

/// Graded lexicographic order with x1 > x2 > ... ; the map's last entry is the leading term.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

/// Sparse multivariate polynomial over Q. Exponents may be negative (Laurent terms).
class Poly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexLess>;

  explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rational& c) {
    Poly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }

  static Poly variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw std::out_of_range("variable index out of range");
    Exponents e(nvars, 0);
    e[i] = 1;
    return monomial(e, 1);
  }

  static Poly monomial(const Exponents& e, const Rational& c) {
    Poly p(e.size());
    p.add_term(e, c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                             [](int x) { return x == 0; });
  }

  bool is_monomial() const { return terms_.size() == 1; }

  Rational constant_term() const {
    auto it = terms_.find(Exponents(nvars_, 0));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const std::pair<const Exponents, Rational>& leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return *terms_.rbegin();
  }

  bool has_negative_exponents() const {
    for (const auto& [e, c] : terms_)
      for (int x : e)
        if (x < 0) return true;
    return false;
  }

  bool nonnegative_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
  }

  int degree_in(std::size_t v) const {
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first || e[v] > d) d = e[v];
      first = false;
    }
    return d;
  }

  int min_degree_in(std::size_t v) const {
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first || e[v] < d) d = e[v];
      first = false;
    }
    return d;
  }

  int total_degree() const {
    return terms_.empty() ? 0 : mutinv::total_degree(terms_.rbegin()->first);
  }

  /// Componentwise minimum exponent over all terms (zero polynomial: all zeros).
  Exponents min_exponents() const {
    Exponents m(nvars_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
      first = false;
    }
    return m;
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (e.size() != nvars_) throw std::invalid_argument("exponent vector length does not match variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Multiplies by the monomial x^delta.
  Poly shifted(const Exponents& delta) const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      for (std::size_t i = 0; i < nvars_; ++i) f[i] += delta[i];
      r.terms_.emplace(std::move(f), c);
    }
    return r;
  }

  /// Terms whose exponent in v equals d, with that exponent set to 0.
  Poly coefficient_in(std::size_t v, int d) const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[v] != d) continue;
      Exponents f = e;
      f[v] = 0;
      r.terms_.emplace(std::move(f), c);
    }
    return r;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  Poly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.second *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_compatible(b);
    Poly r(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Rational evaluate(const std::vector<Rational>& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("evaluation point has wrong length");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < nvars_; ++i)
        if (e[i] != 0) t *= pow(point[i], e[i]);
      sum += t;
    }
    return sum;
  }

 private:
  void check_compatible(const Poly& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("polynomials over different variable counts");
  }

  std::size_t nvars_;
  TermMap terms_;
};

inline Poly pow(const Poly& base, unsigned e) {
  Poly r = Poly::constant(base.nvars(), 1);
  Poly b = base;
  while (e) {
    if (e & 1U) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

/// Scales p to integer coefficients with content 1 and a positive leading coefficient.
inline Poly primitive_normalized(const Poly& p) {
  if (p.is_zero()) return p;
  Integer l = 1, g = 0;
  for (const auto& [e, c] : p.terms()) l = lcm(l, Integer(c.get_den()));
  for (const auto& [e, c] : p.terms()) g = gcd(g, Integer(c.get_num() * (l / c.get_den())));
  Rational s(l, g);
  s.canonicalize();
  if (p.leading().second < 0) s = -s;
  return p * s;
}

/// Exact quotient a / b, or nothing when b does not divide a.
inline std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  Poly p = a, q(a.nvars());
  const auto& [eb, cb] = b.leading();
  Exponents diff(a.nvars());
  while (!p.is_zero()) {
    const auto& [ep, cp] = p.leading();
    for (std::size_t i = 0; i < a.nvars(); ++i) {
      diff[i] = ep[i] - eb[i];
      if (diff[i] < 0) return std::nullopt;
    }
    Rational t = cp / cb;
    Exponents d = diff;
    q.add_term(d, t);
    for (const auto& [e, c] : b.terms()) {
      Exponents f = e;
      for (std::size_t i = 0; i < a.nvars(); ++i) f[i] += d[i];
      p.add_term(f, -c * t);
    }
  }
  return q;
}

namespace detail {

inline Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t v) {
  const int db = b.degree_in(v);
  const Poly lcb = b.coefficient_in(v, db);
  Poly r = a;
  while (!r.is_zero() && r.degree_in(v) >= db) {
    const int dr = r.degree_in(v);
    Exponents shift(a.nvars(), 0);
    shift[v] = dr - db;
    r = lcb * r - r.coefficient_in(v, dr) * b.shifted(shift);
  }
  return r;
}

}  // namespace detail

Poly gcd(const Poly& a, const Poly& b);

/// gcd of the coefficients of p viewed as a polynomial in variable v.
inline Poly content_in(const Poly& p, std::size_t v) {
  const int lo = p.min_degree_in(v), hi = p.degree_in(v);
  Poly g(p.nvars());
  for (int d = lo; d <= hi; ++d) {
    Poly c = p.coefficient_in(v, d);
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

inline Poly primitive_part_in(const Poly& p, std::size_t v) {
  Poly c = content_in(p, v);
  auto q = divide_exact(p, c);
  if (!q) throw std::logic_error("content does not divide polynomial");
  return *q;
}

/// Greatest common divisor over Q, normalized by primitive_normalized.
inline Poly gcd(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("gcd of polynomials over different variable counts");
  if (a.has_negative_exponents() || b.has_negative_exponents())
    throw std::invalid_argument("gcd requires polynomials without negative exponents");
  if (a.is_zero()) return primitive_normalized(b);
  if (b.is_zero()) return primitive_normalized(a);
  const std::size_t n = a.nvars();
  Exponents ma = a.min_exponents(), mb = b.min_exponents(), m(n), na(n), nb(n);
  for (std::size_t i = 0; i < n; ++i) {
    m[i] = std::min(ma[i], mb[i]);
    na[i] = -ma[i];
    nb[i] = -mb[i];
  }
  Poly a1 = a.shifted(na), b1 = b.shifted(nb);
  const Poly mono = Poly::monomial(m, 1);
  if (a1.is_constant() || b1.is_constant()) return mono;

  std::size_t v = n;
  for (std::size_t i = 0; i < n && v == n; ++i)
    if (a1.degree_in(i) > 0 || b1.degree_in(i) > 0) v = i;
  if (a1.degree_in(v) == 0) return primitive_normalized(gcd(a1, content_in(b1, v)).shifted(m));
  if (b1.degree_in(v) == 0) return primitive_normalized(gcd(content_in(a1, v), b1).shifted(m));

  Poly ca = content_in(a1, v), cb = content_in(b1, v);
  Poly c = gcd(ca, cb);
  Poly pa = primitive_normalized(*divide_exact(a1, ca)), pb = primitive_normalized(*divide_exact(b1, cb));
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  while (true) {
    Poly r = detail::pseudo_remainder(pa, pb, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) {
      pb = Poly::constant(n, 1);
      break;
    }
    pa = std::move(pb);
    pb = primitive_normalized(primitive_part_in(r, v));  // integer content 1 keeps coefficients small
  }
  return primitive_normalized((c * pb).shifted(m));
}

struct VariableNames {
  std::string prefix = "x";
  std::string name(std::size_t i) const { return prefix + std::to_string(i + 1); }
};

namespace detail {

inline std::string monomial_text(const Exponents& e, const VariableNames& names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names.name(i);
    if (e[i] != 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

}  // namespace detail

/// Terms in decreasing graded-lex order, e.g. "x1^2*x2 - 3*x1 + 1/2".
inline std::string to_string(const Poly& p, const VariableNames& names = {}) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    std::string mono = detail::monomial_text(e, names);
    std::string coef = to_string(mag);
    bool frac = mag.get_den() != 1;
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mono.empty()) {
      out += coef;
    } else if (mag == 1) {
      out += mono;
    } else {
      out += (frac ? "(" + coef + ")" : coef) + "*" + mono;
    }
  }
  return out;
}

}  // namespace mutinv
