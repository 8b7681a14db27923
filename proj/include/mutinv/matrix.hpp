#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mutinv/integer.hpp"

namespace mutinv {

class ExchangeMatrix;
ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k);

namespace detail {
ExchangeMatrix mutate_raw(const ExchangeMatrix& b, std::size_t k);
}

/// Square integer matrix with zero diagonal and sign-skew-symmetric entries.
/// Entries are addressed 0-based; mutation directions are 1-based.
class ExchangeMatrix {
 public:
  ExchangeMatrix() = default;

  explicit ExchangeMatrix(std::size_t n) : n_(n), b_(n * n) {}

  static ExchangeMatrix from_rows(const std::vector<std::vector<Integer>>& rows) {
    ExchangeMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) {
        throw std::invalid_argument("exchange matrix must be square (row " + std::to_string(i + 1) + " has " +
                                    std::to_string(rows[i].size()) + " entries, expected " +
                                    std::to_string(rows.size()) + ")");
      }
      for (std::size_t j = 0; j < rows.size(); ++j) m.b_[i * m.n_ + j] = rows[i][j];
    }
    m.validate();
    return m;
  }

  static ExchangeMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Integer>> r;
    for (const auto& row : rows) {
      std::vector<Integer> v;
      for (long x : row) v.emplace_back(x);
      r.push_back(std::move(v));
    }
    return from_rows(r);
  }

  std::size_t rank() const { return n_; }

  const Integer& operator()(std::size_t i, std::size_t j) const { return b_[i * n_ + j]; }

  std::vector<std::vector<Integer>> rows() const {
    std::vector<std::vector<Integer>> r(n_, std::vector<Integer>(n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) r[i][j] = (*this)(i, j);
    return r;
  }

  bool is_zero() const {
    return std::all_of(b_.begin(), b_.end(), [](const Integer& x) { return x == 0; });
  }

  ExchangeMatrix operator-() const {
    ExchangeMatrix m(n_);
    for (std::size_t i = 0; i < b_.size(); ++i) m.b_[i] = -b_[i];
    return m;
  }

  friend bool operator==(const ExchangeMatrix& a, const ExchangeMatrix& b) { return a.n_ == b.n_ && a.b_ == b.b_; }
  friend bool operator!=(const ExchangeMatrix& a, const ExchangeMatrix& b) { return !(a == b); }

  // Rank first, then row-major lexicographic entries.
  friend bool operator<(const ExchangeMatrix& a, const ExchangeMatrix& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return std::lexicographical_compare(a.b_.begin(), a.b_.end(), b.b_.begin(), b.b_.end());
  }

  /// Text form: rows separated by ';', entries by spaces.
  std::string to_text() const {
    std::string out;
    for (std::size_t i = 0; i < n_; ++i) {
      if (i) out += "; ";
      for (std::size_t j = 0; j < n_; ++j) {
        if (j) out += ' ';
        out += (*this)(i, j).get_str();
      }
    }
    return out;
  }

  static ExchangeMatrix parse(const std::string& text) {
    std::vector<std::vector<Integer>> rows;
    std::stringstream all(text);
    std::string row_text;
    while (std::getline(all, row_text, ';')) {
      std::stringstream rs(row_text);
      std::vector<Integer> row;
      std::string tok;
      while (rs >> tok) row.push_back(parse_integer(tok));
      if (row.empty()) {
        if (!rows.empty() && all.eof()) break;
        throw std::invalid_argument("empty row in matrix text");
      }
      rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("empty matrix text");
    return from_rows(rows);
  }

 private:
  friend ExchangeMatrix detail::mutate_raw(const ExchangeMatrix&, std::size_t);
  friend class Permutation;

  void validate() const {
    for (std::size_t i = 0; i < n_; ++i) {
      if ((*this)(i, i) != 0) throw std::invalid_argument("diagonal entry " + std::to_string(i + 1) + " is nonzero");
      for (std::size_t j = i + 1; j < n_; ++j) {
        const Integer& x = (*this)(i, j);
        const Integer& y = (*this)(j, i);
        bool ok = (x == 0 && y == 0) || (sgn(x) * sgn(y) < 0);
        if (!ok) {
          throw std::invalid_argument("not sign-skew-symmetric at (" + std::to_string(i + 1) + "," +
                                      std::to_string(j + 1) + ")");
        }
      }
    }
  }

  Integer& at(std::size_t i, std::size_t j) { return b_[i * n_ + j]; }

  std::size_t n_ = 0;
  std::vector<Integer> b_;
};

/// A bijection of {0..n-1}; images[i] is sigma(i).
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t x : images_) {
      if (x >= images_.size() || seen[x]) throw std::invalid_argument("images do not form a permutation");
      seen[x] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
  }

  // Swap of two 0-based points.
  static Permutation transposition(std::size_t n, std::size_t a, std::size_t b) {
    auto p = identity(n);
    std::swap(p.images_.at(a), p.images_.at(b));
    return p;
  }

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const { return images_; }

  Permutation inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
    return Permutation(std::move(inv));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.images_ == b.images_; }

  /// Right action: entry (i,j) of the result is b_{sigma(i) sigma(j)}.
  ExchangeMatrix apply(const ExchangeMatrix& b) const {
    if (b.rank() != size()) throw std::invalid_argument("permutation size does not match matrix rank");
    ExchangeMatrix r(b.rank());
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) r.at(i, j) = b(images_[i], images_[j]);
    return r;
  }

 private:
  std::vector<std::size_t> images_;
};

inline ExchangeMatrix permute(const ExchangeMatrix& b, const Permutation& sigma) { return sigma.apply(b); }

namespace detail {

// Entrywise mutation without re-validating sign-skew-symmetry of the result.
inline ExchangeMatrix mutate_raw(const ExchangeMatrix& b, std::size_t k) {
  const std::size_t n = b.rank();
  if (k < 1 || k > n) {
    throw std::out_of_range("direction " + std::to_string(k) + " out of range 1.." + std::to_string(n));
  }
  const std::size_t c = k - 1;
  ExchangeMatrix r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == c || j == c) {
        r.at(i, j) = -b(i, j);
      } else {
        r.at(i, j) = b(i, j) + pos_part(b(i, c)) * b(c, j) + b(i, c) * pos_part(-b(c, j));
      }
    }
  }
  return r;
}

}  // namespace detail

inline ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k) {
  ExchangeMatrix r = detail::mutate_raw(b, k);
  // Mutation keeps skew-symmetrizable matrices sign-skew-symmetric; general ones may not be.
  try {
    return ExchangeMatrix::from_rows(r.rows());
  } catch (const std::invalid_argument& e) {
    throw std::domain_error(std::string("mutation result is not sign-skew-symmetric: ") + e.what());
  }
}

/// Minimal positive integer D (per connected component) with D*B skew-symmetric.
inline std::optional<std::vector<Integer>> is_skew_symmetrizable(const ExchangeMatrix& b) {
  const std::size_t n = b.rank();
  std::vector<Rational> d(n, Rational(0));
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (comp[root] >= 0) continue;
    std::vector<std::size_t> stack{root};
    comp[root] = ncomp;
    d[root] = 1;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (b(i, j) == 0) continue;
        // d_i b_ij = -d_j b_ji
        Rational want = -d[i] * Rational(b(i, j)) / Rational(b(j, i));
        want.canonicalize();
        if (comp[j] < 0) {
          comp[j] = ncomp;
          d[j] = want;
          stack.push_back(j);
        } else if (d[j] != want) {
          return std::nullopt;
        }
      }
    }
    ++ncomp;
  }
  std::vector<Integer> out(n);
  for (int c = 0; c < ncomp; ++c) {
    Integer l = 1;
    for (std::size_t i = 0; i < n; ++i)
      if (comp[i] == c) l = lcm(l, Integer(d[i].get_den()));
    Integer g = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (comp[i] == c) g = gcd(g, Integer(d[i].get_num() * (l / d[i].get_den())));
    for (std::size_t i = 0; i < n; ++i)
      if (comp[i] == c) out[i] = d[i].get_num() * (l / d[i].get_den()) / g;
  }
  return out;
}

/// Connected components of the support graph, each sorted, ordered by smallest vertex.
inline std::vector<std::vector<std::size_t>> support_components(const ExchangeMatrix& b) {
  const std::size_t n = b.rank();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t root = 0; root < n; ++root) {
    if (comp[root] >= 0) continue;
    std::vector<std::size_t> members, stack{root};
    comp[root] = static_cast<int>(out.size());
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      members.push_back(i);
      for (std::size_t j = 0; j < n; ++j) {
        if (comp[j] < 0 && (b(i, j) != 0 || b(j, i) != 0)) {
          comp[j] = comp[root];
          stack.push_back(j);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

inline bool is_irreducible(const ExchangeMatrix& b) { return support_components(b).size() <= 1; }

/// Lexicographically minimal matrix in the permutation orbit of b.
inline ExchangeMatrix canonical_form(const ExchangeMatrix& b) {
  const std::size_t n = b.rank();
  if (n > 8) throw std::invalid_argument("canonical_form is limited to rank <= 8");
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  ExchangeMatrix best = b;
  do {
    ExchangeMatrix cand = Permutation(p).apply(b);
    if (cand < best) best = std::move(cand);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

}  // namespace mutinv
