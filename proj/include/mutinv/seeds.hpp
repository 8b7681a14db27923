#pragma once

#include <deque>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mutinv/mutclass.hpp"
#include "mutinv/rational_fn.hpp"

namespace mutinv {

struct Seed {
  std::vector<RationalFn> cluster;
  ExchangeMatrix matrix;
  std::vector<std::size_t> word;  // reduced mutation word from the initial seed, 1-based directions
};

inline Seed initial_seed(const ExchangeMatrix& b) {
  Seed s;
  s.matrix = b;
  for (std::size_t i = 0; i < b.rank(); ++i) s.cluster.push_back(RationalFn::variable(b.rank(), i));
  return s;
}

/// Exchange relation x_k' = (prod x_j^[b_jk]+ + prod x_j^[-b_jk]+) / x_k, matrix mutated alongside.
inline Seed mutate_seed(const Seed& s, std::size_t k) {
  const std::size_t n = s.matrix.rank();
  if (k < 1 || k > n) {
    throw std::out_of_range("direction " + std::to_string(k) + " out of range 1.." + std::to_string(n));
  }
  const std::size_t c = k - 1;
  RationalFn plus = RationalFn::constant(n, 1), minus = RationalFn::constant(n, 1);
  for (std::size_t j = 0; j < n; ++j) {
    const Integer& bjk = s.matrix(j, c);
    if (bjk > 0) plus *= pow(s.cluster[j], to_exponent(bjk));
    if (bjk < 0) minus *= pow(s.cluster[j], to_exponent(-bjk));
  }
  Seed r;
  r.cluster = s.cluster;
  r.cluster[c] = (plus + minus) / s.cluster[c];
  r.matrix = mutate_matrix(s.matrix, k);
  r.word = s.word;
  if (!r.word.empty() && r.word.back() == k) {
    r.word.pop_back();
  } else {
    r.word.push_back(k);
  }
  return r;
}

inline Seed apply_word(const Seed& s, const std::vector<std::size_t>& word) {
  Seed r = s;
  for (std::size_t k : word) r = mutate_seed(r, k);
  return r;
}

struct InvariantCheck {
  bool holds = true;
  std::optional<std::vector<std::size_t>> counterexample;
  std::size_t depth = 0;
  std::size_t seeds_checked = 0;
  bool sign_equivalent = false;
  bool proven = false;  // sign-equivalent matrix and depth >= 1: invariance in every direction suffices
};

/// Checks T(cluster) = T on every seed reachable by a reduced word of length <= depth.
/// Words are visited shortest first, then lexicographically.
inline InvariantCheck verify_invariant(const RationalFn& t, const ExchangeMatrix& b, std::size_t depth) {
  if (t.nvars() != b.rank()) throw std::invalid_argument("invariant and matrix have different variable counts");
  if (t.is_constant()) throw std::invalid_argument("invariant must be non-constant");
  InvariantCheck out;
  out.depth = depth;
  out.sign_equivalent = check_sign_equivalent(b);
  std::deque<Seed> frontier{initial_seed(b)};
  for (std::size_t level = 1; level <= depth; ++level) {
    std::deque<Seed> next;
    for (const Seed& s : frontier) {
      for (std::size_t k = 1; k <= b.rank(); ++k) {
        if (!s.word.empty() && s.word.back() == k) continue;
        Seed m = mutate_seed(s, k);
        ++out.seeds_checked;
        if (!is_fixed_by(t, m.cluster)) {
          out.holds = false;
          out.counterexample = m.word;
          return out;
        }
        next.push_back(std::move(m));
      }
    }
    frontier = std::move(next);
  }
  out.proven = out.sign_equivalent && depth >= 1;
  return out;
}

}  // namespace mutinv
