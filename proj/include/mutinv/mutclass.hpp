#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "mutinv/matrix.hpp"

namespace mutinv {

struct MutationClassReport {
  ExchangeMatrix representative;
  std::optional<std::size_t> class_size;  // empty when the budget was exceeded
  bool is_sign_equivalent = false;
  std::vector<ExchangeMatrix> members;  // BFS order; empty when the budget was exceeded
};

/// Breadth-first closure of b under all mutations, entrywise comparison.
inline MutationClassReport mutation_class(const ExchangeMatrix& b, std::size_t budget = 1024) {
  if (budget < 1) throw std::invalid_argument("budget must be at least 1");
  MutationClassReport rep;
  rep.representative = b;
  std::set<ExchangeMatrix> seen{b};
  std::vector<ExchangeMatrix> order{b};
  std::deque<ExchangeMatrix> queue{b};
  bool exceeded = false;
  while (!queue.empty() && !exceeded) {
    ExchangeMatrix cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t k = 1; k <= b.rank(); ++k) {
      ExchangeMatrix next = mutate_matrix(cur, k);
      if (seen.insert(next).second) {
        if (seen.size() > budget) {
          exceeded = true;
          break;
        }
        order.push_back(next);
        queue.push_back(std::move(next));
      }
    }
  }
  if (!exceeded) {
    rep.class_size = order.size();
    rep.is_sign_equivalent = !b.is_zero() && order.size() == 2 && seen.count(-b) == 1;
    rep.members = std::move(order);
  }
  return rep;
}

/// [B] = {B, -B}. Irreducible input uses the per-direction test mu_i(B) = -B.
inline bool check_sign_equivalent(const ExchangeMatrix& b) {
  if (b.rank() == 0 || b.is_zero()) return false;
  if (is_irreducible(b)) {
    const ExchangeMatrix neg = -b;
    for (std::size_t k = 1; k <= b.rank(); ++k)
      if (detail::mutate_raw(b, k) != neg) return false;
    return true;
  }
  try {
    return mutation_class(b, 3).is_sign_equivalent;
  } catch (const std::domain_error&) {
    return false;
  }
}

struct CatalogEntry {
  ExchangeMatrix matrix;  // representative: min of canonical forms of B and -B
  std::size_t orbit_size = 0;  // distinct matrices in the permutation orbit
  bool negation_in_orbit = false;
  std::optional<std::vector<Integer>> skew_symmetrizer;
};

struct SignEquivalentCatalog {
  std::size_t rank = 0;
  long entry_bound = 0;
  bool require_skew_symmetrizable = true;
  std::uint64_t candidates_examined = 0;
  std::vector<CatalogEntry> found;
  std::string scope;  // e.g. "complete within entry bound 4"
};

struct ClassifyOptions {
  unsigned threads = 1;
  bool require_skew_symmetrizable = true;
};

namespace detail {

constexpr std::size_t kMaxClassifyRank = 4;
using SmallMatrix = std::array<std::int64_t, kMaxClassifyRank * kMaxClassifyRank>;

inline bool small_lem3(const SmallMatrix& m, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const std::int64_t bik = m[i * n + k];
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k || j == i) continue;
        const std::int64_t bkj = m[k * n + j];
        const std::int64_t mu = m[i * n + j] + std::max<std::int64_t>(bik, 0) * bkj + bik * std::max<std::int64_t>(-bkj, 0);
        if (mu != -m[i * n + j]) return false;
      }
    }
  }
  return true;
}

inline bool small_connected(const SmallMatrix& m, std::size_t n) {
  unsigned seen = 1U, frontier = 1U;
  while (frontier) {
    unsigned next = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(frontier >> i & 1U)) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (m[i * n + j] != 0 && !(seen >> j & 1U)) next |= 1U << j;
    }
    seen |= next;
    frontier = next;
  }
  return seen == (1U << n) - 1U;
}

inline SmallMatrix small_permute(const SmallMatrix& m, std::size_t n, const std::array<std::size_t, kMaxClassifyRank>& p,
                                 std::int64_t sign) {
  SmallMatrix r{};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r[i * n + j] = sign * m[p[i] * n + p[j]];
  return r;
}

// min over sigma and global sign of the permuted matrix
inline SmallMatrix small_sign_canonical(const SmallMatrix& m, std::size_t n) {
  std::array<std::size_t, kMaxClassifyRank> p{};
  std::iota(p.begin(), p.begin() + n, 0);
  SmallMatrix best = m;
  do {
    for (std::int64_t s : {1, -1}) {
      SmallMatrix c = small_permute(m, n, p, s);
      if (std::lexicographical_compare(c.begin(), c.begin() + n * n, best.begin(), best.begin() + n * n)) best = c;
    }
  } while (std::next_permutation(p.begin(), p.begin() + n));
  return best;
}

inline ExchangeMatrix to_exchange(const SmallMatrix& m, std::size_t n) {
  std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = Integer(static_cast<long>(m[i * n + j]));
  return ExchangeMatrix::from_rows(rows);
}

}  // namespace detail

/// Representative of the orbit of b under permutations and global sign.
inline ExchangeMatrix sign_orbit_representative(const ExchangeMatrix& b) {
  return std::min(canonical_form(b), canonical_form(-b));
}

/// Exhaustive search over sign-skew-symmetric matrices with |b_ij| <= entry_bound.
inline SignEquivalentCatalog classify_irreducible_sign_equivalent(std::size_t n, long entry_bound,
                                                                  const ClassifyOptions& opts = {}) {
  using detail::SmallMatrix;
  if (n < 1 || n > detail::kMaxClassifyRank) throw std::invalid_argument("rank must be in 1..4");
  if (entry_bound < 1) throw std::invalid_argument("entry bound must be positive");
  if (entry_bound > 1000) throw std::invalid_argument("entry bound too large for exhaustive search");

  // Each off-diagonal pair (b_ij, b_ji) is either (0,0) or of opposite signs.
  std::vector<std::pair<std::int64_t, std::int64_t>> pair_choices{{0, 0}};
  for (std::int64_t s = -entry_bound; s <= entry_bound; ++s) {
    if (s == 0) continue;
    for (std::int64_t t = 1; t <= entry_bound; ++t) pair_choices.emplace_back(s, s > 0 ? -t : t);
  }
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);

  const std::uint64_t c = pair_choices.size();
  std::uint64_t total = 1;
  for (std::size_t s = 0; s < slots.size(); ++s) total *= c;

  unsigned threads = std::max(1U, opts.threads);
  std::vector<std::vector<SmallMatrix>> partial(threads);
  auto worker = [&](unsigned id) {
    for (std::uint64_t idx = id; idx < total; idx += threads) {
      SmallMatrix m{};
      std::uint64_t rest = idx;
      for (const auto& [i, j] : slots) {
        const auto& pc = pair_choices[rest % c];
        rest /= c;
        m[i * n + j] = pc.first;
        m[j * n + i] = pc.second;
      }
      if (!detail::small_lem3(m, n)) continue;
      if (n > 1 && !detail::small_connected(m, n)) continue;
      if (detail::small_sign_canonical(m, n) != m) continue;
      partial[id].push_back(m);
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  SignEquivalentCatalog cat;
  cat.rank = n;
  cat.entry_bound = entry_bound;
  cat.require_skew_symmetrizable = opts.require_skew_symmetrizable;
  cat.candidates_examined = total;
  cat.scope = "complete within entry bound " + std::to_string(entry_bound);
  std::vector<ExchangeMatrix> reps;
  for (const auto& part : partial)
    for (const auto& m : part) reps.push_back(detail::to_exchange(m, n));
  std::sort(reps.begin(), reps.end());
  for (auto& b : reps) {
    auto d = is_skew_symmetrizable(b);
    if (opts.require_skew_symmetrizable && !d) continue;
    if (!is_irreducible(b) || !check_sign_equivalent(b)) continue;
    CatalogEntry e;
    std::set<ExchangeMatrix> orbit;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      orbit.insert(Permutation(p).apply(b));
    } while (std::next_permutation(p.begin(), p.end()));
    e.orbit_size = orbit.size();
    e.negation_in_orbit = orbit.count(-b) == 1;
    e.skew_symmetrizer = std::move(d);
    e.matrix = std::move(b);
    cat.found.push_back(std::move(e));
  }
  return cat;
}

struct Decomposition {
  Permutation sigma = Permutation::identity(0);
  std::vector<ExchangeMatrix> blocks;
  std::size_t zero_block_size = 0;
};

/// permute(b, sigma) is block-diagonal: irreducible blocks, then a zero block.
inline Decomposition decompose(const ExchangeMatrix& b) {
  Decomposition d;
  std::vector<std::size_t> order, zeros;
  for (const auto& comp : support_components(b)) {
    if (comp.size() == 1) {
      zeros.push_back(comp.front());
      continue;
    }
    std::vector<std::vector<Integer>> rows(comp.size(), std::vector<Integer>(comp.size()));
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = 0; j < comp.size(); ++j) rows[i][j] = b(comp[i], comp[j]);
    d.blocks.push_back(ExchangeMatrix::from_rows(rows));
    order.insert(order.end(), comp.begin(), comp.end());
  }
  d.zero_block_size = zeros.size();
  order.insert(order.end(), zeros.begin(), zeros.end());
  d.sigma = Permutation(std::move(order));
  return d;
}

}  // namespace mutinv
