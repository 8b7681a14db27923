#pragma once

#include <array>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "mutinv/laurent.hpp"
#include "mutinv/seeds.hpp"

namespace mutinv {

enum class FiniteType { A1xA1, A2, B2, G2 };

inline std::string to_string(FiniteType t) {
  switch (t) {
    case FiniteType::A1xA1: return "A1xA1";
    case FiniteType::A2: return "A2";
    case FiniteType::B2: return "B2";
    case FiniteType::G2: return "G2";
  }
  throw std::logic_error("unknown finite type");
}

inline FiniteType parse_finite_type(const std::string& s) {
  for (FiniteType t : {FiniteType::A1xA1, FiniteType::A2, FiniteType::B2, FiniteType::G2})
    if (to_string(t) == s) return t;
  throw std::invalid_argument("unknown finite type '" + s + "' (expected A1xA1, A2, B2 or G2)");
}

/// [[0, m], [-n, 0]] with mn <= 3.
inline ExchangeMatrix finite_type_matrix(FiniteType t) {
  switch (t) {
    case FiniteType::A1xA1: return ExchangeMatrix::from_rows({{0, 0}, {0, 0}});
    case FiniteType::A2: return ExchangeMatrix::from_rows({{0, 1}, {-1, 0}});
    case FiniteType::B2: return ExchangeMatrix::from_rows({{0, 1}, {-2, 0}});
    case FiniteType::G2: return ExchangeMatrix::from_rows({{0, 1}, {-3, 0}});
  }
  throw std::logic_error("unknown finite type");
}

inline std::size_t finite_type_size(FiniteType t) {
  switch (t) {
    case FiniteType::A1xA1: return 4;
    case FiniteType::A2: return 10;
    case FiniteType::B2: return 6;
    case FiniteType::G2: return 8;
  }
  throw std::logic_error("unknown finite type");
}

using ClusterPair = std::array<RationalFn, 2>;

struct FiniteTypeCatalog {
  FiniteType type = FiniteType::A2;
  std::vector<ClusterPair> rows;  // ordered clusters along mu1, mu2, mu1, ... from the initial seed
  std::size_t unordered_count = 0;  // distinct clusters as unordered pairs
};

inline std::pair<RationalFn, RationalFn> unordered_key(const ClusterPair& c) {
  return c[0] < c[1] ? std::pair{c[0], c[1]} : std::pair{c[1], c[0]};
}

/// Enumerates the ordered clusters of the rank-2 finite type by alternating mutation and
/// cross-checks the set against a breadth-first search over all seeds.
inline FiniteTypeCatalog enumerate_finite_type(FiniteType type) {
  const ExchangeMatrix b = finite_type_matrix(type);
  FiniteTypeCatalog cat;
  cat.type = type;
  const Seed init = initial_seed(b);
  Seed s = init;
  std::size_t dir = 1;
  cat.rows.push_back({s.cluster[0], s.cluster[1]});
  for (std::size_t step = 0;; ++step) {
    if (step > 64) throw std::logic_error("alternating mutation did not return to the initial cluster");
    s = mutate_seed(s, dir);
    dir = 3 - dir;
    if (s.cluster == init.cluster) break;
    cat.rows.push_back({s.cluster[0], s.cluster[1]});
  }

  std::set<std::vector<RationalFn>> seen{init.cluster};
  std::deque<Seed> queue{init};
  while (!queue.empty()) {
    Seed cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t k = 1; k <= 2; ++k) {
      Seed m = mutate_seed(cur, k);
      if (seen.insert(m.cluster).second) {
        if (seen.size() > 64) throw std::logic_error("cluster search does not close");
        queue.push_back(std::move(m));
      }
    }
  }
  std::set<std::vector<RationalFn>> walked;
  std::set<std::pair<RationalFn, RationalFn>> unordered;
  for (const auto& r : cat.rows) {
    walked.insert({r[0], r[1]});
    unordered.insert(unordered_key(r));
  }
  if (walked != seen) throw std::logic_error("alternating walk misses clusters found by search");
  cat.unordered_count = unordered.size();
  return cat;
}

/// Cluster sequence used to build reductive products; 1-based row indices.
inline std::vector<std::size_t> cluster_sequence(FiniteType t) {
  switch (t) {
    case FiniteType::A1xA1: return {1, 2, 4, 3};
    case FiniteType::A2: return {1, 2, 6, 7, 5, 10, 3, 8, 4, 9};
    case FiniteType::B2: return {1, 2, 6, 3, 5, 4};
    case FiniteType::G2: return {1, 2, 8, 3, 7, 6, 5, 4};
  }
  throw std::logic_error("unknown finite type");
}

struct SequenceProduct {
  std::size_t component = 1;  // i in {1, 2}
  std::size_t prefix_length = 0;  // number of sequence entries multiplied
  RationalFn product;
  bool reductive = false;
};

struct SequenceReport {
  FiniteType type = FiniteType::A2;
  std::vector<std::size_t> sequence;
  std::vector<SequenceProduct> products;  // component 1 prefixes 2..m, then component 2
};

/// Running products of the i-th cluster components along the type's cluster sequence.
inline SequenceReport check_sequence_reductivity(FiniteType type) {
  FiniteTypeCatalog cat = enumerate_finite_type(type);
  SequenceReport rep;
  rep.type = type;
  rep.sequence = cluster_sequence(type);
  for (std::size_t comp = 1; comp <= 2; ++comp) {
    RationalFn prod = cat.rows.at(rep.sequence[0] - 1)[comp - 1];
    for (std::size_t len = 2; len <= rep.sequence.size(); ++len) {
      prod *= cat.rows.at(rep.sequence[len - 1] - 1)[comp - 1];
      SequenceProduct p;
      p.component = comp;
      p.prefix_length = len;
      p.product = prod;
      auto l = as_laurent(prod);
      p.reductive = l && is_reductive(*l).has_value();
      rep.products.push_back(std::move(p));
    }
  }
  return rep;
}

struct NamedSymmetric {
  enum class Kind { Elementary, PowerSum } kind = Kind::Elementary;
  unsigned degree = 1;
};

/// Either a named basis element or an explicit polynomial in u1..um.
using SymmetricPolynomial = std::variant<NamedSymmetric, Poly>;

inline bool is_symmetric(const Poly& p) {
  const std::size_t m = p.nvars();
  for (std::size_t i = 0; i + 1 < m; ++i) {
    Poly q(m);
    for (const auto& [e, c] : p.terms()) {
      Exponents f = e;
      std::swap(f[i], f[i + 1]);
      q.add_term(f, c);
    }
    if (q != p) return false;
  }
  return true;
}

/// Phi evaluated at the given values.
inline RationalFn evaluate_symmetric(const SymmetricPolynomial& phi, const std::vector<RationalFn>& values) {
  if (values.empty()) throw std::invalid_argument("no values for symmetric polynomial");
  const std::size_t nv = values.front().nvars();
  if (const auto* named = std::get_if<NamedSymmetric>(&phi)) {
    if (named->degree < 1) throw std::invalid_argument("symmetric basis degree must be positive");
    if (named->kind == NamedSymmetric::Kind::PowerSum) {
      RationalFn s(nv);
      for (const auto& v : values) s += pow(v, static_cast<int>(named->degree));
      return s;
    }
    if (named->degree > values.size()) return RationalFn(nv);
    std::vector<RationalFn> e(named->degree + 1, RationalFn(nv));
    e[0] = RationalFn::constant(nv, 1);
    for (const auto& v : values)
      for (std::size_t j = named->degree; j >= 1; --j) e[j] += e[j - 1] * v;
    return e[named->degree];
  }
  const Poly& p = std::get<Poly>(phi);
  if (p.nvars() != values.size()) {
    throw std::invalid_argument("symmetric polynomial has " + std::to_string(p.nvars()) + " variables, expected " +
                                std::to_string(values.size()));
  }
  return substitute(RationalFn(p), values);
}

struct InvariantSpec {
  FiniteType type = FiniteType::A2;
  SymmetricPolynomial phi = NamedSymmetric{};
  Poly f = Poly(2);  // polynomial in X1, X2
};

inline void validate(const InvariantSpec& spec) {
  if (spec.f.nvars() != 2) throw std::invalid_argument("F must be a polynomial in two variables");
  if (spec.f.has_negative_exponents()) throw std::invalid_argument("F must be a polynomial");
  if (const auto* p = std::get_if<Poly>(&spec.phi)) {
    if (p->nvars() != finite_type_size(spec.type)) {
      throw std::invalid_argument("Phi arity " + std::to_string(p->nvars()) + " does not match " +
                                  std::to_string(finite_type_size(spec.type)) + " clusters of type " +
                                  to_string(spec.type));
    }
    if (!is_symmetric(*p)) throw std::invalid_argument("Phi is not symmetric");
  }
}

/// The values F(c_{1;i}, c_{2;i}) over the catalog rows.
inline std::vector<RationalFn> invariant_arguments(const InvariantSpec& spec, const FiniteTypeCatalog& cat) {
  std::vector<RationalFn> u;
  RationalFn f(spec.f);
  for (const auto& row : cat.rows) u.push_back(substitute(f, {row[0], row[1]}));
  return u;
}

struct BuiltInvariant {
  RationalFn value;
  bool constant = false;
};

inline BuiltInvariant build_invariant(const InvariantSpec& spec) {
  validate(spec);
  FiniteTypeCatalog cat = enumerate_finite_type(spec.type);
  BuiltInvariant out;
  out.value = evaluate_symmetric(spec.phi, invariant_arguments(spec, cat));
  out.constant = out.value.is_constant();
  return out;
}

}  // namespace mutinv
