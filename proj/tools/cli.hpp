#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mutinv/mutinv.hpp"

namespace mutinv::cli {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline unsigned default_threads() {
  if (const char* env = std::getenv("MUTINV_THREADS")) {
    try {
      long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("MUTINV_THREADS must be a positive integer, got '") + env + "'");
  }
  return 1;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Matrix from a file: JSON {"rows": ...}, or text with rows on separate lines or separated by ';'.
/// '#' starts a comment.
inline ExchangeMatrix load_matrix(const std::string& path) {
  std::string text = read_file(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return matrix_from_json(Json::parse(text));
  std::stringstream in(text);
  std::string line, joined;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r;") == std::string::npos) continue;
    if (!joined.empty()) joined += ';';
    joined += line;
  }
  return ExchangeMatrix::parse(joined);
}

inline ExchangeMatrix matrix_arg(const std::string& file, const std::string& rows) {
  if (!file.empty() && !rows.empty()) throw UsageError("give --matrix or --rows, not both");
  if (!rows.empty()) return ExchangeMatrix::parse(rows);
  if (!file.empty()) return load_matrix(file);
  throw UsageError("a matrix is required (--matrix FILE or --rows \"0 1; -1 0\")");
}

inline std::vector<std::size_t> parse_word(const std::string& s) {
  std::vector<std::size_t> w;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789 ") != std::string::npos) throw UsageError("bad direction '" + tok + "'");
    w.push_back(std::stoul(tok));
  }
  if (w.empty()) throw UsageError("empty direction list");
  return w;
}

inline Tuple parse_tuple(const std::string& s) {
  Tuple t;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) t.push_back(parse_integer(tok));
  return t;
}

inline std::string word_text(const std::vector<std::size_t>& w) {
  if (w.empty()) return "(empty)";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + ("mu" + std::to_string(w[i]));
  return s;
}

// "e2", "p3" or an explicit symmetric polynomial in u1..um.
inline SymmetricPolynomial parse_phi(const std::string& s, std::size_t m) {
  if (s.size() >= 2 && (s[0] == 'e' || s[0] == 'p') && s.find_first_not_of("0123456789", 1) == std::string::npos) {
    NamedSymmetric n;
    n.kind = s[0] == 'e' ? NamedSymmetric::Kind::Elementary : NamedSymmetric::Kind::PowerSum;
    n.degree = static_cast<unsigned>(std::stoul(s.substr(1)));
    return n;
  }
  ExprOptions o;
  o.nvars = m;
  o.prefixes = {"u"};
  return parse_polynomial(s, o);
}

/// Runs one subcommand. Exit status: 0 success, 1 domain refusal, 2 usage error.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mutation invariants, sign-equivalent exchange matrices and cluster Diophantine equations", "mutinv"};
  app.require_subcommand(1);

  unsigned threads = 0;
  bool json = false;
  std::string matrix_file, rows_text;

  auto* classify = app.add_subcommand("classify", "Irreducible sign-equivalent exchange matrices up to permutation and sign");
  std::size_t rank = 0;
  long bound = 0;
  bool any_matrix = false;
  classify->add_option("--rank", rank, "Rank n (1..4)")->required();
  classify->add_option("--bound", bound, "Maximum absolute entry")->required()->check(CLI::PositiveNumber);
  classify->add_flag("--allow-non-symmetrizable", any_matrix, "Also search sign-skew-symmetric matrices that are not skew-symmetrizable");
  classify->add_option("--threads", threads, "Worker threads (default: MUTINV_THREADS or 1)")->check(CLI::PositiveNumber);
  classify->add_flag("--json", json, "JSON output");

  auto* mutate = app.add_subcommand("mutate", "Mutate an exchange matrix along a word of directions");
  std::string word_arg;
  mutate->add_option("--matrix", matrix_file, "Matrix file");
  mutate->add_option("--rows", rows_text, "Matrix text, rows separated by ';'");
  mutate->add_option("--dir", word_arg, "Directions, comma separated (1-based)")->required();
  mutate->add_flag("--json", json, "JSON output");

  auto* enumerate = app.add_subcommand("enumerate", "Clusters of a rank-2 finite type, or the mutation class of a matrix");
  std::string type_arg;
  std::size_t budget = 1024;
  enumerate->add_option("--type", type_arg, "A1xA1, A2, B2 or G2");
  enumerate->add_option("--matrix", matrix_file, "Matrix file (mutation class)");
  enumerate->add_option("--rows", rows_text, "Matrix text (mutation class)");
  enumerate->add_option("--budget", budget, "Class size budget")->check(CLI::PositiveNumber);
  enumerate->add_flag("--json", json, "JSON output");

  auto* verify = app.add_subcommand("verify-invariant", "Check a rational function is fixed by mutations");
  std::string expr_arg;
  std::size_t depth = 1;
  verify->add_option("--matrix", matrix_file, "Matrix file");
  verify->add_option("--rows", rows_text, "Matrix text");
  verify->add_option("--expr", expr_arg, "Rational function in x1..xn")->required();
  verify->add_option("--depth", depth, "Reduced word length to explore");

  auto* solve = app.add_subcommand("solve", "Decide solvability of a Diophantine family, optionally composed with F");
  std::string family_arg, k_arg, compose_arg, t_arg;
  solve->add_option("--family", family_arg, "markov3, lampe3, rank2markov or rank2quartic")->required();
  solve->add_option("--k", k_arg, "Parameter k");
  solve->add_option("--compose", compose_arg, "Univariate integer polynomial F in X");
  solve->add_option("--t", t_arg, "Right side F(t)");
  solve->add_flag("--json", json, "JSON output");

  auto* solve_finite = app.add_subcommand("solve-finite", "All positive solutions of T(x1,x2) = T(a,b) for a finite-type invariant");
  std::string phi_arg = "e1", f_arg, invariant_arg, a_arg = "1", b_arg = "1";
  solve_finite->add_option("--type", type_arg, "A1xA1, A2, B2 or G2")->required();
  solve_finite->add_option("--phi", phi_arg, "e<d>, p<d> or a symmetric polynomial in u1..um");
  solve_finite->add_option("--f", f_arg, "Polynomial F in X1, X2");
  solve_finite->add_option("--invariant", invariant_arg, "Invariant T in x1, x2 given directly");
  solve_finite->add_option("--a", a_arg, "Initial point, first coordinate");
  solve_finite->add_option("--b", b_arg, "Initial point, second coordinate");
  solve_finite->add_flag("--json", json, "JSON output");

  auto* tree = app.add_subcommand("tree", "Solution tree from the fundamental solution up to a bound");
  std::string bound_arg;
  bool sorted = false;
  tree->add_option("--family", family_arg, "Family")->required();
  tree->add_option("--k", k_arg, "Parameter k")->required();
  tree->add_option("--bound", bound_arg, "Maximum coordinate")->required();
  tree->add_flag("--sorted", sorted, "List distinct solutions with coordinates sorted decreasingly");
  tree->add_flag("--json", json, "JSON output");

  auto* member = app.add_subcommand("member", "Mutation word reaching a tuple from the fundamental solution");
  std::string tuple_arg;
  member->add_option("--family", family_arg, "Family")->required();
  member->add_option("--k", k_arg, "Parameter k")->required();
  member->add_option("--tuple", tuple_arg, "Comma separated coordinates")->required();
  member->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (!app.get_subcommands().empty()) err << "run '" << app.get_subcommands().front()->get_name() << " --help' for usage\n";
    else err << "run --help for usage\n";
    return 2;
  }

  try {
    if (*classify) {
      ClassifyOptions opts;
      opts.threads = threads ? threads : default_threads();
      opts.require_skew_symmetrizable = !any_matrix;
      auto cat = classify_irreducible_sign_equivalent(rank, bound, opts);
      if (json) {
        out << catalog_to_json(cat).dump(2) << "\n";
      } else {
        out << "rank " << cat.rank << ", entries bounded by " << cat.entry_bound << ": " << cat.found.size()
            << " representative(s), " << cat.scope << "\n";
        for (const auto& e : cat.found) {
          out << "  [" << e.matrix.to_text() << "]  orbit " << e.orbit_size;
          if (e.skew_symmetrizer) {
            out << "  D = diag(";
            for (std::size_t i = 0; i < e.skew_symmetrizer->size(); ++i) out << (i ? "," : "") << (*e.skew_symmetrizer)[i];
            out << ")";
          }
          out << "\n";
        }
      }
      return 0;
    }
    if (*mutate) {
      ExchangeMatrix b = matrix_arg(matrix_file, rows_text);
      auto word = parse_word(word_arg);
      for (std::size_t k : word) {
        if (k < 1 || k > b.rank()) throw UsageError("direction " + std::to_string(k) + " outside 1.." + std::to_string(b.rank()));
      }
      for (std::size_t k : word) b = mutate_matrix(b, k);
      if (json) out << matrix_to_json(b).dump() << "\n";
      else out << b.to_text() << "\n";
      return 0;
    }
    if (*enumerate) {
      if (!type_arg.empty()) {
        if (!matrix_file.empty() || !rows_text.empty()) throw UsageError("give --type or a matrix, not both");
        FiniteType t = parse_finite_type(type_arg);
        auto cat = enumerate_finite_type(t);
        if (json) {
          Json rows = Json::array();
          for (const auto& r : cat.rows) rows.push_back(Json::array({to_string(r[0]), to_string(r[1])}));
          out << Json{{"type", to_string(t)}, {"clusters", rows}, {"unordered", cat.unordered_count}}.dump(2) << "\n";
        } else {
          out << to_string(t) << ": " << cat.rows.size() << " clusters (" << cat.unordered_count << " as unordered pairs)\n";
          for (std::size_t i = 0; i < cat.rows.size(); ++i)
            out << "  " << i + 1 << ": (" << to_string(cat.rows[i][0]) << ", " << to_string(cat.rows[i][1]) << ")\n";
        }
        return 0;
      }
      ExchangeMatrix b = matrix_arg(matrix_file, rows_text);
      auto rep = mutation_class(b, budget);
      if (json) {
        Json members = Json::array();
        for (const auto& m : rep.members) members.push_back(matrix_to_json(m));
        out << Json{{"size", rep.class_size ? Json(*rep.class_size) : Json(nullptr)},
                    {"sign_equivalent", rep.is_sign_equivalent},
                    {"members", members}}
                   .dump(2)
            << "\n";
      } else if (!rep.class_size) {
        out << "mutation class exceeds budget " << budget << "\n";
      } else {
        out << "mutation class of size " << *rep.class_size << (rep.is_sign_equivalent ? " (sign-equivalent)" : "") << "\n";
        for (const auto& m : rep.members) out << "  [" << m.to_text() << "]\n";
      }
      return 0;
    }
    if (*verify) {
      ExchangeMatrix b = matrix_arg(matrix_file, rows_text);
      RationalFn t = parse_expression(expr_arg, b.rank());
      auto r = verify_invariant(t, b, depth);
      out << "invariant: " << (r.holds ? "true" : "false") << "\n";
      out << "seeds checked: " << r.seeds_checked << " (reduced words up to length " << r.depth << ")\n";
      if (r.counterexample) out << "counterexample word: " << word_text(*r.counterexample) << "\n";
      if (r.holds && r.proven) out << "sign-equivalent matrix: invariance in every direction implies invariance on all seeds\n";
      return 0;
    }
    if (*solve) {
      Family f = parse_family(family_arg);
      if (!compose_arg.empty()) {
        if (t_arg.empty()) throw UsageError("--compose needs --t");
        ExprOptions o;
        o.nvars = 1;
        o.prefixes = {"X"};
        FComposed spec{f, parse_polynomial(compose_arg, o), parse_integer(t_arg)};
        FComposedDecision d;
        try {
          d = solve_f_composed(spec);
        } catch (const NonMonicError& e) {
          err << "refused: " << e.what() << "\n";
          return 1;
        }
        if (json) {
          Json roots = Json::array(), fund = Json::array();
          for (const auto& r : d.admissible_hits) roots.push_back(integer_to_json(r));
          for (const auto& s : d.fundamental) fund.push_back(tuple_to_json(s));
          out << Json{{"solvable", d.solvable}, {"admissible", roots}, {"fundamental", fund}, {"summary", d.summary}}.dump(2)
              << "\n";
        } else {
          out << d.summary << "\n";
        }
        return 0;
      }
      if (k_arg.empty()) throw UsageError("solve needs --k (or --compose and --t)");
      Decision d = decide(f, parse_integer(k_arg));
      if (json) {
        Json steps = Json::array(), fund = Json::array();
        for (const auto& s : d.certificate) steps.push_back(Json{{"tag", s.tag}, {"claim", s.claim}, {"holds", s.holds}});
        for (const auto& s : d.fundamental) fund.push_back(tuple_to_json(s));
        out << Json{{"family", to_string(f)}, {"k", integer_to_json(d.k)}, {"solvable", d.solvable},
                    {"fundamental", fund}, {"certificate", steps}}
                   .dump(2)
            << "\n";
      } else {
        out << equation_text(f) << " with k=" << d.k << ": " << d.summary << "\n";
        for (const auto& s : d.certificate) out << "  [" << s.tag << "] " << (s.holds ? "ok  " : "FAIL ") << s.claim << "\n";
      }
      return 0;
    }
    if (*solve_finite) {
      FiniteType t = parse_finite_type(type_arg);
      FiniteTypeEquation eq;
      eq.type = t;
      eq.a = parse_integer(a_arg);
      eq.b = parse_integer(b_arg);
      if (!invariant_arg.empty()) {
        if (!f_arg.empty()) throw UsageError("give --invariant or --f, not both");
        eq.invariant = parse_expression(invariant_arg, 2);
      } else {
        if (f_arg.empty()) throw UsageError("solve-finite needs --f or --invariant");
        ExprOptions o;
        o.nvars = 2;
        o.prefixes = {"X"};
        InvariantSpec spec{t, parse_phi(phi_arg, finite_type_size(t)), parse_polynomial(f_arg, o)};
        eq.invariant = build_invariant(spec).value;
      }
      FiniteSolutionSet s;
      try {
        s = solve_finite_type(eq);
      } catch (const std::domain_error& e) {
        err << "refused: " << e.what() << "\n";
        return 1;
      }
      if (json) {
        Json sols = Json::array();
        for (const auto& x : s.solutions) {
          sols.push_back(Json{{"x", Json::array({integer_to_json(x.x1), integer_to_json(x.x2)})},
                              {"orbit_row", x.orbit_row ? Json(*x.orbit_row) : Json(nullptr)}});
        }
        out << Json{{"invariant", to_string(eq.invariant)}, {"level", to_string(s.level)},
                    {"min_bound", integer_to_json(s.min_bound)}, {"solutions", sols}}
                   .dump(2)
            << "\n";
      } else {
        out << "T = " << to_string(eq.invariant) << "\n";
        out << "T(" << eq.a << "," << eq.b << ") = " << to_string(s.level) << "; min(x1,x2) <= " << s.min_bound << "\n";
        out << s.solutions.size() << " solution(s):\n";
        for (const auto& x : s.solutions) {
          out << "  (" << x.x1 << "," << x.x2 << ")";
          if (x.orbit_row) out << "  cluster " << *x.orbit_row;
          else out << "  not in the mutation orbit of (" << eq.a << "," << eq.b << ")";
          out << "\n";
        }
      }
      return 0;
    }
    if (*tree) {
      Family f = parse_family(family_arg);
      SolutionTree tr;
      try {
        tr = enumerate_tree(f, parse_integer(k_arg), parse_integer(bound_arg));
      } catch (const std::domain_error& e) {
        err << "refused: " << e.what() << "\n";
        return 1;
      }
      if (sorted) {
        auto v = sorted_view(tr);
        if (json) {
          Json a = Json::array();
          for (const auto& t : v) a.push_back(tuple_to_json(t));
          out << a.dump() << "\n";
        } else {
          for (const auto& t : v) out << to_string(t) << "\n";
        }
      } else if (json) {
        out << tree_to_json(tr).dump() << "\n";
      } else {
        out << tr.nodes.size() << " solutions with max coordinate <= " << tr.bound << ", " << tr.pruned_edges
            << " pruned edges\n";
        for (std::size_t i = 0; i < tr.nodes.size(); ++i) {
          const auto& n = tr.nodes[i];
          out << "  " << i << ": " << to_string(n.tuple);
          if (n.parent) out << "  <- mu" << *n.dir << " of " << *n.parent;
          out << "\n";
        }
      }
      return 0;
    }
    if (*member) {
      Family f = parse_family(family_arg);
      Integer k = parse_integer(k_arg);
      Tuple t = parse_tuple(tuple_arg);
      if (t.size() != arity(f)) throw UsageError(to_string(f) + " tuples have " + std::to_string(arity(f)) + " coordinates");
      auto w = is_reachable(f, k, t);
      if (json) {
        out << Json{{"tuple", tuple_to_json(t)},
                    {"solution", satisfies(f, t, k)},
                    {"word", w ? Json(*w) : Json(nullptr)}}
                   .dump()
            << "\n";
      } else if (!satisfies(f, t, k)) {
        out << to_string(t) << " is not a solution of " << equation_text(f) << " with k=" << k << "\n";
      } else if (w) {
        auto roots = fundamental_solutions(f, k);
        out << to_string(t) << " = " << word_text(*w) << " applied to " << to_string(roots.front()) << " (left to right)\n";
      } else {
        out << to_string(t) << " is a solution not reached by descent\n";
      }
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "refused: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace mutinv::cli
