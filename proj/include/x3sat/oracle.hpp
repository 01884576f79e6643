#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "x3sat/condition.hpp"
#include "x3sat/evaluate.hpp"
#include "x3sat/formula.hpp"

namespace x3sat {

/// All models of a formula, in lexicographic order of the value tuple
/// (v1,...,vn) with false < true.
struct ModelSet {
  std::vector<TotalAssignment> models;

  bool empty() const { return models.empty(); }
  size_t size() const { return models.size(); }

  bool contains(const TotalAssignment &m) const {
    for (const TotalAssignment &x : models)
      if (x == m) return true;
    return false;
  }
};

inline constexpr int kBruteForceMaxVars = 25;

/// Exhaustive enumeration of all 2^num_vars assignments.
inline ModelSet brute_force(const FormulaState &f) {
  if (f.num_vars > kBruteForceMaxVars)
    throw std::invalid_argument(
        "brute_force: formula exceeds the 25-variable enumeration bound");
  ModelSet out;
  unsigned long long total = 1ull << f.num_vars;
  for (unsigned long long idx = 0; idx < total; ++idx) {
    TotalAssignment m = TotalAssignment::from_index(f.num_vars, idx);
    if (evaluate_formula(m, f)) out.models.push_back(std::move(m));
  }
  return out;
}

struct OracleVerdict {
  std::optional<TotalAssignment> witness; // present iff Sat

  bool sat() const { return witness.has_value(); }
};

namespace detail {

inline std::optional<PartialAssignment> dpll_rec(const FormulaState &f) {
  if (f.clauses.empty()) return f.minterm;
  // lowest-id unbound variable occurring in a clause; propagate() guarantees
  // clause variables are unbound
  int v = f.num_vars + 1;
  for (const Clause &c : f.clauses)
    for (Literal l : c) v = std::min(v, l.var);
  for (bool val : {true, false}) {
    auto next = condition(f, Literal(v, val));
    if (!next) continue;
    auto r = dpll_rec(*next);
    if (r) return r;
  }
  return std::nullopt;
}

} // namespace detail

/// Chronological-backtracking search over conditioned formulas — the plain
/// correct solver the procedure in scan.hpp is measured against.
/// Unconstrained variables default false in the witness.
inline OracleVerdict dpll_solve(const FormulaState &f) {
  auto start = propagate(f);
  if (!start) return {};
  auto partial = detail::dpll_rec(*start);
  if (!partial) return {};
  TotalAssignment witness(std::vector<bool>(static_cast<size_t>(f.num_vars)));
  for (Literal l : partial->literals()) witness.set(l.var, l.positive);
  if (!evaluate_formula(witness, f))
    throw std::logic_error("dpll_solve: witness failed verification");
  return {witness};
}

} // namespace x3sat
