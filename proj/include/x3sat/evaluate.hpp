#pragma once

#include <stdexcept>

#include "x3sat/formula.hpp"

namespace x3sat {

/// True iff exactly one literal of `c` is true under `m`.
inline bool evaluate_clause(const TotalAssignment &m, const Clause &c) {
  int true_count = 0;
  for (Literal l : c) {
    if (l.var > m.num_vars())
      throw std::out_of_range("evaluate_clause: variable out of range");
    if (m.satisfies(l)) ++true_count;
  }
  return true_count == 1;
}

/// True iff `m` agrees with every minterm binding and satisfies every clause.
inline bool evaluate_formula(const TotalAssignment &m, const FormulaState &f) {
  if (m.num_vars() != f.num_vars)
    throw std::invalid_argument("evaluate_formula: assignment size mismatch");
  for (Literal l : f.minterm.literals())
    if (!m.satisfies(l)) return false;
  for (const Clause &c : f.clauses)
    if (!evaluate_clause(m, c)) return false;
  return true;
}

} // namespace x3sat
