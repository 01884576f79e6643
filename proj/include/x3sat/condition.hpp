#pragma once

#include <optional>

#include "x3sat/formula.hpp"

namespace x3sat {

/// Rewrites `f` until no clause mentions a bound variable: a clause with a
/// true literal forces its siblings false and is dropped; a false literal is
/// struck out; an emptied clause is a conflict; a unit migrates into the
/// minterm. Cascades to fixpoint. nullopt on conflict.
inline std::optional<FormulaState> propagate(FormulaState f) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < f.clauses.size() && !changed; ++i) {
      const Clause &c = f.clauses[i];
      for (Literal l : c) {
        auto v = f.minterm.value(l.var);
        if (!v) continue;
        changed = true;
        if (*v == l.positive) {
          // exactly-one satisfied by l: siblings are forced false
          Clause sat = c;
          f.clauses.erase(f.clauses.begin() + static_cast<long>(i));
          for (Literal s : sat)
            if (!(s == l) &&
                f.minterm.try_bind(s.negated()) == BindOutcome::Conflict)
              return std::nullopt;
        } else if (c.size() == 1) {
          return std::nullopt; // clause would become empty
        } else if (c.size() == 2) {
          Literal unit = c.other_than(l);
          f.clauses.erase(f.clauses.begin() + static_cast<long>(i));
          if (f.minterm.try_bind(unit) == BindOutcome::Conflict)
            return std::nullopt;
        } else {
          f.clauses[i] = c.without(l);
        }
        break; // clause list changed; rescan
      }
    }
  }
  return f;
}

/// The formula equivalent to f AND l. nullopt on conflict.
inline std::optional<FormulaState> condition(const FormulaState &f, Literal l) {
  if (l.var > f.num_vars)
    throw std::out_of_range("condition: variable out of range");
  FormulaState work = f;
  if (work.minterm.try_bind(l) == BindOutcome::Conflict) return std::nullopt;
  return propagate(std::move(work));
}

} // namespace x3sat
