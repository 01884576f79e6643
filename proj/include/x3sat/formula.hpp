#pragma once

#include <ostream>
#include <stdexcept>
#include <vector>

#include "x3sat/assignment.hpp"
#include "x3sat/clause.hpp"

namespace x3sat {

/// minterm AND clauses: the object every rewrite in this library operates on.
/// All variable ids are dense in 1..num_vars.
struct FormulaState {
  PartialAssignment minterm;
  std::vector<Clause> clauses;
  int num_vars = 0;

  FormulaState() = default;

  FormulaState(PartialAssignment m, std::vector<Clause> cs, int nv)
      : minterm(std::move(m)), clauses(std::move(cs)), num_vars(nv) {
    if (nv < 0) throw std::invalid_argument("formula: num_vars must be >= 0");
    if (minterm.max_var() > nv)
      throw std::invalid_argument("formula: minterm variable out of range");
    for (const Clause &c : clauses)
      if (c.max_var() > nv)
        throw std::invalid_argument("formula: clause variable out of range");
  }

  FormulaState(std::vector<Clause> cs, int nv)
      : FormulaState(PartialAssignment{}, std::move(cs), nv) {}

  bool operator==(const FormulaState &o) const = default;

  /// Number of clauses containing either polarity of `var`.
  int occurrence_count(int var) const {
    int n = 0;
    for (const Clause &c : clauses)
      if (c.contains_var(var)) ++n;
    return n;
  }

  bool mentions_var(int var) const {
    for (const Clause &c : clauses)
      if (c.contains_var(var)) return true;
    return false;
  }

  size_t literal_count() const {
    size_t n = 0;
    for (const Clause &c : clauses) n += c.size();
    return n;
  }
};

inline std::ostream &operator<<(std::ostream &os, const FormulaState &f) {
  os << f.minterm;
  for (const Clause &c : f.clauses) os << ' ' << c;
  return os;
}

} // namespace x3sat
