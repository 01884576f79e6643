#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "x3sat/formula.hpp"

namespace x3sat {

// The counterexample family. The base instance is satisfiable, yet deciding
// variable 1 (a) first walks the scan procedure into (x + y) AND (x + !y),
// which no polarity of x can satisfy — and the procedure cannot undo the
// decision on a. The variants defeat the obvious ordering heuristics the
// same way.
//
// Variable key used throughout the tests: a,b,c,x,y = 1..5.

/// (a + b + c) AND (b + x + y) AND (c + x + !y), empty minterm.
inline FormulaState paper_counterexample() {
  return FormulaState({Clause{1, 2, 3}, Clause{2, 4, 5}, Clause{3, 4, -5}}, 5);
}

/// Named intermediate states of the lex+pos run on paper_counterexample().
struct GoldenTrace {
  std::vector<std::pair<std::string, FormulaState>> checkpoints;
};

inline GoldenTrace golden_trace() {
  PartialAssignment abc;
  abc.try_bind(pos(1));
  abc.try_bind(neg(2));
  abc.try_bind(neg(3));

  PartialAssignment conflict_state = abc;
  conflict_state.try_bind(pos(4));
  conflict_state.try_bind(neg(5));

  GoldenTrace g;
  g.checkpoints.emplace_back(
      "after-reduce-a",
      FormulaState(abc, {Clause{2, 4, 5}, Clause{3, 4, -5}}, 5));
  g.checkpoints.emplace_back(
      "after-reduce-not-b",
      FormulaState(abc, {Clause{4, 5}, Clause{3, 4, -5}}, 5));
  g.checkpoints.emplace_back(
      "after-scope-a", FormulaState(abc, {Clause{4, 5}, Clause{4, -5}}, 5));
  // The run dies trying to bind y on top of !y; this is the consistent part
  // of that state, with the conflicting literal (+5) carried on the trace
  // event itself.
  g.checkpoints.emplace_back("conflict-on-y",
                             FormulaState(conflict_state, {}, 5));
  return g;
}

/// Base instance plus k clauses (a + x_i + y_i) on 2k fresh variables,
/// making `a` the strictly most frequent variable for k >= 3.
inline FormulaState frequency_padded(int k = 3) {
  if (k < 1) throw std::invalid_argument("frequency_padded: k must be >= 1");
  FormulaState f = paper_counterexample();
  std::vector<Clause> clauses = f.clauses;
  for (int i = 1; i <= k; ++i)
    clauses.push_back(Clause{1, 4 + 2 * i, 5 + 2 * i});
  return FormulaState(std::move(clauses), 5 + 2 * k);
}

/// Base instance with !a in place of a in the first clause; defeats
/// negative-polarity-first orders symmetrically.
inline FormulaState polarity_flipped() {
  return FormulaState({Clause{-1, 2, 3}, Clause{2, 4, 5}, Clause{3, 4, -5}}, 5);
}

/// Base instance with variables renamed by `perm` (perm[i-1] is the new id
/// of variable i). Clause order and literal order are kept.
inline FormulaState relabeled(const std::vector<int> &perm) {
  FormulaState base = paper_counterexample();
  if (static_cast<int>(perm.size()) != base.num_vars)
    throw std::invalid_argument("relabeled: permutation size mismatch");
  std::set<int> image;
  for (int v : perm) {
    if (v < 1 || v > base.num_vars)
      throw std::invalid_argument("relabeled: permutation value out of range");
    if (!image.insert(v).second)
      throw std::invalid_argument("relabeled: permutation is not a bijection");
  }
  std::vector<Clause> clauses;
  for (const Clause &c : base.clauses) {
    std::vector<Literal> lits;
    for (Literal l : c)
      lits.emplace_back(perm[static_cast<size_t>(l.var - 1)], l.positive);
    clauses.emplace_back(std::move(lits));
  }
  return FormulaState(std::move(clauses), base.num_vars);
}

/// The id-reversing permutation (a<->y, b<->x, c fixed): defeats
/// reverse-lexicographic orders.
inline std::vector<int> reversal_permutation() { return {5, 4, 3, 2, 1}; }

} // namespace x3sat
