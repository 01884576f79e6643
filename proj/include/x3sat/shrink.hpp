#pragma once

#include <stdexcept>

#include "x3sat/compare.hpp"

namespace x3sat {

namespace detail {

/// Re-runs compare and keeps the candidate only if the same disagreement
/// kind survives.
inline std::optional<Disagreement> still_disagrees(const FormulaState &f,
                                                   const OrderingPolicy &policy,
                                                   DisagreementKind kind) {
  CompareResult r = compare(f, policy);
  auto *d = std::get_if<Disagreement>(&r);
  if (d && d->kind == kind) return *d;
  return std::nullopt;
}

} // namespace detail

/// Greedy delta-debugging minimizer. Candidate edits are tried first-to-last,
/// whole-clause removals before single-literal removals (width 3 -> 2), and
/// the search restarts after every accepted edit. The result is locally
/// minimal: no single clause removal and no single literal removal preserves
/// the disagreement kind.
///
/// Throws std::invalid_argument if the input does not reproduce.
inline Disagreement shrink(const Disagreement &input) {
  auto current = detail::still_disagrees(input.formula, input.policy, input.kind);
  if (!current)
    throw std::invalid_argument(
        "shrink: input disagreement does not reproduce under compare");

  bool changed = true;
  while (changed) {
    changed = false;
    const FormulaState &f = current->formula;

    for (size_t i = 0; i < f.clauses.size() && !changed; ++i) {
      FormulaState cand = f;
      cand.clauses.erase(cand.clauses.begin() + static_cast<long>(i));
      if (auto d = detail::still_disagrees(cand, input.policy, input.kind)) {
        current = std::move(d);
        changed = true;
      }
    }
    if (changed) continue;

    for (size_t i = 0; i < f.clauses.size() && !changed; ++i) {
      if (f.clauses[i].size() != 3) continue;
      for (size_t j = 0; j < 3 && !changed; ++j) {
        FormulaState cand = f;
        cand.clauses[i] = f.clauses[i].without_index(j);
        if (auto d = detail::still_disagrees(cand, input.policy, input.kind)) {
          current = std::move(d);
          changed = true;
        }
      }
    }
  }
  return *current;
}

} // namespace x3sat
