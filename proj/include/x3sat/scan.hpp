#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "x3sat/formula.hpp"
#include "x3sat/policy.hpp"
#include "x3sat/trace.hpp"

namespace x3sat {

// The decision procedure under test. It fixes one polarity of a variable,
// propagates it and every implied literal, and on conflict permanently
// commits the opposite polarity. It never revisits a commitment, which is
// exactly what the differential harness exploits.

struct ReduceResult {
  std::vector<Literal> new_bindings; // literals freshly bound, in bind order
  FormulaState state;
};

namespace detail {

inline void note(Trace *t, TraceEvent e) {
  if (t) t->emit(std::move(e));
}

inline std::optional<FormulaState> snap(Trace *t, const FormulaState &f) {
  return t ? std::optional<FormulaState>(f) : std::nullopt;
}

} // namespace detail

/// One propagation pass of a single literal `r` through `f`:
///   phase 1 — every clause containing r is consumed; r holds, so each
///             sibling's negation is bound.
///   phase 2 — !r is struck from every clause containing it; a clause
///             reduced to a unit migrates into the minterm; a clause
///             reduced to nothing is a conflict.
/// Literals bound here are NOT themselves propagated; that is scope's job.
/// nullopt on conflict.
inline std::optional<ReduceResult> reduce(const FormulaState &f, Literal r,
                                          Trace *trace = nullptr) {
  using detail::note;
  using detail::snap;
  ReduceResult out{{}, f};
  FormulaState &work = out.state;

  auto bind = [&](Literal l) -> bool {
    switch (work.minterm.try_bind(l)) {
    case BindOutcome::Added:
      out.new_bindings.push_back(l);
      note(trace, {TraceEventKind::Propagation, l, std::nullopt, std::nullopt});
      return true;
    case BindOutcome::Already:
      return true;
    case BindOutcome::Conflict:
      note(trace, {TraceEventKind::Conflict, l, std::nullopt, work});
      return false;
    }
    return false;
  };

  // phase 1: clauses satisfied by r
  for (size_t i = 0; i < work.clauses.size();) {
    if (!work.clauses[i].contains(r)) {
      ++i;
      continue;
    }
    Clause c = work.clauses[i];
    work.clauses.erase(work.clauses.begin() + static_cast<long>(i));
    note(trace, {TraceEventKind::ClauseDeletion, std::nullopt, i, std::nullopt});
    if (!bind(r)) return std::nullopt;
    for (Literal s : c)
      if (!(s == r) && !bind(s.negated())) return std::nullopt;
  }

  // phase 2: clauses containing !r
  Literal nr = r.negated();
  for (size_t i = 0; i < work.clauses.size();) {
    const Clause &c = work.clauses[i];
    if (!c.contains(nr)) {
      ++i;
      continue;
    }
    if (c.size() == 1) {
      // exactly-one over zero literals: unsatisfiable
      work.clauses.erase(work.clauses.begin() + static_cast<long>(i));
      note(trace, {TraceEventKind::ClauseDeletion, std::nullopt, i, std::nullopt});
      note(trace, {TraceEventKind::Conflict, std::nullopt, i, work});
      return std::nullopt;
    }
    if (c.size() == 2) {
      Literal unit = c.other_than(nr);
      work.clauses.erase(work.clauses.begin() + static_cast<long>(i));
      switch (work.minterm.try_bind(unit)) {
      case BindOutcome::Added:
        out.new_bindings.push_back(unit);
        [[fallthrough]];
      case BindOutcome::Already:
        note(trace, {TraceEventKind::UnitMigration, unit, i, std::nullopt});
        break;
      case BindOutcome::Conflict:
        note(trace,
             {TraceEventKind::ClauseDeletion, std::nullopt, i, std::nullopt});
        note(trace, {TraceEventKind::Conflict, unit, i, work});
        return std::nullopt;
      }
      continue;
    }
    work.clauses[i] = c.without(nr);
    note(trace, {TraceEventKind::ClauseDeletion, nr, i, std::nullopt});
    ++i;
  }
  return out;
}

struct ScopeResult {
  std::vector<Literal> assignment; // r and its implication closure, FIFO order
  FormulaState state;              // the fixpoint formula
};

/// Propagates the decision `r` and, first-in-first-out, every literal it
/// implies, until the accumulated assignment is fully processed.
/// nullopt on conflict, including !r already being in the minterm.
inline std::optional<ScopeResult> scope(Literal r, const FormulaState &f,
                                        Trace *trace = nullptr) {
  ScopeResult out{{}, f};
  switch (out.state.minterm.try_bind(r)) {
  case BindOutcome::Conflict:
    detail::note(trace, {TraceEventKind::Conflict, r, std::nullopt, out.state});
    return std::nullopt;
  case BindOutcome::Added:
    detail::note(trace,
                 {TraceEventKind::Propagation, r, std::nullopt, std::nullopt});
    break;
  case BindOutcome::Already:
    break;
  }
  out.assignment.push_back(r);
  for (size_t next = 0; next < out.assignment.size(); ++next) {
    auto step = reduce(out.state, out.assignment[next], trace);
    if (!step) return std::nullopt;
    out.state = std::move(step->state);
    out.assignment.insert(out.assignment.end(), step->new_bindings.begin(),
                          step->new_bindings.end());
  }
  return out;
}

/// Commits the opposite polarity of `r`: propagates !r once and binds it.
/// nullopt means UNSAT for the whole run — there is no way back.
inline std::optional<FormulaState> remove_literal(Literal r,
                                                  const FormulaState &f,
                                                  Trace *trace = nullptr) {
  detail::note(trace, {TraceEventKind::RemoveInvoked, r, std::nullopt, f});
  auto step = reduce(f, r.negated(), trace);
  if (!step) return std::nullopt;
  FormulaState work = std::move(step->state);
  switch (work.minterm.try_bind(r.negated())) {
  case BindOutcome::Added:
    detail::note(trace, {TraceEventKind::Propagation, r.negated(), std::nullopt,
                         std::nullopt});
    break;
  case BindOutcome::Already:
    break;
  case BindOutcome::Conflict:
    // Distinct second exit; unreachable with in-place accumulation but
    // instrumented in case the bookkeeping ever changes.
    detail::note(trace,
                 {TraceEventKind::Conflict, r.negated(), std::nullopt, work});
    return std::nullopt;
  }
  return work;
}

enum class SalumOutcome { ClaimedSat, ClaimedUnsat };

/// What the procedure reports. Claimed-SAT verdicts are exactly as the
/// procedure left them and must be audited; see compare.hpp.
struct SalumVerdict {
  SalumOutcome outcome = SalumOutcome::ClaimedUnsat;
  PartialAssignment claimed_minterm; // psi-hat (ClaimedSat only)
  FormulaState final_state;          // phi-hat, or last committed state on UNSAT
  Trace trace;

  bool claimed_sat() const { return outcome == SalumOutcome::ClaimedSat; }
};

/// Entry point of the procedure. Decides every variable in policy order,
/// each polarity in turn; a conflicting decision is flipped via
/// remove_literal and the outer loop restarts on the committed state.
/// Terminates ClaimedUnsat as soon as any remove_literal fails.
///
/// Progress guarantee: every remove_literal invocation is attributable to a
/// distinct variable, so the run performs at most num_vars of them; a step
/// counter enforces this.
inline SalumVerdict scan(const FormulaState &f, const OrderingPolicy &policy) {
  policy.validate(f.num_vars);
  SalumVerdict run;
  Trace &trace = run.trace;
  FormulaState committed = f;
  int removes = 0;

  // false signals UNSAT
  auto flip = [&](Literal r) -> bool {
    auto res = remove_literal(r, committed, &trace);
    if (!res) return false;
    committed = std::move(*res);
    if (++removes > f.num_vars)
      throw std::logic_error("scan: remove budget exceeded");
    return true;
  };

  auto unsat_verdict = [&]() -> SalumVerdict {
    trace.emit({TraceEventKind::Verdict, std::nullopt, std::nullopt, committed});
    run.outcome = SalumOutcome::ClaimedUnsat;
    run.final_state = committed;
    return std::move(run);
  };

  for (;;) {
    trace.emit({TraceEventKind::ScanEnter, std::nullopt, std::nullopt, committed});

    // Clause literals whose negation is already committed are swept first.
    bool swept = false;
    for (size_t k = 0; k < committed.clauses.size() && !swept; ++k)
      for (Literal l : committed.clauses[k]) {
        if (!committed.minterm.contradicts(l)) continue;
        if (!flip(l)) return unsat_verdict();
        swept = true;
        break;
      }
    if (swept) continue;

    bool restarted = false;
    for (int v : policy.decision_order(committed)) {
      if (committed.minterm.is_bound(v)) continue;
      Literal first = policy.first_literal(v);
      for (Literal r : {first, first.negated()}) {
        trace.emit({TraceEventKind::Decision, r, std::nullopt, committed});
        auto sc = scope(r, committed, &trace);
        if (sc) {
          committed = std::move(sc->state);
        } else {
          if (!flip(r)) return unsat_verdict();
          restarted = true;
          break;
        }
      }
      if (restarted) break;
    }
    if (restarted) continue;

    trace.emit({TraceEventKind::Verdict, std::nullopt, std::nullopt, committed});
    run.outcome = SalumOutcome::ClaimedSat;
    run.claimed_minterm = committed.minterm;
    run.final_state = committed;
    return run;
  }
}

/// Number of remove_literal invocations recorded in a finished run.
inline size_t remove_steps(const SalumVerdict &v) {
  return v.trace.count(TraceEventKind::RemoveInvoked);
}

} // namespace x3sat
