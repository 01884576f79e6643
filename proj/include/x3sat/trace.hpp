#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "x3sat/formula.hpp"

namespace x3sat {

enum class TraceEventKind {
  Decision,      // a polarity is about to be tried; snapshot = committed state
  Propagation,   // literal bound into the working minterm
  ClauseDeletion,// clause dropped (no literal) or literal struck out (literal set)
  UnitMigration, // clause became unit: clause dropped and its literal bound
  Conflict,      // bind collision (literal set) or emptied clause (clause set)
  RemoveInvoked, // the opposite polarity is being committed; snapshot = committed state
  ScanEnter,     // (re-)entry of the outer scan loop; snapshot = committed state
  Verdict        // end of run; snapshot = final committed state
};

inline const char *to_string(TraceEventKind k) {
  switch (k) {
  case TraceEventKind::Decision: return "decision";
  case TraceEventKind::Propagation: return "propagation";
  case TraceEventKind::ClauseDeletion: return "clause_deletion";
  case TraceEventKind::UnitMigration: return "unit_migration";
  case TraceEventKind::Conflict: return "conflict";
  case TraceEventKind::RemoveInvoked: return "remove_invoked";
  case TraceEventKind::ScanEnter: return "scan_enter";
  case TraceEventKind::Verdict: return "verdict";
  }
  return "?";
}

struct TraceEvent {
  TraceEventKind kind;
  std::optional<Literal> literal;
  std::optional<size_t> clause_index;
  std::optional<FormulaState> formula_snapshot;
};

struct Trace {
  std::vector<TraceEvent> events;

  void emit(TraceEvent e) { events.push_back(std::move(e)); }

  size_t count(TraceEventKind k) const {
    size_t n = 0;
    for (const TraceEvent &e : events)
      if (e.kind == k) ++n;
    return n;
  }
};

/// Replays a trace event-by-event, applying each event's rewrite to the
/// running state and checking every snapshot-bearing event against it.
/// Returns all intermediate states in order (one per event, post-rewrite).
/// Work discarded after a conflict is handled via the snapshot on the next
/// checkpoint event (Decision / ScanEnter / RemoveInvoked / Verdict).
///
/// Throws std::logic_error on any mismatch: this is the instrumentation
/// consistency check.
inline std::vector<FormulaState> replay(const Trace &trace) {
  std::vector<FormulaState> states;
  FormulaState state;
  bool have_state = false; // before the first checkpoint
  bool dirty = false;      // true after a conflict aborted in-flight work

  auto fail = [](const std::string &msg) -> void {
    throw std::logic_error("trace replay: " + msg);
  };

  for (const TraceEvent &e : trace.events) {
    switch (e.kind) {
    case TraceEventKind::Decision:
    case TraceEventKind::ScanEnter:
    case TraceEventKind::RemoveInvoked:
    case TraceEventKind::Verdict: {
      if (!e.formula_snapshot) fail("checkpoint event without snapshot");
      if (have_state && !dirty && !(state == *e.formula_snapshot))
        fail(std::string("snapshot mismatch at ") + to_string(e.kind));
      state = *e.formula_snapshot;
      have_state = true;
      dirty = false;
      break;
    }
    case TraceEventKind::Propagation: {
      if (!have_state || dirty) fail("propagation outside live state");
      if (!e.literal) fail("propagation without literal");
      if (state.minterm.try_bind(*e.literal) == BindOutcome::Conflict)
        fail("propagation bind conflicts");
      break;
    }
    case TraceEventKind::ClauseDeletion: {
      if (!have_state || dirty) fail("clause_deletion outside live state");
      if (!e.clause_index || *e.clause_index >= state.clauses.size())
        fail("clause_deletion with bad index");
      if (e.literal) {
        state.clauses[*e.clause_index] =
            state.clauses[*e.clause_index].without(*e.literal);
      } else {
        state.clauses.erase(state.clauses.begin() +
                            static_cast<long>(*e.clause_index));
      }
      break;
    }
    case TraceEventKind::UnitMigration: {
      if (!have_state || dirty) fail("unit_migration outside live state");
      if (!e.literal || !e.clause_index ||
          *e.clause_index >= state.clauses.size())
        fail("unit_migration with bad fields");
      state.clauses.erase(state.clauses.begin() +
                          static_cast<long>(*e.clause_index));
      if (state.minterm.try_bind(*e.literal) == BindOutcome::Conflict)
        fail("unit_migration bind conflicts");
      break;
    }
    case TraceEventKind::Conflict: {
      if (!have_state) fail("conflict before any state");
      if (e.formula_snapshot && !dirty && !(state == *e.formula_snapshot))
        fail("conflict snapshot mismatch");
      dirty = true;
      break;
    }
    }
    states.push_back(state);
  }
  return states;
}

} // namespace x3sat
