#pragma once

#include <sstream>
#include <string>

#include "x3sat/scan.hpp"
#include "x3sat/trace.hpp"

namespace x3sat {

// Trace text format, one event per line:
//
//   <kind> <literal|_> <clause_index|_>[ | <snapshot>]
//
// where <snapshot> is `m <minterm literals, ascending id> 0` followed by one
// `<literals> 0` group per clause, in current list order with literals in
// current clause order — the X3F clause syntax inlined. Trace files carry a
// `p x3trace <num_vars> <num_events>` header and end with a
// `r claimed-sat|claimed-unsat` result line.

inline std::string snapshot_to_string(const FormulaState &f) {
  std::ostringstream os;
  os << 'm';
  for (Literal l : f.minterm.literals()) os << ' ' << l;
  os << " 0";
  for (const Clause &c : f.clauses) {
    for (Literal l : c) os << ' ' << l;
    os << " 0";
  }
  return os.str();
}

inline std::string event_to_line(const TraceEvent &e) {
  std::ostringstream os;
  os << to_string(e.kind) << ' ';
  if (e.literal) os << *e.literal;
  else os << '_';
  os << ' ';
  if (e.clause_index) os << *e.clause_index;
  else os << '_';
  if (e.formula_snapshot) os << " | " << snapshot_to_string(*e.formula_snapshot);
  return os.str();
}

inline std::string trace_to_string(const Trace &t) {
  std::ostringstream os;
  for (const TraceEvent &e : t.events) os << event_to_line(e) << '\n';
  return os.str();
}

inline std::string trace_file_contents(const SalumVerdict &run, int num_vars) {
  std::ostringstream os;
  os << "p x3trace " << num_vars << ' ' << run.trace.events.size() << '\n'
     << trace_to_string(run.trace) << "r "
     << (run.claimed_sat() ? "claimed-sat" : "claimed-unsat") << '\n';
  return os.str();
}

} // namespace x3sat
