#pragma once

#include <sstream>
#include <string>

#include "x3sat/compare.hpp"
#include "x3sat/x3f.hpp"

namespace x3sat {

// Disagreement report format: the formula as an X3F block, one verdict line
//
//   v <policy> <claimed-sat|claimed-unsat> <sat|unsat>
//
// and, when the oracle found a model, one witness line `w <bits>` with one
// 0/1 character per variable 1..num_vars.

inline std::string witness_bits(const TotalAssignment &m) {
  std::string s;
  s.reserve(static_cast<size_t>(m.num_vars()));
  for (int v = 1; v <= m.num_vars(); ++v) s += m.value(v) ? '1' : '0';
  return s;
}

inline std::string serialize_report(const Disagreement &d) {
  std::ostringstream os;
  os << serialize(d.formula);
  os << "v " << to_token(d.policy) << ' '
     << (d.salum_outcome == SalumOutcome::ClaimedSat ? "claimed-sat"
                                                     : "claimed-unsat")
     << ' ' << (d.oracle_outcome.sat() ? "sat" : "unsat") << '\n';
  if (d.oracle_outcome.sat())
    os << "w " << witness_bits(*d.oracle_outcome.witness) << '\n';
  return os.str();
}

/// Reconstructs the (formula, policy) pair of a report. Verdict and witness
/// lines are re-derived by compare, not trusted.
struct ReportInput {
  FormulaState formula;
  OrderingPolicy policy;
};

inline ReportInput parse_report(const std::string &text) {
  std::istringstream is(text);
  std::string line;
  std::string x3f_block;
  std::string verdict_line;
  while (std::getline(is, line)) {
    if (line.rfind("v ", 0) == 0) {
      verdict_line = line;
      break;
    }
    if (line.rfind("w ", 0) == 0) break;
    x3f_block += line;
    x3f_block += '\n';
  }
  if (verdict_line.empty())
    throw std::runtime_error("report: missing verdict line");
  std::istringstream vs(verdict_line);
  std::string tag, policy_token;
  vs >> tag >> policy_token;
  if (policy_token.empty())
    throw std::runtime_error("report: malformed verdict line");
  return {parse(x3f_block), policy_from_token(policy_token)};
}

} // namespace x3sat
