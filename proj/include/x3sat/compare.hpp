#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "x3sat/evaluate.hpp"
#include "x3sat/generator.hpp"
#include "x3sat/oracle.hpp"
#include "x3sat/scan.hpp"

namespace x3sat {

/// Tries to turn a claimed-SAT minterm into a verified model of `f`.
/// Unbound variables are completed exhaustively (ascending variable id,
/// false before true); the first completion that satisfies `f` wins.
/// nullopt = claimed-SAT unverifiable.
inline std::optional<TotalAssignment>
audit_claimed_sat(const FormulaState &f, const PartialAssignment &claimed) {
  std::vector<int> unbound;
  for (int v = 1; v <= f.num_vars; ++v)
    if (!claimed.is_bound(v)) unbound.push_back(v);
  if (unbound.size() > 20) return std::nullopt; // beyond desk scale

  TotalAssignment m(std::vector<bool>(static_cast<size_t>(f.num_vars)));
  for (Literal l : claimed.literals()) m.set(l.var, l.positive);
  unsigned long long combos = 1ull << unbound.size();
  for (unsigned long long idx = 0; idx < combos; ++idx) {
    for (size_t i = 0; i < unbound.size(); ++i)
      m.set(unbound[i], (idx >> (unbound.size() - 1 - i)) & 1u);
    if (evaluate_formula(m, f)) return m;
  }
  return std::nullopt;
}

struct Agreement {
  SalumOutcome salum;
  OracleVerdict oracle;
};

enum class DisagreementKind { FalseUnsat, FalseSat };

/// FalseSat alone means the claim disagrees with an UNSAT oracle; the
/// InvalidWitness subtag marks the case where the oracle is SAT but the
/// claimed assignment does not check out.
enum class FalseSatSubtag { None, InvalidWitness };

struct Disagreement {
  FormulaState formula;
  OrderingPolicy policy;
  SalumOutcome salum_outcome;
  OracleVerdict oracle_outcome;
  DisagreementKind kind;
  FalseSatSubtag subtag = FalseSatSubtag::None;
};

using CompareResult = std::variant<Agreement, Disagreement>;

inline bool is_disagreement(const CompareResult &r) {
  return std::holds_alternative<Disagreement>(r);
}

/// Runs the procedure under test and the DPLL oracle on the same input and
/// classifies. A disagreement is only ever reported with oracle evidence:
/// a verified model for FalseUnsat, an exhausted search or failed audit for
/// FalseSat.
inline CompareResult compare(const FormulaState &f,
                             const OrderingPolicy &policy) {
  SalumVerdict salum = scan(f, policy);
  OracleVerdict oracle = dpll_solve(f);

  if (salum.outcome == SalumOutcome::ClaimedUnsat) {
    if (!oracle.sat()) return Agreement{salum.outcome, oracle};
    return Disagreement{f, policy, salum.outcome, oracle,
                        DisagreementKind::FalseUnsat};
  }

  auto witness = audit_claimed_sat(f, salum.claimed_minterm);
  if (witness) {
    if (!oracle.sat())
      throw std::logic_error("compare: oracle UNSAT but a model verified");
    return Agreement{salum.outcome, oracle};
  }
  return Disagreement{f, policy, salum.outcome, oracle,
                      DisagreementKind::FalseSat,
                      oracle.sat() ? FalseSatSubtag::InvalidWitness
                                   : FalseSatSubtag::None};
}

/// The 4 ordering kinds x 2 polarity orders applied to every fuzzed formula.
/// The fixed-sequence row is a seed-derived shuffle (see generator.hpp).
inline std::vector<OrderingPolicy> policy_matrix(uint64_t seed, int num_vars) {
  std::vector<int> seq = shuffled_sequence(seed, num_vars);
  std::vector<OrderingPolicy> out;
  for (PolarityOrder p : {PolarityOrder::PositiveFirst,
                          PolarityOrder::NegativeFirst}) {
    out.push_back(OrderingPolicy::lex(p));
    out.push_back(OrderingPolicy::revlex(p));
    out.push_back(OrderingPolicy::freq(p));
    out.push_back(OrderingPolicy::fixed(seq, p));
  }
  return out;
}

struct CampaignConfig {
  uint64_t base_seed = 1;
  int count = 0;       // number of formulas; formula i uses seed base_seed + i
  int num_vars = 5;
  int num_clauses = 6;
};

struct CampaignHit {
  uint64_t seed;
  Disagreement disagreement;
};

struct CampaignResult {
  std::vector<CampaignHit> hits;
  size_t runs = 0;
};

inline CampaignResult run_campaign(const CampaignConfig &cfg) {
  CampaignResult out;
  for (int i = 0; i < cfg.count; ++i) {
    uint64_t seed = cfg.base_seed + static_cast<uint64_t>(i);
    FormulaState f = generate({seed, cfg.num_vars, cfg.num_clauses});
    for (const OrderingPolicy &policy : policy_matrix(seed, cfg.num_vars)) {
      CompareResult r = compare(f, policy);
      ++out.runs;
      if (auto *d = std::get_if<Disagreement>(&r))
        out.hits.push_back({seed, *d});
    }
  }
  return out;
}

} // namespace x3sat
