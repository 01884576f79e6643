// Acceptance suite: one test per criterion, each printing a single
// "[acceptance] ..." PASS/FAIL line with its runtime.

#include <gtest/gtest.h>

#include <chrono>
#include <iostream>
#include <sstream>

#include "x3sat/x3sat.hpp"

using namespace x3sat;

namespace {

class Criterion {
public:
  Criterion(const std::string &name, double budget_seconds)
      : name_(name), budget_(budget_seconds),
        start_(std::chrono::steady_clock::now()) {}

  void require(bool cond, const std::string &what) {
    if (!cond) problems_ += "\n  - " + what;
  }

  void finish() {
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    if (elapsed > budget_)
      problems_ += "\n  - exceeded runtime budget of " +
                   std::to_string(budget_) + "s";
    bool ok = problems_.empty();
    std::ostringstream line;
    line << "[acceptance] " << name_ << ": " << (ok ? "PASS" : "FAIL") << " ("
         << elapsed << "s)";
    std::cout << line.str() << std::endl;
    EXPECT_TRUE(ok) << name_ << " failed:" << problems_;
  }

private:
  std::string name_;
  double budget_;
  std::chrono::steady_clock::time_point start_;
  std::string problems_;
};

// seeds 1..1000 with num_vars <= 10 and num_clauses <= 12
GenConfig campaign_config(uint64_t seed) {
  return {seed, 3 + static_cast<int>(seed % 8), 1 + static_cast<int>(seed % 12)};
}

TEST(Acceptance, C1_GoldenTraceReplay) {
  Criterion crit("C1 golden-trace-replay", 1.0);

  SalumVerdict run = scan(paper_counterexample(), OrderingPolicy::lex());
  crit.require(run.outcome == SalumOutcome::ClaimedUnsat,
               "verdict must be claimed-unsat");

  std::vector<FormulaState> states = replay(run.trace);
  GoldenTrace golden = golden_trace();
  size_t cursor = 0;
  for (size_t g = 0; g + 1 < golden.checkpoints.size(); ++g) {
    bool found = false;
    for (; cursor < states.size(); ++cursor)
      if (states[cursor] == golden.checkpoints[g].second) {
        found = true;
        break;
      }
    crit.require(found, "checkpoint not reproduced in order: " +
                            golden.checkpoints[g].first);
  }
  bool conflict_on_y = false;
  for (const TraceEvent &e : run.trace.events)
    if (e.kind == TraceEventKind::Conflict && e.literal == pos(5) &&
        e.formula_snapshot == golden.checkpoints[3].second)
      conflict_on_y = true;
  crit.require(conflict_on_y, "final conflict state on y not reproduced");
  crit.finish();
}

TEST(Acceptance, C2_ThesisReproduction) {
  Criterion crit("C2 thesis-reproduction", 1.0);

  CompareResult r = compare(paper_counterexample(), OrderingPolicy::lex());
  const Disagreement *d = std::get_if<Disagreement>(&r);
  crit.require(d != nullptr, "compare must disagree");
  if (d) {
    crit.require(d->kind == DisagreementKind::FalseUnsat, "kind must be FalseUnsat");
    crit.require(d->oracle_outcome.sat(), "oracle must report SAT");
  }

  ModelSet models = brute_force(paper_counterexample());
  crit.require(models.size() == 2, "model count must be exactly 2");
  TotalAssignment printed_witness({false, false, true, false, true});
  crit.require(models.contains(printed_witness),
               "(0,0,1,0,1) must be among the models");
  crit.require(models.contains(TotalAssignment({false, true, false, false, false})),
               "(0,1,0,0,0) must be among the models");
  crit.finish();
}

TEST(Acceptance, C3_VariantMatrix) {
  Criterion crit("C3 variant-matrix", 5.0);

  struct Case {
    const char *label;
    FormulaState formula;
    OrderingPolicy policy;
  };
  std::vector<Case> cases = {
      {"frequency_padded(3) under freq+pos", frequency_padded(3),
       OrderingPolicy::freq()},
      {"polarity_flipped under lex+neg", polarity_flipped(),
       OrderingPolicy::lex(PolarityOrder::NegativeFirst)},
      {"relabeled(reversal) under revlex+pos",
       relabeled(reversal_permutation()), OrderingPolicy::revlex()},
  };
  for (const Case &c : cases) {
    CompareResult r = compare(c.formula, c.policy);
    const Disagreement *d = std::get_if<Disagreement>(&r);
    crit.require(d && d->kind == DisagreementKind::FalseUnsat,
                 std::string(c.label) + " must be a FalseUnsat disagreement");
  }
  crit.finish();
}

TEST(Acceptance, C4_OracleCrossEquivalence) {
  Criterion crit("C4 oracle-cross-equivalence", 60.0);

  int agreements = 0;
  for (uint64_t seed = 1; seed <= 1000; ++seed) {
    FormulaState f = generate(campaign_config(seed));
    ModelSet models = brute_force(f);
    OracleVerdict v = dpll_solve(f);
    bool agree = v.sat() == !models.empty();
    bool witness_ok = !v.sat() || evaluate_formula(*v.witness, f);
    if (agree && witness_ok) ++agreements;
    else crit.require(false, "seed " + std::to_string(seed) + " disagrees");
  }
  crit.require(agreements == 1000, "expected 1000/1000 agreements, got " +
                                       std::to_string(agreements));
  crit.finish();
}

TEST(Acceptance, C5_ConditioningSoundness) {
  Criterion crit("C5 conditioning-soundness", 60.0);

  size_t mismatches = 0;
  for (uint64_t seed = 1; seed <= 200; ++seed) {
    GenConfig cfg{seed, 3 + static_cast<int>(seed % 6),
                  1 + static_cast<int>(seed % 10)};
    FormulaState f = generate(cfg);
    for (int var = 1; var <= f.num_vars; ++var)
      for (bool positive : {true, false}) {
        Literal l(var, positive);
        auto conditioned = condition(f, l);
        std::vector<TotalAssignment> expected;
        for (unsigned long long idx = 0; idx < (1ull << f.num_vars); ++idx) {
          TotalAssignment m = TotalAssignment::from_index(f.num_vars, idx);
          if (evaluate_formula(m, f) && m.satisfies(l)) expected.push_back(m);
        }
        if (!conditioned) {
          if (!expected.empty()) ++mismatches;
          continue;
        }
        std::vector<TotalAssignment> got;
        for (unsigned long long idx = 0; idx < (1ull << f.num_vars); ++idx) {
          TotalAssignment m = TotalAssignment::from_index(f.num_vars, idx);
          if (evaluate_formula(m, *conditioned)) got.push_back(m);
        }
        if (got != expected) ++mismatches;
      }
  }
  crit.require(mismatches == 0,
               std::to_string(mismatches) + " conditioning mismatches");
  crit.finish();
}

TEST(Acceptance, C6_Shrinker) {
  Criterion crit("C6 shrinker", 30.0);

  CompareResult r = compare(frequency_padded(10), OrderingPolicy::lex());
  const Disagreement *d = std::get_if<Disagreement>(&r);
  crit.require(d && d->kind == DisagreementKind::FalseUnsat,
               "frequency_padded(10) must disagree as FalseUnsat");
  if (d) {
    Disagreement s = shrink(*d);
    crit.require(s.kind == DisagreementKind::FalseUnsat,
                 "shrunk instance must stay FalseUnsat");
    crit.require(s.formula.clauses.size() <= 3,
                 "shrunk instance must have <= 3 clauses, has " +
                     std::to_string(s.formula.clauses.size()));
    CompareResult re = compare(s.formula, s.policy);
    const Disagreement *rd = std::get_if<Disagreement>(&re);
    crit.require(rd && rd->kind == DisagreementKind::FalseUnsat,
                 "shrunk instance must re-verify under compare");

    // local minimality: no single clause or literal removal still disagrees
    bool minimal = true;
    auto survives = [&](const FormulaState &cand) {
      CompareResult rr = compare(cand, s.policy);
      auto *dd = std::get_if<Disagreement>(&rr);
      return dd && dd->kind == s.kind;
    };
    for (size_t i = 0; i < s.formula.clauses.size(); ++i) {
      FormulaState cand = s.formula;
      cand.clauses.erase(cand.clauses.begin() + static_cast<long>(i));
      if (survives(cand)) minimal = false;
    }
    for (size_t i = 0; i < s.formula.clauses.size(); ++i) {
      if (s.formula.clauses[i].size() != 3) continue;
      for (size_t j = 0; j < 3; ++j) {
        FormulaState cand = s.formula;
        cand.clauses[i] = s.formula.clauses[i].without_index(j);
        if (survives(cand)) minimal = false;
      }
    }
    crit.require(minimal, "shrunk instance must be locally minimal");
  }
  crit.finish();
}

TEST(Acceptance, C7_FormatRoundTrip) {
  Criterion crit("C7 format-round-trip", 10.0);

  std::vector<std::pair<std::string, FormulaState>> corpus = {
      {"paper.x3f", paper_counterexample()},
      {"frequency_padded_3.x3f", frequency_padded(3)},
      {"frequency_padded_10.x3f", frequency_padded(10)},
      {"polarity_flipped.x3f", polarity_flipped()},
      {"relabeled_reversal.x3f", relabeled(reversal_permutation())},
  };
  for (const auto &[name, built] : corpus) {
    std::string shipped;
    try {
      shipped = read_text_file(std::string(X3SAT_CORPUS_DIR) + "/" + name);
    } catch (const std::exception &e) {
      crit.require(false, e.what());
      continue;
    }
    crit.require(shipped == serialize(built), name + ": shipped != generated");
    crit.require(parse(shipped) == built, name + ": parse(serialize) != identity");
    crit.require(serialize(parse(shipped)) == shipped,
                 name + ": serialize(parse) not byte-exact");
  }
  for (uint64_t seed = 1; seed <= 1000; ++seed) {
    FormulaState f = generate(campaign_config(seed));
    std::string text = serialize(f);
    if (!(parse(text) == f) || serialize(parse(text)) != text) {
      crit.require(false, "round-trip failure at seed " + std::to_string(seed));
      break;
    }
  }
  crit.finish();
}

TEST(Acceptance, C8_TerminationProgress) {
  Criterion crit("C8 termination-progress", 60.0);

  size_t runs = 0, violations = 0;
  for (uint64_t seed = 1; seed <= 1000; ++seed) {
    FormulaState f = generate(campaign_config(seed));
    for (const OrderingPolicy &policy : policy_matrix(seed, f.num_vars)) {
      try {
        SalumVerdict v = scan(f, policy);
        if (remove_steps(v) > static_cast<size_t>(f.num_vars)) ++violations;
      } catch (const std::exception &) {
        ++violations;
      }
      ++runs;
    }
  }
  crit.require(runs == 8000, "expected 8000 runs, got " + std::to_string(runs));
  crit.require(violations == 0,
               std::to_string(violations) + " remove-counter violations");
  crit.finish();
}

} // namespace
