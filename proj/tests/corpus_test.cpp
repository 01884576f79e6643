#include <gtest/gtest.h>

#include "x3sat/compare.hpp"
#include "x3sat/corpus.hpp"
#include "x3sat/oracle.hpp"
#include "x3sat/x3f.hpp"

using namespace x3sat;

namespace {

TEST(PaperCounterexample, Shape) {
  FormulaState phi = paper_counterexample();
  EXPECT_EQ(phi.num_vars, 5);
  EXPECT_EQ(phi.clauses.size(), 3u);
  EXPECT_TRUE(phi.minterm.empty());
}

TEST(PaperCounterexample, ModelSetIsTheKnownPair) {
  ModelSet ms = brute_force(paper_counterexample());
  ASSERT_EQ(ms.size(), 2u);
  EXPECT_TRUE(ms.contains(TotalAssignment({false, false, true, false, true})));
  EXPECT_TRUE(ms.contains(TotalAssignment({false, true, false, false, false})));
}

TEST(GoldenTraceCheckpoints, TranscribedStatesAreWellFormed) {
  GoldenTrace g = golden_trace();
  ASSERT_EQ(g.checkpoints.size(), 4u);
  EXPECT_EQ(g.checkpoints[0].first, "after-reduce-a");
  EXPECT_EQ(g.checkpoints[0].second.clauses,
            (std::vector<Clause>{Clause{2, 4, 5}, Clause{3, 4, -5}}));
  EXPECT_EQ(g.checkpoints[2].second.clauses,
            (std::vector<Clause>{Clause{4, 5}, Clause{4, -5}}));
  // checkpoint 4: the run died binding y; its consistent part ends at !y
  const FormulaState &conflict = g.checkpoints[3].second;
  EXPECT_TRUE(conflict.clauses.empty());
  EXPECT_TRUE(conflict.minterm.satisfies(neg(5)));
  EXPECT_TRUE(conflict.minterm.satisfies(pos(4)));
  for (const auto &[label, state] : g.checkpoints) {
    EXPECT_EQ(state.num_vars, 5);
    EXPECT_EQ(state.minterm.literals().size() > 0, true);
  }
}

TEST(FrequencyPadded, CountsAndFrequencies) {
  FormulaState f = frequency_padded(3);
  EXPECT_EQ(f.clauses.size(), 6u);
  EXPECT_EQ(f.num_vars, 11);
  int a_count = f.occurrence_count(1);
  EXPECT_EQ(a_count, 4);
  for (int v = 2; v <= f.num_vars; ++v)
    EXPECT_LT(f.occurrence_count(v), a_count) << "variable " << v;
}

TEST(FrequencyPadded, StaysSatisfiable) {
  // models: a=0 forces the base pair, each pad picks one of x_i, y_i
  EXPECT_EQ(brute_force(frequency_padded(3)).size(), 16u);
  EXPECT_TRUE(dpll_solve(frequency_padded(10)).sat());
  EXPECT_THROW(frequency_padded(0), std::invalid_argument);
}

TEST(PolarityFlipped, FirstClauseCarriesNegatedA) {
  FormulaState f = polarity_flipped();
  EXPECT_EQ(f.clauses[0], (Clause{-1, 2, 3}));
  ModelSet ms = brute_force(f);
  ASSERT_EQ(ms.size(), 2u);
  // models of the base formula with a complemented
  EXPECT_TRUE(ms.contains(TotalAssignment({true, false, true, false, true})));
  EXPECT_TRUE(ms.contains(TotalAssignment({true, true, false, false, false})));
}

TEST(Relabeled, IdentityAndValidation) {
  EXPECT_EQ(relabeled({1, 2, 3, 4, 5}), paper_counterexample());
  EXPECT_THROW(relabeled({1, 2, 3, 4}), std::invalid_argument);
  EXPECT_THROW(relabeled({1, 2, 3, 4, 4}), std::invalid_argument);
  EXPECT_THROW(relabeled({1, 2, 3, 4, 6}), std::invalid_argument);
}

TEST(Relabeled, ModelCountInvariantUnderPermutations) {
  std::vector<std::vector<int>> perms = {
      {5, 4, 3, 2, 1}, {2, 1, 3, 4, 5}, {3, 5, 1, 2, 4}, {4, 1, 5, 3, 2}};
  for (const auto &perm : perms)
    EXPECT_EQ(brute_force(relabeled(perm)).size(), 2u);
}

TEST(Corpus, EveryFormulaIsOracleSatisfiable) {
  for (const FormulaState &f :
       {paper_counterexample(), frequency_padded(3), frequency_padded(10),
        polarity_flipped(), relabeled(reversal_permutation())})
    EXPECT_TRUE(dpll_solve(f).sat());
}

TEST(Corpus, DesignatedPoliciesYieldFalseUnsat) {
  struct Case {
    FormulaState formula;
    OrderingPolicy policy;
  };
  std::vector<Case> cases = {
      {paper_counterexample(), OrderingPolicy::lex()},
      {frequency_padded(3), OrderingPolicy::freq()},
      {polarity_flipped(), OrderingPolicy::lex(PolarityOrder::NegativeFirst)},
      {relabeled(reversal_permutation()), OrderingPolicy::revlex()},
  };
  for (const Case &c : cases) {
    CompareResult r = compare(c.formula, c.policy);
    ASSERT_TRUE(is_disagreement(r)) << to_token(c.policy);
    EXPECT_EQ(std::get<Disagreement>(r).kind, DisagreementKind::FalseUnsat);
  }
}

TEST(Corpus, ShippedFilesMatchTheBuilders) {
  auto check = [](const std::string &name, const FormulaState &f) {
    std::string shipped =
        read_text_file(std::string(X3SAT_CORPUS_DIR) + "/" + name);
    EXPECT_EQ(shipped, serialize(f)) << name;
  };
  check("paper.x3f", paper_counterexample());
  check("frequency_padded_3.x3f", frequency_padded(3));
  check("frequency_padded_10.x3f", frequency_padded(10));
  check("polarity_flipped.x3f", polarity_flipped());
  check("relabeled_reversal.x3f", relabeled(reversal_permutation()));
}

} // namespace
