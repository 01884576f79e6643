#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "x3sat/formula.hpp"

namespace x3sat {

/// xorshift64* with Marsaglia's shift triple (12, 25, 27) and Vigna's
/// multiplier 0x2545F4914F6CDD1D. The all-zero state is invalid, so seed 0
/// is replaced by the golden-ratio constant 0x9E3779B97F4A7C15.
/// These constants are load-bearing: generated formulas are part of the
/// test contract and must be reproducible bit-for-bit (see README).
class Xorshift64Star {
public:
  explicit Xorshift64Star(uint64_t seed)
      : state_(seed ? seed : 0x9E3779B97F4A7C15ull) {}

  uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1Dull;
  }

  uint64_t below(uint64_t bound) { return next() % bound; }

private:
  uint64_t state_;
};

struct GenConfig {
  uint64_t seed = 1;
  int num_vars = 0;
  int num_clauses = 0;
  uint32_t width2_weight = 1;
  uint32_t width3_weight = 1;

  void validate() const {
    if (num_vars < 1) throw std::invalid_argument("gen: num_vars must be >= 1");
    if (num_clauses < 1)
      throw std::invalid_argument("gen: num_clauses must be >= 1");
    if (width2_weight == 0 && width3_weight == 0)
      throw std::invalid_argument("gen: clause width weights are both zero");
    if (width3_weight > 0 && num_vars < 3)
      throw std::invalid_argument("gen: width-3 clauses need num_vars >= 3");
    if (width2_weight > 0 && num_vars < 2)
      throw std::invalid_argument("gen: width-2 clauses need num_vars >= 2");
  }
};

/// Deterministic function of cfg. Per clause: width w = 2 if
/// next() % (w2+w3) < w2 else 3; then w times, draw var = 1 + next() % V
/// (redrawing until unseen in this clause) followed by one polarity draw,
/// positive iff next() % 2 == 0.
inline FormulaState generate(const GenConfig &cfg) {
  cfg.validate();
  Xorshift64Star rng(cfg.seed);
  std::vector<Clause> clauses;
  clauses.reserve(static_cast<size_t>(cfg.num_clauses));
  uint64_t total_weight = cfg.width2_weight + cfg.width3_weight;
  for (int k = 0; k < cfg.num_clauses; ++k) {
    size_t width = rng.below(total_weight) < cfg.width2_weight ? 2 : 3;
    std::vector<Literal> lits;
    while (lits.size() < width) {
      int var = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(cfg.num_vars)));
      bool seen = false;
      for (Literal l : lits) seen |= l.var == var;
      if (seen) continue;
      lits.emplace_back(var, rng.below(2) == 0);
    }
    clauses.emplace_back(std::move(lits));
  }
  return FormulaState(std::move(clauses), cfg.num_vars);
}

/// Fisher-Yates shuffle of [1..num_vars] driven by the same generator,
/// seeded with seed XOR 0x9E3779B97F4A7C15. Used for the fixed-sequence
/// row of the fuzzing policy matrix.
inline std::vector<int> shuffled_sequence(uint64_t seed, int num_vars) {
  std::vector<int> seq(static_cast<size_t>(num_vars));
  for (int i = 0; i < num_vars; ++i) seq[static_cast<size_t>(i)] = i + 1;
  Xorshift64Star rng(seed ^ 0x9E3779B97F4A7C15ull);
  for (size_t i = seq.size(); i > 1; --i)
    std::swap(seq[i - 1], seq[rng.below(i)]);
  return seq;
}

} // namespace x3sat
