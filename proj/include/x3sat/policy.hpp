#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "x3sat/formula.hpp"

namespace x3sat {

enum class OrderingKind {
  Lexicographic,
  ReverseLexicographic,
  FrequencyDescending,
  FixedSequence
};

enum class PolarityOrder { PositiveFirst, NegativeFirst };

/// Which variable to decide next, and which polarity to try first.
struct OrderingPolicy {
  OrderingKind kind = OrderingKind::Lexicographic;
  PolarityOrder polarity = PolarityOrder::PositiveFirst;
  std::vector<int> sequence; // FixedSequence only; unlisted vars follow in id order

  static OrderingPolicy lex(PolarityOrder p = PolarityOrder::PositiveFirst) {
    return {OrderingKind::Lexicographic, p, {}};
  }
  static OrderingPolicy revlex(PolarityOrder p = PolarityOrder::PositiveFirst) {
    return {OrderingKind::ReverseLexicographic, p, {}};
  }
  static OrderingPolicy freq(PolarityOrder p = PolarityOrder::PositiveFirst) {
    return {OrderingKind::FrequencyDescending, p, {}};
  }
  static OrderingPolicy fixed(std::vector<int> seq,
                              PolarityOrder p = PolarityOrder::PositiveFirst) {
    return {OrderingKind::FixedSequence, p, std::move(seq)};
  }

  void validate(int num_vars) const {
    if (kind != OrderingKind::FixedSequence) return;
    std::set<int> seen;
    for (int v : sequence) {
      if (v < 1 || v > num_vars)
        throw std::invalid_argument("policy: sequence variable out of range");
      if (!seen.insert(v).second)
        throw std::invalid_argument("policy: sequence lists a variable twice");
    }
  }

  /// The full decision order over variables 1..f.num_vars. Frequency counts
  /// are taken over f's current clause list; ties fall back to ascending id.
  std::vector<int> decision_order(const FormulaState &f) const {
    validate(f.num_vars);
    std::vector<int> order(static_cast<size_t>(f.num_vars));
    std::iota(order.begin(), order.end(), 1);
    switch (kind) {
    case OrderingKind::Lexicographic:
      break;
    case OrderingKind::ReverseLexicographic:
      std::reverse(order.begin(), order.end());
      break;
    case OrderingKind::FrequencyDescending: {
      std::vector<int> freq(static_cast<size_t>(f.num_vars) + 1, 0);
      for (const Clause &c : f.clauses)
        for (Literal l : c) ++freq[static_cast<size_t>(l.var)];
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return freq[static_cast<size_t>(a)] > freq[static_cast<size_t>(b)];
      });
      break;
    }
    case OrderingKind::FixedSequence: {
      std::vector<int> out = sequence;
      std::set<int> listed(sequence.begin(), sequence.end());
      for (int v = 1; v <= f.num_vars; ++v)
        if (!listed.count(v)) out.push_back(v);
      return out;
    }
    }
    return order;
  }

  Literal first_literal(int var) const {
    return Literal(var, polarity == PolarityOrder::PositiveFirst);
  }

  bool operator==(const OrderingPolicy &o) const = default;
};

inline std::string to_token(const OrderingPolicy &p) {
  std::ostringstream os;
  switch (p.kind) {
  case OrderingKind::Lexicographic: os << "lex"; break;
  case OrderingKind::ReverseLexicographic: os << "revlex"; break;
  case OrderingKind::FrequencyDescending: os << "freq"; break;
  case OrderingKind::FixedSequence: {
    os << "fixed:";
    for (size_t i = 0; i < p.sequence.size(); ++i) {
      if (i) os << ',';
      os << p.sequence[i];
    }
    break;
  }
  }
  os << '+' << (p.polarity == PolarityOrder::PositiveFirst ? "pos" : "neg");
  return os.str();
}

/// Inverse of to_token, e.g. "lex+pos", "fixed:2,1,3+neg".
inline OrderingPolicy policy_from_token(const std::string &token) {
  auto plus = token.rfind('+');
  if (plus == std::string::npos)
    throw std::invalid_argument("policy token: missing '+'");
  std::string order = token.substr(0, plus);
  std::string pol = token.substr(plus + 1);
  PolarityOrder p;
  if (pol == "pos") p = PolarityOrder::PositiveFirst;
  else if (pol == "neg") p = PolarityOrder::NegativeFirst;
  else throw std::invalid_argument("policy token: bad polarity '" + pol + "'");

  if (order == "lex") return OrderingPolicy::lex(p);
  if (order == "revlex") return OrderingPolicy::revlex(p);
  if (order == "freq") return OrderingPolicy::freq(p);
  if (order.rfind("fixed:", 0) == 0) {
    std::vector<int> seq;
    std::string csv = order.substr(6);
    std::istringstream is(csv);
    std::string item;
    while (std::getline(is, item, ','))
      seq.push_back(std::stoi(item));
    return OrderingPolicy::fixed(std::move(seq), p);
  }
  throw std::invalid_argument("policy token: bad ordering '" + order + "'");
}

} // namespace x3sat
