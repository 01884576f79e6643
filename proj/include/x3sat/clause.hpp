#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "x3sat/literal.hpp"

namespace x3sat {

/// An exactly-one constraint over 1..3 literals: satisfied iff precisely one
/// literal evaluates true. Variable ids within a clause must be distinct;
/// degenerate clauses like (x + !x + y) are rejected at construction.
class Clause {
public:
  Clause() = delete;

  explicit Clause(std::vector<Literal> lits) : lits_(std::move(lits)) {
    if (lits_.empty() || lits_.size() > 3)
      throw std::invalid_argument("clause: width must be 1..3");
    for (size_t i = 0; i < lits_.size(); ++i)
      for (size_t j = i + 1; j < lits_.size(); ++j)
        if (lits_[i].var == lits_[j].var)
          throw std::invalid_argument("clause: repeated variable");
  }

  Clause(std::initializer_list<int> codes) : Clause(from_codes(codes)) {}

  size_t size() const { return lits_.size(); }
  const Literal &operator[](size_t i) const { return lits_[i]; }
  auto begin() const { return lits_.begin(); }
  auto end() const { return lits_.end(); }

  bool contains(Literal l) const {
    return std::find(lits_.begin(), lits_.end(), l) != lits_.end();
  }

  bool contains_var(int var) const {
    return std::any_of(lits_.begin(), lits_.end(),
                       [var](Literal l) { return l.var == var; });
  }

  /// The single literal other than `l`; only meaningful on width-2 clauses.
  Literal other_than(Literal l) const {
    assert(lits_.size() == 2);
    return lits_[0] == l ? lits_[1] : lits_[0];
  }

  /// Copy with `l` struck out. Throws if `l` is absent or the clause is unit.
  Clause without(Literal l) const {
    std::vector<Literal> rest;
    for (Literal x : lits_)
      if (!(x == l)) rest.push_back(x);
    if (rest.size() != lits_.size() - 1)
      throw std::invalid_argument("clause: literal not present");
    return Clause(std::move(rest));
  }

  /// Copy with the literal at position `i` struck out (for the shrinker).
  Clause without_index(size_t i) const {
    if (i >= lits_.size()) throw std::out_of_range("clause: bad index");
    std::vector<Literal> rest = lits_;
    rest.erase(rest.begin() + static_cast<long>(i));
    return Clause(std::move(rest));
  }

  int max_var() const {
    int m = 0;
    for (Literal l : lits_) m = std::max(m, l.var);
    return m;
  }

  bool operator==(const Clause &o) const = default;

private:
  static std::vector<Literal> from_codes(std::initializer_list<int> codes) {
    std::vector<Literal> v;
    for (int c : codes) v.push_back(Literal::from_int(c));
    return v;
  }

  std::vector<Literal> lits_;
};

inline std::ostream &operator<<(std::ostream &os, const Clause &c) {
  os << '(';
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) os << ' ';
    os << c[i];
  }
  return os << ')';
}

} // namespace x3sat
