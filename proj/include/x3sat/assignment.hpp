#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "x3sat/literal.hpp"

namespace x3sat {

enum class BindOutcome {
  Added,   // fresh binding recorded
  Already, // identical binding existed; no change
  Conflict // opposite binding exists; assignment unchanged
};

/// The minterm: a conflict-checked partial assignment. A variable is bound at
/// most once; binding the negation of an existing entry is a Conflict, never
/// an overwrite.
class PartialAssignment {
public:
  PartialAssignment() = default;

  std::optional<bool> value(int var) const {
    auto it = bindings_.find(var);
    if (it == bindings_.end()) return std::nullopt;
    return it->second;
  }

  bool is_bound(int var) const { return bindings_.count(var) != 0; }

  /// True if `l` evaluates true under the current bindings.
  bool satisfies(Literal l) const {
    auto v = value(l.var);
    return v && *v == l.positive;
  }

  bool contradicts(Literal l) const {
    auto v = value(l.var);
    return v && *v != l.positive;
  }

  BindOutcome try_bind(Literal l) {
    auto it = bindings_.find(l.var);
    if (it == bindings_.end()) {
      bindings_.emplace(l.var, l.positive);
      return BindOutcome::Added;
    }
    return it->second == l.positive ? BindOutcome::Already
                                    : BindOutcome::Conflict;
  }

  size_t size() const { return bindings_.size(); }
  bool empty() const { return bindings_.empty(); }

  /// Bound literals in ascending variable order.
  std::vector<Literal> literals() const {
    std::vector<Literal> out;
    out.reserve(bindings_.size());
    for (auto [var, val] : bindings_) out.emplace_back(var, val);
    return out;
  }

  int max_var() const { return bindings_.empty() ? 0 : bindings_.rbegin()->first; }

  bool operator==(const PartialAssignment &o) const = default;

private:
  std::map<int, bool> bindings_;
};

/// Pure-value flavor of try_bind: nullopt signals a Conflict.
inline std::optional<PartialAssignment> bind(const PartialAssignment &p,
                                             Literal l) {
  PartialAssignment q = p;
  if (q.try_bind(l) == BindOutcome::Conflict) return std::nullopt;
  return q;
}

inline std::ostream &operator<<(std::ostream &os, const PartialAssignment &p) {
  os << '{';
  bool first = true;
  for (Literal l : p.literals()) {
    if (!first) os << ' ';
    os << l;
    first = false;
  }
  return os << '}';
}

/// A total assignment over variables 1..num_vars.
class TotalAssignment {
public:
  TotalAssignment() = default;
  explicit TotalAssignment(std::vector<bool> values) : values_(std::move(values)) {}

  /// Builds the assignment whose tuple (v1,...,vn) is `index`-th in
  /// lexicographic order, v1 being the most significant position.
  static TotalAssignment from_index(int num_vars, unsigned long long index) {
    std::vector<bool> v(static_cast<size_t>(num_vars));
    for (int i = 0; i < num_vars; ++i)
      v[static_cast<size_t>(i)] = (index >> (num_vars - 1 - i)) & 1u;
    return TotalAssignment(std::move(v));
  }

  int num_vars() const { return static_cast<int>(values_.size()); }

  bool value(int var) const {
    if (var < 1 || var > num_vars())
      throw std::out_of_range("assignment: variable out of range");
    return values_[static_cast<size_t>(var - 1)];
  }

  void set(int var, bool val) {
    if (var < 1 || var > num_vars())
      throw std::out_of_range("assignment: variable out of range");
    values_[static_cast<size_t>(var - 1)] = val;
  }

  bool satisfies(Literal l) const { return value(l.var) == l.positive; }

  const std::vector<bool> &values() const { return values_; }

  bool operator==(const TotalAssignment &o) const = default;
  auto operator<=>(const TotalAssignment &o) const = default;

private:
  std::vector<bool> values_;
};

inline std::ostream &operator<<(std::ostream &os, const TotalAssignment &m) {
  os << '(';
  for (int v = 1; v <= m.num_vars(); ++v) {
    if (v > 1) os << ',';
    os << (m.value(v) ? 1 : 0);
  }
  return os << ')';
}

} // namespace x3sat
