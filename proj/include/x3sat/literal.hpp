#pragma once

#include <cassert>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace x3sat {

/// A variable id (1-based) together with a polarity.
/// Encoded in text as a signed integer: +v / -v.
struct Literal {
  int var = 0;
  bool positive = true;

  Literal() = default;
  Literal(int v, bool pos) : var(v), positive(pos) {
    if (v < 1) throw std::invalid_argument("literal: variable id must be >= 1");
  }

  Literal negated() const { return Literal(var, !positive); }

  int to_int() const { return positive ? var : -var; }

  static Literal from_int(int code) {
    if (code == 0) throw std::invalid_argument("literal: code must be nonzero");
    return Literal(std::abs(code), code > 0);
  }

  bool operator==(const Literal &o) const = default;
};

inline Literal negate(Literal l) { return l.negated(); }

/// Convenience constructors; `pos(3)` reads better than `Literal(3, true)`.
inline Literal pos(int var) { return Literal(var, true); }
inline Literal neg(int var) { return Literal(var, false); }

inline std::ostream &operator<<(std::ostream &os, Literal l) {
  return os << l.to_int();
}

} // namespace x3sat
