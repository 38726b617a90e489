#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "cubicsq/rational.hpp"

namespace cubicsq {

/// Univariate polynomial with integer coefficients, ascending degree.
/// Trailing zero coefficients are trimmed, so the zero polynomial is empty.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> ascending);

  /// Scales rational coefficients by the lcm of their denominators and
  /// divides out the content. The sign of the leading coefficient is kept.
  static IntPoly from_rational(std::span<const Rat> ascending);

  const std::vector<Int>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Int& leading() const { return c_.back(); }
  const Int& operator[](std::size_t i) const { return c_[i]; }

  Rat eval(const Rat& x) const;
  /// Homogenized value sum c_i p^i q^(n-i); zero iff p/q is a root (q != 0).
  Int eval_homogeneous(const Int& p, const Int& q) const;

  /// Human-readable form with descending powers of x, e.g. "x^6 - 291x^4 + 28227x^2 - 717409".
  std::string str(char var = 'x') const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;
  friend std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.str(); }

 private:
  std::vector<Int> c_;
};

}  // namespace cubicsq
