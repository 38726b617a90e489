#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace cubicsq {

using Int = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Zero is represented as 0/1. Every constructor and arithmetic operator
/// returns a canonical value, so structural equality is numeric equality.
class Rat {
 public:
  Rat() = default;
  Rat(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(int n) : q_(n) {}   // NOLINT(google-explicit-constructor)
  Rat(const Int& n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  // Lazy gmpxx integer expressions such as -m or a * b.
  template <class U>
  Rat(const __gmp_expr<mpz_t, U>& e) : q_(Int(e)) {}  // NOLINT(google-explicit-constructor)
  Rat(const Int& num, const Int& den);
  explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses "p" or "p/q" with optional sign on p. Throws ParseError.
  static Rat parse(std::string_view text);

  const Int& num() const { return q_.get_num(); }
  const Int& den() const { return q_.get_den(); }
  const mpq_class& gmp() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return den() == 1; }
  int sign() const { return sgn(q_); }

  /// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
  std::string str() const;

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

Rat abs(const Rat& r);
Rat pow(const Rat& r, unsigned e);
Int pow(const Int& n, unsigned e);

/// Parses a decimal integer with optional sign. Throws ParseError.
Int parse_int(std::string_view text);

/// Number of bits in max(|num|, den).
std::size_t height_bits(const Rat& r);

}  // namespace cubicsq
