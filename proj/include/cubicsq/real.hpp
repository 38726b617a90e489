#pragma once

#include <mpfr.h>

#include <optional>
#include <string>
#include <utility>

#include "cubicsq/rational.hpp"

namespace cubicsq {

/// Converts a decimal-digit precision to MPFR bits.
mpfr_prec_t digits_to_bits(long digits);

/// Owning MPFR value. Precision is fixed per value and chosen explicitly;
/// binary operations produce the larger of the operand precisions.
class Real {
 public:
  explicit Real(mpfr_prec_t bits);
  Real(const Rat& q, mpfr_prec_t bits);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(Real o) noexcept;
  ~Real();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Base-2 exponent e with 0.5 <= |x| / 2^e < 1; 0 for zero.
  long exponent() const;
  std::string str(int digits = 20) const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  Real operator-() const;

  friend Real sqrt(const Real& a);
  friend Real cbrt(const Real& a);
  friend Real abs(const Real& a);
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }

  void swap(Real& o) noexcept { mpfr_swap(v_, o.v_); }

 private:
  mpfr_t v_;
};

struct Complex {
  Real re;
  Real im;

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  Complex conj() const { return {re, -im}; }
};

/// Principal square root (nonnegative real part).
Complex sqrt(const Complex& z);

/// Continued-fraction reconstruction of a rational from a real approximation.
///
/// Walks the convergents of approx and returns the first one within the
/// tolerance 2^-(precision - guard_bits) * max(1, |approx|) whose numerator
/// and denominator are bounded by height_bound. The result is only as good
/// as the precision of approx: callers must verify it exactly.
std::optional<Rat> rational_reconstruct(const Real& approx, const Int& height_bound,
                                        long guard_bits = 32);

}  // namespace cubicsq
