#include "cubicsq/real.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace cubicsq {

namespace {

mpfr_prec_t max_prec(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

mpfr_prec_t digits_to_bits(long digits) {
  return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digits) * 3.3219280948873623)) + 16;
}

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(const Rat& q, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_q(v_, q.gmp().get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  // Leave o valid at minimal precision; it may still be destroyed or assigned.
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(Real o) noexcept {
  swap(o);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

long Real::exponent() const { return is_zero() ? 0 : mpfr_get_exp(v_); }

std::string Real::str(int digits) const {
  mpfr_exp_t exp = 0;
  char* raw = mpfr_get_str(nullptr, &exp, 10, static_cast<std::size_t>(digits), v_, MPFR_RNDN);
  std::unique_ptr<char, decltype(&mpfr_free_str)> holder(raw, &mpfr_free_str);
  std::string mant(raw);
  const bool neg = !mant.empty() && mant.front() == '-';
  if (neg) mant.erase(0, 1);
  return (neg ? "-0." : "0.") + mant + "e" + std::to_string(exp);
}

Real operator+(const Real& a, const Real& b) {
  Real out(max_prec(a, b));
  mpfr_add(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}

Real operator-(const Real& a, const Real& b) {
  Real out(max_prec(a, b));
  mpfr_sub(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}

Real operator*(const Real& a, const Real& b) {
  Real out(max_prec(a, b));
  mpfr_mul(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}

Real operator/(const Real& a, const Real& b) {
  Real out(max_prec(a, b));
  mpfr_div(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}

Real Real::operator-() const {
  Real out(precision());
  mpfr_neg(out.v_, v_, MPFR_RNDN);
  return out;
}

Real sqrt(const Real& a) {
  Real out(a.precision());
  mpfr_sqrt(out.v_, a.v_, MPFR_RNDN);
  return out;
}

Real cbrt(const Real& a) {
  Real out(a.precision());
  mpfr_cbrt(out.v_, a.v_, MPFR_RNDN);
  return out;
}

Real abs(const Real& a) {
  Real out(a.precision());
  mpfr_abs(out.v_, a.v_, MPFR_RNDN);
  return out;
}

Complex sqrt(const Complex& z) {
  const mpfr_prec_t bits = std::max(z.re.precision(), z.im.precision());
  const Real half(Rat(1, 2), bits);
  const Real modulus = sqrt(z.re * z.re + z.im * z.im);
  Real re = sqrt(abs((modulus + z.re) * half));
  Real im = sqrt(abs((modulus - z.re) * half));
  if (z.im.sign() < 0) im = -im;
  return {std::move(re), std::move(im)};
}

std::optional<Rat> rational_reconstruct(const Real& approx, const Int& height_bound, long guard_bits) {
  const mpfr_prec_t bits = approx.precision();
  const long tol_exp = -static_cast<long>(bits) + guard_bits + std::max(0L, approx.exponent());
  Real tol(bits);
  mpfr_set_ui_2exp(tol.get(), 1, tol_exp, MPFR_RNDN);

  // Convergents h/k from the expansion of approx.
  Int h_prev = 0, h = 1, k_prev = 1, k = 0;
  Real rest = approx;
  Int a;
  for (int iter = 0; iter < 100000; ++iter) {
    mpfr_get_z(a.get_mpz_t(), rest.get(), MPFR_RNDD);
    Int h_next = a * h + h_prev;
    Int k_next = a * k + k_prev;
    if (abs(h_next) > height_bound || k_next > height_bound) return std::nullopt;
    h_prev = std::move(h);
    h = std::move(h_next);
    k_prev = std::move(k);
    k = std::move(k_next);

    const Rat candidate(h, k);
    if (abs(approx - Real(candidate, bits)) < tol) return candidate;

    Real frac = rest - Real(Rat(a), bits);
    if (frac.is_zero()) return std::nullopt;
    Real one(Rat(1), bits);
    rest = one / frac;
  }
  return std::nullopt;
}

}  // namespace cubicsq
