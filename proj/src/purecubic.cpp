#include "cubicsq/purecubic.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "cubicsq/error.hpp"

namespace cubicsq {

CubicField::CubicField(Int m, std::uint64_t effort) : m_(std::move(m)) {
  if (m_ == 0) throw InvalidField("m must be nonzero");
  const CubeInfo info = cubefree_and_noncube(m_, effort);
  if (info.is_cube) throw InvalidField(m_.get_str() + " is a cube");
  if (!info.is_cubefree) throw InvalidField(m_.get_str() + " is not cubefree");
}

namespace {

void require_same_field(const CubicElement& a, const CubicElement& b) {
  if (a.field() != b.field())
    throw FieldMismatch("elements of Q(cbrt(" + a.m().get_str() + ")) and Q(cbrt(" + b.m().get_str() + "))");
}

void append_term(std::ostringstream& os, bool& first, const Rat& c, const std::string& unit) {
  if (c.is_zero()) return;
  if (first) {
    if (c.sign() < 0) os << '-';
  } else {
    os << (c.sign() < 0 ? " - " : " + ");
  }
  first = false;
  const Rat mag = abs(c);
  if (unit.empty()) {
    os << mag.str();
  } else {
    if (mag != 1) os << mag.str() << '*';
    os << unit;
  }
}

}  // namespace

std::string CubicElement::str(const std::string& generator) const {
  std::ostringstream os;
  bool first = true;
  append_term(os, first, r_, "");
  append_term(os, first, s_, generator);
  append_term(os, first, t_, generator + "^2");
  if (first) return "0";
  return os.str();
}

CubicElement operator+(const CubicElement& a, const CubicElement& b) {
  require_same_field(a, b);
  return {a.field_, a.r_ + b.r_, a.s_ + b.s_, a.t_ + b.t_};
}

CubicElement operator-(const CubicElement& a, const CubicElement& b) {
  require_same_field(a, b);
  return {a.field_, a.r_ - b.r_, a.s_ - b.s_, a.t_ - b.t_};
}

CubicElement operator*(const CubicElement& a, const CubicElement& b) {
  require_same_field(a, b);
  const Rat m(a.m());
  // w^3 = m, w^4 = m w.
  Rat r = a.r_ * b.r_ + m * (a.s_ * b.t_ + a.t_ * b.s_);
  Rat s = a.r_ * b.s_ + a.s_ * b.r_ + m * a.t_ * b.t_;
  Rat t = a.r_ * b.t_ + a.s_ * b.s_ + a.t_ * b.r_;
  return {a.field_, std::move(r), std::move(s), std::move(t)};
}

CubicElement mul(const CubicElement& a, const CubicElement& b) { return a * b; }

Rat norm(const CubicElement& a) {
  const Rat m(a.m());
  const Rat& r = a.r();
  const Rat& s = a.s();
  const Rat& t = a.t();
  return r * r * r + m * s * s * s + m * m * t * t * t - Rat(3) * m * r * s * t;
}

Rat trace(const CubicElement& a) { return Rat(3) * a.r(); }

CubicElement flip(const CubicElement& a) { return {a.field(), a.r(), -a.s(), a.t()}; }

Real real_embedding(const CubicElement& a, mpfr_prec_t bits) {
  const Real w = cbrt(Real(Rat(a.m()), bits));
  return Real(a.r(), bits) + w * (Real(a.s(), bits) + w * Real(a.t(), bits));
}

CubicElement canonical_sign(const CubicElement& a) {
  if (a.is_zero()) return a;
  // Precision grows until the sign is resolved; a nonzero element never embeds to 0.
  for (mpfr_prec_t bits = 128;; bits *= 2) {
    const Real v = real_embedding(a, bits);
    const long scale = static_cast<long>(std::max({height_bits(a.r()), height_bits(a.s()), height_bits(a.t())}) +
                                         mpz_sizeinbase(a.m().get_mpz_t(), 2));
    if (!v.is_zero() && v.exponent() > -static_cast<long>(bits) + scale + 32)
      return v.sign() > 0 ? a : -a;
  }
}

namespace {

std::optional<CubicElement> sqrt_attempt(const CubicElement& beta, mpfr_prec_t bits, const Int& height_bound) {
  const Real w = cbrt(Real(Rat(beta.m()), bits));
  const Real w2 = w * w;
  const Real r(beta.r(), bits), s(beta.s(), bits), t(beta.t(), bits);

  const Real real_value = r + s * w + t * w2;
  if (real_value.sign() <= 0) return std::nullopt;

  const Real half(Rat(-1, 2), bits);
  const Real root3_half = sqrt(Real(Rat(3), bits)) * Real(Rat(1, 2), bits);
  const Complex zeta{half, root3_half};
  const Complex zeta_bar = zeta.conj();
  const Complex w_c{w, Real(bits)};
  const Complex w2_c{w2, Real(bits)};
  const Complex sigma1 = Complex{r, Real(bits)} + Complex{s, Real(bits)} * w_c * zeta +
                         Complex{t, Real(bits)} * w2_c * zeta_bar;

  const Real g0 = sqrt(real_value);
  const Real third(Rat(1, 3), bits);
  const Real two(Rat(2), bits);
  const Complex root1 = sqrt(sigma1);
  for (int eps : {1, -1}) {
    const Complex g1 = eps > 0 ? root1 : Complex{-root1.re, -root1.im};
    const Real u = (g0 + two * g1.re) * third;
    const Real v = (g0 + two * (zeta_bar * g1).re) * third / w;
    const Real x = (g0 + two * (zeta * g1).re) * third / w2;
    auto ru = rational_reconstruct(u, height_bound);
    auto rv = rational_reconstruct(v, height_bound);
    auto rx = rational_reconstruct(x, height_bound);
    if (!ru || !rv || !rx) continue;
    CubicElement gamma(beta.field(), *ru, *rv, *rx);
    if (gamma * gamma == beta) return gamma;
  }
  return std::nullopt;
}

}  // namespace

std::optional<CubicElement> sqrt_in_field(const CubicElement& beta, long precision_digits) {
  if (beta.is_zero()) return beta;
  const std::size_t coeff_bits =
      std::max({height_bits(beta.r()), height_bits(beta.s()), height_bits(beta.t())});
  const std::size_t m_bits = mpz_sizeinbase(beta.m().get_mpz_t(), 2);
  const std::size_t bound_bits = 2 * coeff_bits + 2 * m_bits + 64;
  Int height_bound = 1;
  height_bound <<= static_cast<mp_bitcnt_t>(bound_bits);
  // Separating two rationals of height <= B needs about 2 log2 B bits, plus
  // the magnitude of the values and the reconstruction guard.
  const auto needed = static_cast<mpfr_prec_t>(2 * bound_bits + coeff_bits + 2 * m_bits + 128);

  const mpfr_prec_t base = digits_to_bits(precision_digits);
  for (mpfr_prec_t bits : {base, 4 * base}) {
    if (auto gamma = sqrt_attempt(beta, bits, height_bound)) return gamma;
  }
  if (needed > 4 * base)
    throw PrecisionExceeded("square root needs about " + std::to_string(needed) + " bits; have " +
                            std::to_string(4 * base));
  return std::nullopt;
}

IntPoly binomial_minpoly(const Rat& a, const Rat& b, const CubicField& field) {
  if (b.is_zero()) throw std::invalid_argument("binomial_minpoly: b must be nonzero");
  const Rat n = a * a * a - Rat(field.m()) * b * b * b;
  const std::array<Rat, 4> c = {-n, Rat(3) * a * a, Rat(-3) * a, Rat(1)};
  return IntPoly::from_rational(c);
}

}  // namespace cubicsq
