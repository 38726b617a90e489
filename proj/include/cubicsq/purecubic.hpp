#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "cubicsq/arith.hpp"
#include "cubicsq/polynomial.hpp"
#include "cubicsq/rational.hpp"
#include "cubicsq/real.hpp"

namespace cubicsq {

/// K = Q(w) with w^3 = m, m cubefree and not a cube.
class CubicField {
 public:
  /// Throws InvalidField if m is zero, a cube, or not cubefree.
  explicit CubicField(Int m, std::uint64_t effort = kDefaultEffort);

  const Int& m() const { return m_; }

  friend bool operator==(const CubicField&, const CubicField&) = default;

 private:
  Int m_;
};

/// r + s w + t w^2 in a pure cubic field. Components are independent
/// canonical rationals; no common denominator is factored out.
class CubicElement {
 public:
  CubicElement(CubicField field, Rat r, Rat s = 0, Rat t = 0)
      : field_(std::move(field)), r_(std::move(r)), s_(std::move(s)), t_(std::move(t)) {}

  const CubicField& field() const { return field_; }
  const Int& m() const { return field_.m(); }
  const Rat& r() const { return r_; }
  const Rat& s() const { return s_; }
  const Rat& t() const { return t_; }

  bool is_zero() const { return r_.is_zero() && s_.is_zero() && t_.is_zero(); }
  bool is_rational() const { return s_.is_zero() && t_.is_zero(); }

  /// e.g. "-9/10 + 3/5*w + 1/5*w^2"
  std::string str(const std::string& generator = "w") const;

  CubicElement operator-() const { return {field_, -r_, -s_, -t_}; }
  /// The binary operators throw FieldMismatch for elements of different fields.
  friend CubicElement operator+(const CubicElement& a, const CubicElement& b);
  friend CubicElement operator-(const CubicElement& a, const CubicElement& b);
  friend CubicElement operator*(const CubicElement& a, const CubicElement& b);
  friend CubicElement operator*(const Rat& c, const CubicElement& a) {
    return {a.field_, c * a.r_, c * a.s_, c * a.t_};
  }

  friend bool operator==(const CubicElement&, const CubicElement&) = default;
  friend std::ostream& operator<<(std::ostream& os, const CubicElement& a) { return os << a.str(); }

 private:
  CubicField field_;
  Rat r_, s_, t_;
};

/// Ring product using w^3 = m.
CubicElement mul(const CubicElement& a, const CubicElement& b);

/// N(r + s w + t w^2) = r^3 + m s^3 + m^2 t^3 - 3 m r s t.
Rat norm(const CubicElement& a);
/// Tr(r + s w + t w^2) = 3r.
Rat trace(const CubicElement& a);

/// r - s w + t w^2. Maps elements whose square is r' - b w (no w^2 term) to
/// elements with the same property.
CubicElement flip(const CubicElement& a);

/// Image under the real embedding w -> cbrt(m).
Real real_embedding(const CubicElement& a, mpfr_prec_t bits);

/// a or -a, whichever has a positive real embedding. Zero maps to zero.
CubicElement canonical_sign(const CubicElement& a);

inline constexpr long kDefaultPrecisionDigits = 256;

/// Verified square root with positive real embedding.
///
/// gamma is recovered from the three embeddings of beta (one real, one
/// complex pair) at the requested precision, reconstructed component-wise
/// by continued fractions, and returned only if gamma^2 == beta exactly.
/// A failed attempt is retried once at four times the precision. Throws
/// PrecisionExceeded if the height the reconstruction needs cannot be
/// resolved at that precision.
std::optional<CubicElement> sqrt_in_field(const CubicElement& beta,
                                          long precision_digits = kDefaultPrecisionDigits);

/// Minimal polynomial y^3 - 3a y^2 + 3a^2 y - (a^3 - m b^3) of a - b w,
/// scaled to integer coefficients. Requires b != 0.
IntPoly binomial_minpoly(const Rat& a, const Rat& b, const CubicField& field);

}  // namespace cubicsq
