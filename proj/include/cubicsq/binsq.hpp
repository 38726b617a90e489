#pragma once

#include <optional>

#include "cubicsq/mordell.hpp"
#include "cubicsq/purecubic.hpp"

namespace cubicsq {

/// Squares of the form a - b w and rational points on y^2 = x^3 - m b^3.
///
/// An affine point (x, y) on the twist corresponds to
///
///     alpha = -x^2/(2y) + (b x / y) w + (b^2 / y) w^2,
///     alpha^2 = (x^4 + 8 m b^3 x) / (4 y^2) - b w,
///
/// and conversely alpha = r + s w + t w^2 with 2rt + s^2 = 0 gives the
/// point (b s / t, b^2 / t) where b = -(2rs + m t^2). The point at infinity
/// corresponds to alpha = 1, and P -> -P corresponds to alpha -> -alpha.

struct BinomialSquareWitness {
  CubicField field;
  Rat b;
  CubicElement alpha;
  /// alpha^2 = a - b w.
  Rat a;
  /// On y^2 = x^3 - m b^3.
  CurvePoint point;
};

/// Throws InvalidPoint if P is infinity, has y = 0, or is off the twist.
BinomialSquareWitness elem_from_point(const CubicField& field, const Rat& b, const CurvePoint& p);

struct TwistPoint {
  /// The twist scale recovered from 2rs + m t^2 = -b; zero for rational alpha.
  Rat b;
  CurvePoint point;
};

/// Inverse of elem_from_point. Rational alpha maps to infinity.
/// Throws NotBinomial unless 2rt + s^2 = 0.
TwistPoint point_from_elem(const CubicElement& alpha);

/// Intermediate quantities of the closed-form chord composition.
struct StarTerms {
  Rat s_minus, s_plus, t_minus, t_plus, sigma;
  Rat r3, s3, t3;
};

/// Closed formulas for two elements with the same twist scale and
/// s1/t1 != s2/t2:
///
///     S- = s1 t2 - s2 t1,  S+ = s1 t2 + s2 t1,  T- = t1 - t2,  T+ = t1 t2,
///     Sigma = (s2 - s1) T+ - S+ T-,
///     s3 = (S-^3 S+ - S- T-^2 T+) / (T-^3 T+ + S-^2 Sigma),
///     t3 = -S-^3 T+ / (T-^3 T+ + S-^2 Sigma),   r3 = -s3^2 / (2 t3).
///
/// The result is the element of the third point on the chord, -(P1 + P2).
/// For b != 1 the formulas run in the basis w' = b w, where the element
/// squares to a - w'. Throws NotBinomial if the chord is vertical or
/// either input is not binomial.
StarTerms star_terms(const CubicElement& a1, const CubicElement& a2);

/// Group law transported from the curve, taken modulo the sign of alpha:
/// the element of P1 + P2 with positive real embedding. The generic case
/// uses star_terms; coincident or opposite points, and the identity, go
/// through the point addition. Throws FieldMismatch or NotBinomial.
CubicElement star(const CubicElement& a1, const CubicElement& a2);

/// A square root of a - b w with positive real embedding, if one exists.
///
/// Necessary condition: N(a - b w) = a^3 - m b^3 is a rational square y^2.
/// Then a - b w is a square iff (a, y) or (a, -y) is in 2E'(Q) for
/// E': y^2 = x^3 - m b^3. Throws ZeroElement for a = b = 0 and
/// EffortExceeded from halving.
std::optional<CubicElement> is_square_binomial(const CubicField& field, const Rat& a, const Rat& b,
                                               std::uint64_t effort = kDefaultEffort);

/// For P = (r/t^2, s/t^3) on y^2 = x^3 - m: true iff r - t^2 w is not a
/// square. Decided both by halving P and by is_square_binomial; throws
/// std::logic_error if the two disagree.
bool nonsquare_certificate(const CubicField& field, const CurvePoint& p,
                           std::uint64_t effort = kDefaultEffort);

}  // namespace cubicsq
