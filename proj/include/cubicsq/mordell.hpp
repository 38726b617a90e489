#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cubicsq/arith.hpp"
#include "cubicsq/rational.hpp"

namespace cubicsq {

/// The curve y^2 = x^3 + k with k != 0.
///
/// k is rational so that twists y^2 = x^3 - m b^3 with rational b need no
/// rescaling; all curves in practice have integral k.
class MordellCurve {
 public:
  explicit MordellCurve(Rat k);

  /// E_m : y^2 = x^3 - m.
  static MordellCurve from_m(const Int& m) { return MordellCurve(Rat(-m)); }
  /// y^2 = x^3 - m b^3.
  static MordellCurve twist(const Int& m, const Rat& b) { return MordellCurve(-Rat(m) * pow(b, 3)); }

  const Rat& k() const { return k_; }
  Rat rhs(const Rat& x) const { return x * x * x + k_; }
  /// "y^2 = x^3 - 2".
  std::string str() const;

  friend bool operator==(const MordellCurve&, const MordellCurve&) = default;

 private:
  Rat k_;
};

class CurvePoint;
namespace detail {
CurvePoint unchecked_point(Rat x, Rat y);
}

/// A rational point on a Mordell curve: the point at infinity or (x, y).
/// The public constructor validates the point against its curve.
class CurvePoint {
 public:
  /// The point at infinity.
  CurvePoint() = default;
  /// Throws InvalidPoint unless y^2 = x^3 + k.
  CurvePoint(const MordellCurve& curve, Rat x, Rat y);

  static CurvePoint infinity() { return {}; }

  bool is_infinity() const { return infinity_; }
  /// Only meaningful for affine points.
  const Rat& x() const { return x_; }
  const Rat& y() const { return y_; }

  CurvePoint operator-() const;
  std::string str() const;

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
  /// Infinity first, then by x, then by y.
  friend bool operator<(const CurvePoint& a, const CurvePoint& b);
  friend std::ostream& operator<<(std::ostream& os, const CurvePoint& p) { return os << p.str(); }

 private:
  friend CurvePoint detail::unchecked_point(Rat x, Rat y);

  bool infinity_ = true;
  Rat x_;
  Rat y_;
};

bool on_curve(const MordellCurve& curve, const CurvePoint& p);

/// Chord-and-tangent sum. With slope l through P and Q, the third
/// intersection is (x3, l*x3 + y1 - l*x1) and the sum is its reflection.
CurvePoint add(const MordellCurve& curve, const CurvePoint& p, const CurvePoint& q);

/// 2P = ((x^4 - 8kx) / 4y^2, (x^6 + 20kx^3 - 8k^2) / 8y^3); infinity when y = 0.
CurvePoint double_point(const MordellCurve& curve, const CurvePoint& p);

/// n P by double-and-add; negative n negates.
CurvePoint scalar_mul(const MordellCurve& curve, const Int& n, const CurvePoint& p);

/// All rational Q with 2Q = P, ascending.
///
/// x(Q) runs over the rational roots of x^4 - 4X x^3 - 8k x - 4kX where
/// X = x(P). At most two preimages exist for an affine P. For P at infinity
/// the result is infinity together with the rational 2-torsion.
std::vector<CurvePoint> halve(const MordellCurve& curve, const CurvePoint& p,
                              std::uint64_t effort = kDefaultEffort);

/// The halving quartic for x(P) = X, with denominators cleared.
IntPoly halving_quartic(const MordellCurve& curve, const Rat& x);

/// Affine points with x = a/e^2, gcd(a, e) = 1, |a| <= a_bound, 1 <= e <= e_bound.
/// Ordered by e, then a, then positive y before negative y.
std::vector<CurvePoint> search_points(const MordellCurve& curve, long e_bound, long a_bound);

}  // namespace cubicsq
