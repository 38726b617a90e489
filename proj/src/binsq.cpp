#include "cubicsq/binsq.hpp"

#include <stdexcept>

#include "cubicsq/error.hpp"

namespace cubicsq {

namespace {

// 2rt + s^2 = 0 characterises alpha whose square has no w^2 term.
bool is_binomial_root(const CubicElement& alpha) {
  return Rat(2) * alpha.r() * alpha.t() + alpha.s() * alpha.s() == 0;
}

Rat twist_scale(const CubicElement& alpha) {
  return -(Rat(2) * alpha.r() * alpha.s() + Rat(alpha.m()) * alpha.t() * alpha.t());
}

}  // namespace

BinomialSquareWitness elem_from_point(const CubicField& field, const Rat& b, const CurvePoint& p) {
  if (b.is_zero()) throw std::invalid_argument("elem_from_point: b must be nonzero");
  if (p.is_infinity()) throw InvalidPoint("the point at infinity corresponds to the trivial element 1");
  const MordellCurve curve = MordellCurve::twist(field.m(), b);
  if (!on_curve(curve, p))
    throw InvalidPoint(p.str() + " is not on " + curve.str());
  // y = 0 would make m b^3 a cube.
  if (p.y().is_zero()) throw InvalidPoint(p.str() + " is 2-torsion");

  const Rat& x = p.x();
  const Rat& y = p.y();
  CubicElement alpha(field, -(x * x) / (Rat(2) * y), b * x / y, b * b / y);
  const Rat big_m = Rat(field.m()) * pow(b, 3);
  Rat a = (pow(x, 4) + Rat(8) * big_m * x) / (Rat(4) * y * y);

  if (alpha * alpha != CubicElement(field, a, -b))
    throw std::logic_error("elem_from_point: square identity failed for " + p.str());
  return {field, b, std::move(alpha), std::move(a), p};
}

TwistPoint point_from_elem(const CubicElement& alpha) {
  if (!is_binomial_root(alpha))
    throw NotBinomial("2rt + s^2 != 0 for " + alpha.str());
  if (alpha.is_zero()) throw NotBinomial("zero is not in the group");
  if (alpha.t().is_zero()) return {Rat(0), CurvePoint::infinity()};  // then s = 0 too
  const Rat b = twist_scale(alpha);
  const MordellCurve curve = MordellCurve::twist(alpha.m(), b);
  return {b, CurvePoint(curve, b * alpha.s() / alpha.t(), b * b / alpha.t())};
}

StarTerms star_terms(const CubicElement& a1, const CubicElement& a2) {
  if (a1.field() != a2.field()) throw FieldMismatch("star of elements from different fields");
  if (!is_binomial_root(a1) || a1.t().is_zero()) throw NotBinomial(a1.str() + " is not a nontrivial binomial root");
  if (!is_binomial_root(a2) || a2.t().is_zero()) throw NotBinomial(a2.str() + " is not a nontrivial binomial root");
  const Rat b = twist_scale(a1);
  if (twist_scale(a2) != b) throw NotBinomial("elements square to a - b w for different b");

  // Coordinates in the basis w' = b w.
  const Rat s1 = a1.s() / b, t1 = a1.t() / (b * b);
  const Rat s2 = a2.s() / b, t2 = a2.t() / (b * b);

  StarTerms out;
  out.s_minus = s1 * t2 - s2 * t1;
  if (out.s_minus.is_zero()) throw std::invalid_argument("star_terms: vertical chord (s1/t1 == s2/t2)");
  out.s_plus = s1 * t2 + s2 * t1;
  out.t_minus = t1 - t2;
  out.t_plus = t1 * t2;
  out.sigma = (s2 - s1) * out.t_plus - out.s_plus * out.t_minus;

  const Rat sm2 = out.s_minus * out.s_minus;
  const Rat sm3 = sm2 * out.s_minus;
  const Rat den = pow(out.t_minus, 3) * out.t_plus + sm2 * out.sigma;
  const Rat s3 = (sm3 * out.s_plus - out.s_minus * out.t_minus * out.t_minus * out.t_plus) / den;
  const Rat t3 = -(sm3 * out.t_plus) / den;
  out.s3 = s3 * b;
  out.t3 = t3 * b * b;
  out.r3 = -(out.s3 * out.s3) / (Rat(2) * out.t3);
  return out;
}

CubicElement star(const CubicElement& a1, const CubicElement& a2) {
  if (a1.field() != a2.field()) throw FieldMismatch("star of elements from different fields");
  const TwistPoint p1 = point_from_elem(a1);
  const TwistPoint p2 = point_from_elem(a2);
  const CubicElement one(a1.field(), 1);
  if (p1.point.is_infinity()) return p2.point.is_infinity() ? one : canonical_sign(a2);
  if (p2.point.is_infinity()) return canonical_sign(a1);
  if (p1.b != p2.b) throw NotBinomial("elements square to a - b w for different b");

  if (p1.point.x() != p2.point.x()) {
    const StarTerms terms = star_terms(a1, a2);
    return canonical_sign(CubicElement(a1.field(), terms.r3, terms.s3, terms.t3));
  }
  const MordellCurve curve = MordellCurve::twist(a1.m(), p1.b);
  const CurvePoint sum = add(curve, p1.point, p2.point);
  if (sum.is_infinity()) return one;
  return canonical_sign(elem_from_point(a1.field(), p1.b, sum).alpha);
}

std::optional<CubicElement> is_square_binomial(const CubicField& field, const Rat& a, const Rat& b,
                                               std::uint64_t effort) {
  if (a.is_zero() && b.is_zero()) throw ZeroElement("a - b w is zero");
  if (b.is_zero()) {
    auto root = perfect_square_root(a);
    if (!root) return std::nullopt;
    return CubicElement(field, *root);
  }
  const auto y = perfect_square_root(a * a * a - Rat(field.m()) * pow(b, 3));
  if (!y) return std::nullopt;

  const MordellCurve curve = MordellCurve::twist(field.m(), b);
  const CubicElement target(field, a, -b);
  for (const Rat& sy : {*y, -*y}) {
    const auto preimages = halve(curve, CurvePoint(curve, a, sy), effort);
    if (preimages.empty()) continue;
    CubicElement alpha = canonical_sign(elem_from_point(field, b, preimages.front()).alpha);
    if (alpha * alpha != target) throw std::logic_error("is_square_binomial: halving gave a wrong root");
    return alpha;
  }
  return std::nullopt;
}

bool nonsquare_certificate(const CubicField& field, const CurvePoint& p, std::uint64_t effort) {
  if (p.is_infinity()) throw InvalidPoint("nonsquare_certificate needs an affine point");
  const MordellCurve curve = MordellCurve::from_m(field.m());
  if (!on_curve(curve, p)) throw InvalidPoint(p.str() + " is not on " + curve.str());
  const auto t = perfect_square_root(p.x().den());
  if (!t) throw InvalidPoint("denominator of x is not a square");

  const bool by_halving = halve(curve, p, effort).empty();
  const bool by_square_test = !is_square_binomial(field, Rat(p.x().num()), Rat(*t * *t), effort).has_value();
  if (by_halving != by_square_test)
    throw std::logic_error("nonsquare_certificate: halving and square test disagree at " + p.str());
  return by_halving;
}

}  // namespace cubicsq
