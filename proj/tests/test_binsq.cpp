#include "cubicsq/binsq.hpp"
#include "cubicsq/error.hpp"
#include "doctest.h"

using namespace cubicsq;

TEST_CASE("element from point") {
  const CubicField k(Int(2));
  const MordellCurve e = MordellCurve::from_m(2);
  const auto w = elem_from_point(k, 1, CurvePoint(e, 3, 5));
  CHECK(w.alpha == CubicElement(k, Rat(-9, 10), Rat(3, 5), Rat(1, 5)));
  CHECK(w.a == Rat(129, 100));
  CHECK(w.alpha * w.alpha == CubicElement(k, Rat(129, 100), -1));
  CHECK_THROWS_AS(elem_from_point(k, 1, CurvePoint::infinity()), InvalidPoint);
  CHECK_THROWS_AS(elem_from_point(k, 0, CurvePoint(e, 3, 5)), std::invalid_argument);
  CHECK_THROWS_AS(elem_from_point(k, 2, CurvePoint(e, 3, 5)), InvalidPoint);
}

TEST_CASE("twisted element and round trip") {
  const CubicField k(Int(20));
  const MordellCurve e = MordellCurve::twist(20, Rat(-7));
  const CurvePoint p(e, 14, 98);
  const auto w = elem_from_point(k, -7, p);
  CHECK(w.alpha * w.alpha == CubicElement(k, w.a, 7));
  CHECK(w.a == -19);
  const TwistPoint back = point_from_elem(w.alpha);
  CHECK(back.b == -7);
  CHECK(back.point == p);
  const TwistPoint neg = point_from_elem(-w.alpha);
  CHECK(neg.b == -7);
  CHECK(neg.point == -p);
}

TEST_CASE("point from element rejects non-binomial roots") {
  const CubicField k(Int(2));
  CHECK_THROWS_AS(point_from_elem(CubicElement(k, 1, 1, 1)), NotBinomial);
  CHECK_THROWS_AS(point_from_elem(CubicElement(k, 0)), NotBinomial);
  const TwistPoint triv = point_from_elem(CubicElement(k, 3));
  CHECK(triv.point.is_infinity());
}

TEST_CASE("star of the worked example") {
  const CubicField k(Int(2));
  const CubicElement a1(k, Rat(9, 10), Rat(-3, 5), Rat(-1, 5));
  const CubicElement a2(k, Rat(-16641, 7660), Rat(1290, 383), Rat(1000, 383));
  const StarTerms st = star_terms(a1, a2);
  CHECK(st.s_minus == Rat(-342, 383));
  CHECK(st.s_plus == Rat(-858, 383));
  CHECK(st.t_minus == Rat(-5383, 1915));
  CHECK(st.t_plus == Rat(-200, 383));
  CHECK(st.sigma == Rat(-6138414, 733445));
  CHECK(st.s3 == Rat(-28099233, 66234835));
  CHECK(st.t3 == Rat(-5000211, 66234835));
  CHECK(st.r3 == Rat(27002048329, 22652313570));
  const CubicElement s = star(a1, a2);
  CHECK(s == CubicElement(k, st.r3, st.s3, st.t3));
  const MordellCurve e = MordellCurve::from_m(2);
  const CurvePoint p3 = scalar_mul(e, 3, CurvePoint(e, 3, 5));
  CHECK(s == canonical_sign(elem_from_point(k, 1, p3).alpha));
}

TEST_CASE("star edge cases") {
  const CubicField k(Int(2));
  const CubicElement a(k, Rat(-9, 10), Rat(3, 5), Rat(1, 5));
  CHECK(star(a, CubicElement(k, 1)) == canonical_sign(a));
  CHECK(star(a, -a) == CubicElement(k, 1));  // P + (-P)
  CHECK_THROWS_AS(star_terms(a, a), std::invalid_argument);
  CHECK_THROWS_AS(star(a, CubicElement(CubicField(Int(3)), 1)), FieldMismatch);
  const MordellCurve e = MordellCurve::from_m(2);
  CHECK(star(a, a) == canonical_sign(elem_from_point(k, 1, double_point(e, CurvePoint(e, 3, 5))).alpha));
}

TEST_CASE("square test") {
  const auto r4 = is_square_binomial(CubicField(Int(4)), 5, 1);
  REQUIRE(r4.has_value());
  CHECK(*r4 == CubicElement(CubicField(Int(4)), -1, 1, Rat(1, 2)));
  const auto n = is_square_binomial(CubicField(Int(20)), -19, -7);
  REQUIRE(n.has_value());
  CHECK(*n * *n == CubicElement(CubicField(Int(20)), -19, 7));
  CHECK(norm(*n) == 1);
  CHECK(*n == canonical_sign(CubicElement(CubicField(Int(20)), 1, 1, Rat(-1, 2))));
  CHECK_FALSE(is_square_binomial(CubicField(Int(3)), 1, 1).has_value());
  CHECK(is_square_binomial(CubicField(Int(2)), 9, 0) == CubicElement(CubicField(Int(2)), 3));
  CHECK_THROWS_AS(is_square_binomial(CubicField(Int(2)), 0, 0), ZeroElement);
}

TEST_CASE("non-square certificate") {
  const CubicField k(Int(2));
  const MordellCurve e = MordellCurve::from_m(2);
  CHECK(nonsquare_certificate(k, CurvePoint(e, 3, 5)));
  CHECK_FALSE(nonsquare_certificate(k, CurvePoint(e, Rat(129, 100), Rat(383, 1000))));
}
