#include "cubicsq/cubicsq.hpp"
#include "doctest.h"

using namespace cubicsq;

namespace {

bool has(const std::vector<CurvePoint>& v, const CurvePoint& p) { return std::find(v.begin(), v.end(), p) != v.end(); }

}  // namespace

TEST_CASE("small arithmetic examples") {
  CHECK(factorize(Int(12)).prime_powers == std::vector<PrimePower>{{2, 2}, {3, 1}});
  CHECK(factorize(Int(1)).prime_powers.empty());
  CHECK(factorize(Int(1)).sign == 1);
  CHECK(perfect_square_root(Rat(121)) == Rat(11));
  CHECK(perfect_square_root(Rat(4, 9)) == Rat(2, 3));
  CHECK(perfect_square_root(Rat(2)) == std::nullopt);
  CHECK(cubefree_and_noncube(Int(11025)).is_cubefree);
  CHECK_FALSE(cubefree_and_noncube(Int(11025)).is_cube);
  CHECK(rational_roots(IntPoly({-1, 0, 1})) == std::vector<Rat>{-1, 1});
  CHECK(rational_roots(IntPoly({1, 0, 1})).empty());
}

TEST_CASE("reconstruction examples") {
  CHECK(rational_reconstruct(Real(Rat(1, 2), 64), 10) == Rat(1, 2));
  CHECK(rational_reconstruct(Real(Rat(129, 100), 200), Int(1) << 20) == Rat(129, 100));
  Real pi(128);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  const auto r = rational_reconstruct(pi, 10);
  // Either nothing or a convergent that is visibly not pi.
  if (r) CHECK(*r != Rat(Int("314159265358979323846"), Int("100000000000000000000")));
}

TEST_CASE("curve examples") {
  CHECK(on_curve(MordellCurve(Rat(-26)), CurvePoint(MordellCurve(Rat(-26)), 3, 1)));
  const MordellCurve e4(Rat(-4));
  CHECK(double_point(e4, CurvePoint(e4, 2, -2)) == CurvePoint(e4, 5, 11));
  const MordellCurve en(Rat(6860));
  CHECK(double_point(en, CurvePoint(en, 14, 98)) == CurvePoint(en, -19, 1));
  const MordellCurve e2(Rat(-2));
  CHECK(scalar_mul(e2, 2, CurvePoint(e2, 3, 5)) == double_point(e2, CurvePoint(e2, 3, 5)));
  CHECK(scalar_mul(e2, -1, CurvePoint(e2, 3, 5)) == CurvePoint(e2, 3, -5));
  CHECK(halve(e2, CurvePoint(e2, 3, 5)).empty());

  const MordellCurve e26(Rat(-26));
  const auto s26 = search_points(e26, 1, 40);
  for (const auto& p : {CurvePoint(e26, 3, 1), CurvePoint(e26, 3, -1), CurvePoint(e26, 35, 207),
                        CurvePoint(e26, 35, -207)})
    CHECK(has(s26, p));
  const MordellCurve e1(Rat(1));
  const auto s1 = search_points(e1, 1, 10);
  for (const auto& p : {CurvePoint(e1, 0, 1), CurvePoint(e1, 0, -1), CurvePoint(e1, 2, 3), CurvePoint(e1, 2, -3),
                        CurvePoint(e1, -1, 0)})
    CHECK(has(s1, p));
}

TEST_CASE("field examples") {
  const CubicField k2(Int(2));
  CHECK(norm(CubicElement(k2, 5, 0, -1)) == 121);
  CHECK(norm(CubicElement(k2, 1)) == 1);
  CHECK(trace(CubicElement(k2, 1)) == 3);
  CHECK(norm(CubicElement(CubicField(Int(26)), 3, -1)) == 1);
  const CubicElement a(k2, 1, 2, 3);
  CHECK(a * CubicElement(k2, 1) == a);

  const auto r = sqrt_in_field(CubicElement(k2, 5, 0, -1));
  REQUIRE(r.has_value());
  CHECK((*r == CubicElement(k2, -1, 1, 1) || *r == CubicElement(k2, 1, -1, -1)));
  CHECK(sqrt_in_field(CubicElement(k2, 4)) == CubicElement(k2, 2));
  CHECK_FALSE(sqrt_in_field(CubicElement(CubicField(Int(26)), 3, -1)).has_value());

  CHECK(binomial_minpoly(129, 100, k2) == IntPoly({-(Int(129) * 129 * 129 - 2000000), 49923, -387, 1}));
  const Int a20 = -19, b20 = -7;
  CHECK(binomial_minpoly(-19, -7, CubicField(Int(20))) ==
        IntPoly({-(a20 * a20 * a20 - 20 * b20 * b20 * b20), 3 * a20 * a20, -3 * a20, 1}));
}

TEST_CASE("correspondence examples") {
  const CubicField k2(Int(2));
  const MordellCurve e2 = MordellCurve::from_m(2);
  const TwistPoint tp = point_from_elem(CubicElement(k2, Rat(-9, 10), Rat(3, 5), Rat(1, 5)));
  CHECK(tp.b == 1);
  CHECK(tp.point == CurvePoint(e2, 3, 5));
  CHECK(point_from_elem(CubicElement(k2, 1)).point.is_infinity());

  const CubicElement quoted(k2, Rat(-16641, 7660), Rat(1290, 383), Rat(1000, 383));
  for (const Rat& y : {Rat(383, 1000), Rat(-383, 1000)}) {
    const CubicElement al = elem_from_point(k2, 1, CurvePoint(e2, Rat(129, 100), y)).alpha;
    CHECK((al.r() == quoted.r() || al.r() == -quoted.r()));
    CHECK((al.s() == quoted.s() || al.s() == -quoted.s()));
    CHECK((al.t() == quoted.t() || al.t() == -quoted.t()));
  }
  const CubicElement sq(k2, Rat(2340922881), -Rat(58675600));
  CHECK(quoted * quoted == Rat(1, 58675600) * sq);

  const CubicField k20(Int(20));
  const CubicElement nagell(k20, 1, 1, Rat(-1, 2));
  const MordellCurve tw = MordellCurve::twist(20, -7);
  const TwistPoint nag = point_from_elem(nagell);
  CHECK(nag.b == -7);
  CHECK(nag.point == CurvePoint(tw, 14, -98));
  CHECK(point_from_elem(-nagell).point == CurvePoint(tw, 14, 98));
}

TEST_CASE("square test examples") {
  CHECK_FALSE(is_square_binomial(CubicField(Int(26)), 35, 1).has_value());
  const CubicField k2(Int(2));
  const MordellCurve e2 = MordellCurve::from_m(2);
  CHECK(nonsquare_certificate(k2, CurvePoint(e2, 3, 5)));
  const MordellCurve e4 = MordellCurve::from_m(4);
  CHECK_FALSE(nonsquare_certificate(CubicField(Int(4)), CurvePoint(e4, 5, 11)));
  CHECK_FALSE(nonsquare_certificate(k2, double_point(e2, CurvePoint(e2, 3, 5))));
}

TEST_CASE("torsion points of order three give trivial roots") {
  for (long c : {2L, 3L, 5L}) {
    // y^2 = x^3 + c^2 is E_m with m = -c^2; (0, c) maps to an element with r = 0.
    const Int m = -Int(c) * c;
    const CubicField k(m);
    const auto w = elem_from_point(k, 1, CurvePoint(MordellCurve::from_m(m), 0, c));
    CHECK(w.alpha.r() == 0);
    CHECK(w.alpha * w.alpha == CubicElement(k, 0, -1));
  }
}
