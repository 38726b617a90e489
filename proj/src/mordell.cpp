#include "cubicsq/mordell.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cubicsq/error.hpp"

namespace cubicsq {

namespace detail {

CurvePoint unchecked_point(Rat x, Rat y) {
  CurvePoint p;
  p.infinity_ = false;
  p.x_ = std::move(x);
  p.y_ = std::move(y);
  return p;
}

}  // namespace detail

using detail::unchecked_point;

MordellCurve::MordellCurve(Rat k) : k_(std::move(k)) {
  if (k_.is_zero()) throw std::invalid_argument("Mordell curve with k = 0 is singular");
}

std::string MordellCurve::str() const {
  return "y^2 = x^3 " + std::string(k_.sign() < 0 ? "- " : "+ ") + abs(k_).str();
}

CurvePoint::CurvePoint(const MordellCurve& curve, Rat x, Rat y)
    : infinity_(false), x_(std::move(x)), y_(std::move(y)) {
  if (y_ * y_ != curve.rhs(x_))
    throw InvalidPoint("(" + x_.str() + ", " + y_.str() + ") is not on " + curve.str());
}

CurvePoint CurvePoint::operator-() const {
  if (infinity_) return *this;
  return unchecked_point(x_, -y_);
}

std::string CurvePoint::str() const {
  if (infinity_) return "inf";
  return "(" + x_.str() + ", " + y_.str() + ")";
}

bool operator<(const CurvePoint& a, const CurvePoint& b) {
  if (a.infinity_ || b.infinity_) return a.infinity_ && !b.infinity_;
  if (a.x_ != b.x_) return a.x_ < b.x_;
  return a.y_ < b.y_;
}

bool on_curve(const MordellCurve& curve, const CurvePoint& p) {
  return p.is_infinity() || p.y() * p.y() == curve.rhs(p.x());
}

CurvePoint add(const MordellCurve& curve, const CurvePoint& p, const CurvePoint& q) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  if (p.x() == q.x()) {
    if (p.y() == -q.y()) return CurvePoint::infinity();
    return double_point(curve, p);
  }
  const Rat lambda = (q.y() - p.y()) / (q.x() - p.x());
  Rat x3 = lambda * lambda - p.x() - q.x();
  Rat y3 = lambda * (p.x() - x3) - p.y();
  return unchecked_point(std::move(x3), std::move(y3));
}

CurvePoint double_point(const MordellCurve& curve, const CurvePoint& p) {
  if (p.is_infinity() || p.y().is_zero()) return CurvePoint::infinity();
  const Rat& x = p.x();
  const Rat& y = p.y();
  const Rat& k = curve.k();
  const Rat x3 = x * x * x;
  Rat nx = (x3 * x - Rat(8) * k * x) / (Rat(4) * y * y);
  Rat ny = (x3 * x3 + Rat(20) * k * x3 - Rat(8) * k * k) / (Rat(8) * y * y * y);
  return unchecked_point(std::move(nx), std::move(ny));
}

CurvePoint scalar_mul(const MordellCurve& curve, const Int& n, const CurvePoint& p) {
  CurvePoint base = sgn(n) < 0 ? -p : p;
  Int e = abs(n);
  CurvePoint acc;
  const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    acc = double_point(curve, acc);
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = add(curve, acc, base);
  }
  return acc;
}

IntPoly halving_quartic(const MordellCurve& curve, const Rat& x) {
  const Rat& k = curve.k();
  const std::vector<Rat> c = {Rat(-4) * k * x, Rat(-8) * k, Rat(0), Rat(-4) * x, Rat(1)};
  return IntPoly::from_rational(c);
}

std::vector<CurvePoint> halve(const MordellCurve& curve, const CurvePoint& p, std::uint64_t effort) {
  std::vector<CurvePoint> out;
  if (p.is_infinity()) {
    out.push_back(CurvePoint::infinity());
    // Rational 2-torsion: x^3 = -k.
    const IntPoly cubic = IntPoly::from_rational(std::vector<Rat>{curve.k(), 0, 0, 1});
    for (const Rat& r : rational_roots(cubic, effort)) out.push_back(unchecked_point(r, 0));
    std::sort(out.begin(), out.end());
    return out;
  }
  for (const Rat& x0 : rational_roots(halving_quartic(curve, p.x()), effort)) {
    const auto y0 = perfect_square_root(curve.rhs(x0));
    if (!y0 || y0->is_zero()) continue;
    for (const Rat& y : {*y0, -*y0}) {
      const CurvePoint q = unchecked_point(x0, y);
      if (double_point(curve, q) == p) out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CurvePoint> search_points(const MordellCurve& curve, long e_bound, long a_bound) {
  if (e_bound < 1 || a_bound < 1) throw std::invalid_argument("search bounds must be >= 1");
  std::vector<CurvePoint> out;
  for (long e = 1; e <= e_bound; ++e) {
    const Int e2 = Int(e) * e;
    for (long a = -a_bound; a <= a_bound; ++a) {
      if (std::gcd(a, e) != 1) continue;
      const Rat x(Int(a), e2);
      const auto y = perfect_square_root(curve.rhs(x));
      if (!y) continue;
      out.push_back(unchecked_point(x, *y));
      if (!y->is_zero()) out.push_back(unchecked_point(x, -*y));
    }
  }
  return out;
}

}  // namespace cubicsq
