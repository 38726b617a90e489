#include "cubicsq/polynomial.hpp"

#include <sstream>

namespace cubicsq {

IntPoly::IntPoly(std::vector<Int> ascending) : c_(std::move(ascending)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::from_rational(std::span<const Rat> ascending) {
  Int scale = 1;
  for (const Rat& r : ascending) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), r.den().get_mpz_t());
  std::vector<Int> c;
  c.reserve(ascending.size());
  Int content = 0;
  for (const Rat& r : ascending) {
    c.push_back(r.num() * (scale / r.den()));
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.back().get_mpz_t());
  }
  if (content > 1)
    for (Int& x : c) x /= content;
  return IntPoly(std::move(c));
}

Rat IntPoly::eval(const Rat& x) const {
  Rat acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
  return acc;
}

Int IntPoly::eval_homogeneous(const Int& p, const Int& q) const {
  // Horner in p with a running power of q for the lower terms.
  Int acc = 0;
  Int qpow = 1;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * p + *it * qpow;
    qpow *= q;
  }
  return acc;
}

std::string IntPoly::str(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Int& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Int mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

}  // namespace cubicsq
