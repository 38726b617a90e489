#include "cubicsq/rational.hpp"

#include <algorithm>
#include <cctype>

#include "cubicsq/error.hpp"

namespace cubicsq {

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rat::Rat(const Int& num, const Int& den) : q_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

Int parse_int(std::string_view text) {
  if (!valid_integer_text(text)) throw ParseError("not an integer: '" + std::string(text) + "'");
  if (text.front() == '+') text.remove_prefix(1);
  return Int(std::string(text), 10);
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
    throw ParseError("sign in denominator: '" + std::string(text) + "'");
  const Int num = parse_int(text.substr(0, slash));
  const Int den = parse_int(den_text);
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  return Rat(num, den);
}

std::string Rat::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

Int pow(const Int& n, unsigned e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), n.get_mpz_t(), e);
  return out;
}

Rat pow(const Rat& r, unsigned e) { return Rat(pow(r.num(), e), pow(r.den(), e)); }

std::size_t height_bits(const Rat& r) {
  return std::max(mpz_sizeinbase(r.num().get_mpz_t(), 2), mpz_sizeinbase(r.den().get_mpz_t(), 2));
}

}  // namespace cubicsq
