#include "cubicsq/arith.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "cubicsq/error.hpp"

namespace cubicsq {

namespace {

constexpr unsigned long kTrialBound = 10007;

// Deterministic for n < 3317044064679887385961981 (Sorenson and Webster).
constexpr std::array<unsigned long, 13> kMillerRabinBases = {2, 3, 5, 7, 11, 13, 17,
                                                             19, 23, 29, 31, 37, 41};
const Int kDeterministicLimit("3317044064679887385961981", 10);

bool miller_rabin(const Int& n, unsigned long base) {
  Int d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  Int x;
  const Int a = base;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const Int n_minus_1 = n - 1;
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n_minus_1) return true;
  }
  return false;
}

struct Budget {
  std::uint64_t remaining;
  void spend(std::uint64_t n, const Int& target) {
    if (n > remaining)
      throw EffortExceeded("could not split " + target.get_str() + " within the effort bound");
    remaining -= n;
  }
};

// Brent's cycle detection with batched gcds. Returns a nontrivial factor.
Int pollard_brent(const Int& n, Budget& budget) {
  constexpr unsigned long kBatch = 128;
  for (unsigned long c = 1;; ++c) {
    Int y = 2, x, q = 1, g = 1, ys;
    unsigned long r = 1;
    auto step = [&](Int& v) { v = (v * v + c) % n; };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      budget.spend(r, n);
      unsigned long k = 0;
      do {
        ys = y;
        const unsigned long lim = std::min(kBatch, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          step(y);
          q = (q * abs(x - y)) % n;
        }
        budget.spend(lim, n);
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += kBatch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      // Batch overshot; replay single steps from the saved point.
      do {
        step(ys);
        budget.spend(1, n);
        mpz_gcd(g.get_mpz_t(), Int(abs(x - ys)).get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(const Int& n, Budget& budget, std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (unsigned long k = 2; k <= bits; ++k) {
      Int root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
        std::map<Int, unsigned> sub;
        split(root, budget, sub);
        for (const auto& [p, e] : sub) out[p] += e * static_cast<unsigned>(k);
        return;
      }
    }
  }
  const Int d = pollard_brent(n, budget);
  split(d, budget, out);
  split(n / d, budget, out);
}

}  // namespace

Int Factorization::product() const {
  Int out = sign;
  for (const auto& [p, e] : prime_powers) out *= pow(p, e);
  return out;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (unsigned long p : kMillerRabinBases) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  if (n < kDeterministicLimit) {
    return std::all_of(kMillerRabinBases.begin(), kMillerRabinBases.end(),
                       [&](unsigned long b) { return miller_rabin(n, b); });
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

Factorization factorize(const Int& n, std::uint64_t effort) {
  if (n == 0) throw std::invalid_argument("factorize: n must be nonzero");
  Factorization f;
  f.sign = sgn(n) < 0 ? -1 : 1;
  Int rest = abs(n);
  std::map<Int, unsigned> found;
  for (unsigned long p = 2; p <= kTrialBound && rest > 1; p += (p == 2 ? 1 : 2)) {
    if (Int(p) * p > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++found[Int(p)];
    }
  }
  Budget budget{effort};
  split(rest, budget, found);
  for (const auto& [p, e] : found) f.prime_powers.push_back({p, e});
  return f;
}

std::vector<Int> divisors(const Int& n, std::uint64_t effort) {
  const Factorization f = factorize(n, effort);
  std::vector<Int> out{1};
  for (const auto& [p, e] : f.prime_powers) {
    const std::size_t base = out.size();
    Int pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Int> perfect_square_root(const Int& n) {
  if (n < 0 || !mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Rat> perfect_square_root(const Rat& q) {
  auto num = perfect_square_root(q.num());
  if (!num) return std::nullopt;
  auto den = perfect_square_root(q.den());
  if (!den) return std::nullopt;
  return Rat(*num, *den);
}

CubeInfo cubefree_and_noncube(const Int& m, std::uint64_t effort) {
  if (m == 0) throw std::invalid_argument("cubefree_and_noncube: m must be nonzero");
  const Factorization f = factorize(m, effort);
  CubeInfo info{true, true};
  for (const auto& pp : f.prime_powers) {
    if (pp.exponent >= 3) info.is_cubefree = false;
    if (pp.exponent % 3 != 0) info.is_cube = false;
  }
  return info;
}

std::vector<Rat> rational_roots(const IntPoly& poly, std::uint64_t effort) {
  if (poly.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  std::vector<Rat> roots;
  std::size_t low = 0;
  while (poly[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  const IntPoly f(std::vector<Int>(poly.coeffs().begin() + static_cast<std::ptrdiff_t>(low),
                                   poly.coeffs().end()));
  if (f.degree() >= 1) {
    const std::vector<Int> ps = divisors(f[0], effort);
    const std::vector<Int> qs = divisors(f.leading(), effort);
    if (ps.size() * qs.size() > effort)
      throw EffortExceeded("too many rational root candidates (" +
                           std::to_string(ps.size() * qs.size()) + ")");
    const Int f_plus = f.eval_homogeneous(1, 1);
    const Int f_minus = f.eval_homogeneous(-1, 1);
    // Cauchy bound: every root has |x| < 1 + max |c_i / c_n|.
    Rat bound = 0;
    for (const Int& c : f.coeffs()) bound = std::max(bound, Rat(abs(c), abs(f.leading())));
    bound += 1;
    Int g;
    for (const Int& q : qs) {
      for (const Int& p0 : ps) {
        mpz_gcd(g.get_mpz_t(), p0.get_mpz_t(), q.get_mpz_t());
        if (g != 1) continue;
        if (Rat(p0, q) > bound) break;
        for (int s : {1, -1}) {
          const Int p = s * p0;
          // f(1) = sum c_i, and (q - p) divides q^n f(1) - F(p, q), likewise at -1.
          if (Int dm = q - p; dm != 0 && f_plus != 0 && !mpz_divisible_p(f_plus.get_mpz_t(), dm.get_mpz_t())) continue;
          if (Int dp = q + p; dp != 0 && f_minus != 0 && !mpz_divisible_p(f_minus.get_mpz_t(), dp.get_mpz_t())) continue;
          if (f.eval_homogeneous(p, q) == 0) roots.emplace_back(p, q);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace cubicsq
