#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cubicsq/polynomial.hpp"
#include "cubicsq/rational.hpp"

namespace cubicsq {

/// Default work budget for factorization and divisor enumeration.
inline constexpr std::uint64_t kDefaultEffort = std::uint64_t{1} << 22;

struct PrimePower {
  Int prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = sign * prod p^e, primes strictly increasing.
struct Factorization {
  int sign = 1;
  std::vector<PrimePower> prime_powers;

  Int product() const;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Miller-Rabin with the first 13 prime bases, which is deterministic for
/// n < 3.317e24. Above that range the Baillie-PSW test from GMP is used.
bool is_prime(const Int& n);

/// Complete factorization of n != 0.
///
/// Trial division by small primes, then Brent's variant of Pollard rho on the
/// remaining cofactors. effort bounds the total number of rho iterations;
/// EffortExceeded is thrown instead of returning an unsplit composite.
Factorization factorize(const Int& n, std::uint64_t effort = kDefaultEffort);

/// All positive divisors of |n|, ascending. n != 0.
std::vector<Int> divisors(const Int& n, std::uint64_t effort = kDefaultEffort);

/// Nonnegative rational square root of q, if q is the square of a rational.
std::optional<Rat> perfect_square_root(const Rat& q);
std::optional<Int> perfect_square_root(const Int& n);

struct CubeInfo {
  bool is_cubefree;
  bool is_cube;
};

/// Throws std::invalid_argument for m == 0.
CubeInfo cubefree_and_noncube(const Int& m, std::uint64_t effort = kDefaultEffort);

/// Exactly the rational roots of a nonzero polynomial, ascending.
///
/// Candidates p/q come from the rational root theorem (p | constant term,
/// q | leading coefficient) after stripping the factor x^k. Each candidate is
/// filtered by (q - p) | f(1) and (q + p) | f(-1) and then checked by exact
/// evaluation. EffortExceeded if factoring the end coefficients or the
/// candidate count exceeds the budget.
std::vector<Rat> rational_roots(const IntPoly& p, std::uint64_t effort = kDefaultEffort);

}  // namespace cubicsq
