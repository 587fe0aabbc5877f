/// @file modmath.hpp
/// @brief Exact 64-bit modular arithmetic: Bezout identities, inverses,
///        factorization, square roots mod primes, and monic quadratic
///        congruences mod arbitrary 64-bit moduli.
///
/// All arithmetic is exact; intermediates that could leave 64 bits go
/// through 128-bit temporaries, and inputs that cannot be handled exactly
/// raise Overflow instead of wrapping.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lensknots/errors.hpp"

namespace lensknots {

using i64 = std::int64_t;
using u64 = std::uint64_t;

/// Result of the extended Euclidean algorithm: g = gcd(|x|,|y|) >= 0 and
/// u*x + v*y = g.
struct ExtGcd {
    i64 g;
    i64 u;
    i64 v;
};

/// Extended gcd. ext_gcd(0,0) = {0,0,0}. INT64_MIN inputs raise Overflow
/// (their magnitude is not representable).
ExtGcd ext_gcd(i64 x, i64 y);

/// x reduced into [0, m). Requires m >= 1.
i64 mod_reduce(i64 x, i64 m);

/// Inverse of x mod m, in [1, m-1]. Requires m >= 2; throws NonUnit when
/// gcd(x, m) != 1.
i64 mod_inv(i64 x, i64 m);

/// (a * b) mod m via 128-bit product. Requires m >= 1; operands are reduced
/// first, result is in [0, m).
i64 mul_mod(i64 a, i64 b, i64 m);

/// (base ^ exp) mod m. Requires m >= 1.
i64 pow_mod(i64 base, u64 exp, i64 m);

/// Deterministic Miller-Rabin, exact for every n < 2^63.
bool is_prime(i64 n);

/// One prime power in a factorization.
struct FactorEntry {
    i64 prime;
    int exponent;
};

/// n together with its sorted prime-power decomposition (empty for n = 1).
struct Factorization {
    i64 value;
    std::vector<FactorEntry> factors;
};

/// Factor n >= 1 (trial division to 1e6, then Miller-Rabin certified
/// splitting via Brent's rho). Deterministic.
Factorization factorize(i64 n);

/// All x in [0, r) with x*x = a (mod r), sorted ascending.  r must pass the
/// primality check (else NotPrime).  For r = 2 the answer is {a mod 2}; for
/// odd r it is {} / {0} / {x, r-x} by Euler's criterion + Tonelli-Shanks.
std::vector<i64> sqrt_mod_prime(i64 a, i64 r);

/// All x in [0, m) with x^2 + c1*x + c0 = 0 (mod m), sorted ascending.
/// Requires m >= 2. Solved per prime power (Hensel lifting, including the
/// singular f'(x) = 0 branch) and recombined by CRT.
std::vector<i64> solve_monic_quadratic_mod(i64 c1, i64 c0, i64 m);

}  // namespace lensknots
