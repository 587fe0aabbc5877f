#include "lensknots/modmath.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace lensknots {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

}  // namespace

ExtGcd ext_gcd(i64 x, i64 y) {
    if (x == INT64_MIN || y == INT64_MIN)
        throw Overflow("ext_gcd: |INT64_MIN| is not representable");
    if (x == 0 && y == 0) return {0, 0, 0};
    // Iterative extended Euclid on |x|, |y|; fix signs of the coefficients at the end.
    i64 a = x < 0 ? -x : x;
    i64 b = y < 0 ? -y : y;
    i64 u0 = 1, v0 = 0;  // coefficients of a
    i64 u1 = 0, v1 = 1;  // coefficients of b
    while (b != 0) {
        i64 q = a / b;
        i64 t = a - q * b;
        a = b;
        b = t;
        t = u0 - q * u1;
        u0 = u1;
        u1 = t;
        t = v0 - q * v1;
        v0 = v1;
        v1 = t;
    }
    if (x < 0) u0 = -u0;
    if (y < 0) v0 = -v0;
    return {a, u0, v0};
}

i64 mod_reduce(i64 x, i64 m) {
    if (m < 1) throw std::invalid_argument("mod_reduce: modulus must be positive");
    i64 r = x % m;
    return r < 0 ? r + m : r;
}

i64 mod_inv(i64 x, i64 m) {
    if (m < 2) throw std::invalid_argument("mod_inv: modulus must be at least 2");
    ExtGcd e = ext_gcd(mod_reduce(x, m), m);
    if (e.g != 1) throw NonUnit("mod_inv: value shares a factor with the modulus");
    return mod_reduce(e.u, m);
}

i64 mul_mod(i64 x, i64 y, i64 m) {
    if (m < 1) throw std::invalid_argument("mul_mod: modulus must be positive");
    u128 a = (u128)(u64)mod_reduce(x, m);
    u128 b = (u128)(u64)mod_reduce(y, m);
    return (i64)(u64)(a * b % (u128)(u64)m);
}

i64 pow_mod(i64 base, u64 exp, i64 m) {
    if (m < 1) throw std::invalid_argument("pow_mod: modulus must be positive");
    u64 mm = (u64)m;
    u64 b = (u64)mod_reduce(base, m);
    u64 r = 1 % mm;
    while (exp != 0) {
        if (exp & 1) r = (u64)((u128)r * b % mm);
        b = (u64)((u128)b * b % mm);
        exp >>= 1;
    }
    return (i64)r;
}

namespace {

// One Miller-Rabin round; n odd, n > 2, d odd with n - 1 = d * 2^s.
bool mr_witness_passes(i64 n, i64 a, i64 d, int s) {
    i64 x = pow_mod(a, (u64)d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    i64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set decides primality for every 64-bit integer.
    for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (!mr_witness_passes(n, a, d, s)) return false;
    return true;
}

namespace {

// Brent's cycle-finding variant of Pollard rho; n composite, odd, not a prime power
// hit by trial division. Returns a non-trivial factor.
i64 brent_rho(i64 n) {
    if (n % 2 == 0) return 2;
    u64 seed = 0x9e3779b97f4a7c15ull ^ (u64)n;
    auto next_rand = [&seed]() {
        seed ^= seed << 13;
        seed ^= seed >> 7;
        seed ^= seed << 17;
        return seed;
    };
    while (true) {
        i64 c = (i64)(next_rand() % (u64)(n - 1)) + 1;
        i64 y = (i64)(next_rand() % (u64)n);
        auto f = [n, c](i64 v) { return (i64)(((u128)(u64)v * (u64)v + (u64)c) % (u64)n); };
        i64 g = 1, q = 1, x = 0, ys = 0;
        const i64 m = 128;
        for (i64 r = 1; g == 1; r <<= 1) {
            x = y;
            for (i64 i = 0; i < r; ++i) y = f(y);
            for (i64 k = 0; k < r && g == 1; k += m) {
                ys = y;
                i64 lim = std::min(m, r - k);
                for (i64 i = 0; i < lim; ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
        }
        if (g == n) {
            // Backtrack one step at a time to recover the factor.
            g = 1;
            while (g == 1) {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (g != n) return g;
        // Degenerate cycle; retry with new parameters.
    }
}

void factor_into(i64 n, std::vector<i64>& primes) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    i64 d = brent_rho(n);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

}  // namespace

Factorization factorize(i64 n) {
    if (n < 1) throw std::invalid_argument("factorize: input must be positive");
    Factorization out;
    out.value = n;
    if (n == 1) return out;
    std::vector<i64> primes;
    for (i64 p = 2; p <= 1000000 && p * p <= n; p == 2 ? p = 3 : p += 2) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    if (n > 1) factor_into(n, primes);
    std::sort(primes.begin(), primes.end());
    for (size_t i = 0; i < primes.size();) {
        size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        out.factors.push_back({primes[i], (int)(j - i)});
        i = j;
    }
    return out;
}

std::vector<i64> sqrt_mod_prime(i64 a, i64 r) {
    if (r < 2 || !is_prime(r)) throw NotPrime("sqrt_mod_prime: modulus is not prime");
    if (r == 2) return {mod_reduce(a, 2)};
    a = mod_reduce(a, r);
    if (a == 0) return {0};
    if (pow_mod(a, (u64)((r - 1) / 2), r) != 1) return {};  // Euler: non-residue
    i64 x;
    if (r % 4 == 3) {
        x = pow_mod(a, (u64)((r + 1) / 4), r);
    } else {
        // Tonelli-Shanks for r = 1 (mod 4).
        i64 q = r - 1;
        int s = 0;
        while ((q & 1) == 0) {
            q >>= 1;
            ++s;
        }
        i64 z = 2;
        while (pow_mod(z, (u64)((r - 1) / 2), r) != r - 1) ++z;
        i64 m = s;
        i64 c = pow_mod(z, (u64)q, r);
        i64 t = pow_mod(a, (u64)q, r);
        x = pow_mod(a, (u64)((q + 1) / 2), r);
        while (t != 1) {
            i64 t2 = t;
            i64 i = 0;
            while (t2 != 1) {
                t2 = mul_mod(t2, t2, r);
                ++i;
            }
            i64 b = c;
            for (i64 j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, r);
            m = i;
            c = mul_mod(b, b, r);
            t = mul_mod(t, c, r);
            x = mul_mod(x, b, r);
        }
    }
    i64 other = r - x;
    if (x == other) return {x};
    return {std::min(x, other), std::max(x, other)};
}

namespace {

// All roots of f(x) = x^2 + c1 x + c0 modulo a prime power r^k, by Hensel lifting
// from the roots modulo r.
std::vector<i64> quad_roots_prime_power(i64 c1, i64 c0, i64 r, int k) {
    i64 rk = 1;
    for (int i = 0; i < k; ++i) rk *= r;
    auto f_mod = [&](i64 x, i64 m) {
        i128 v = (i128)x * x + (i128)c1 * x + c0;
        i64 w = (i64)(v % m);
        return w < 0 ? w + m : w;
    };

    // Roots modulo r.
    std::vector<i64> roots;
    if (r == 2) {
        for (i64 x : {0, 1})
            if (f_mod(x, 2) == 0) roots.push_back(x);
    } else {
        i64 disc = mod_reduce((i64)(((i128)c1 * c1 - (i128)4 * c0) % r), r);
        auto sq = sqrt_mod_prime(disc, r);
        i64 inv2 = mod_inv(2, r);
        for (i64 s : sq) roots.push_back(mul_mod(mod_reduce(-c1 + s, r), inv2, r));
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    }

    // Lift level by level: from roots mod r^j to roots mod r^(j+1).
    i64 rj = r;
    for (int j = 1; j < k; ++j) {
        i64 rj1 = rj * r;
        std::vector<i64> lifted;
        for (i64 x : roots) {
            i64 fprime = mod_reduce((i128)2 * x % r + c1, r);
            if (fprime != 0) {
                // Newton step: the unique lift.
                i64 fx = f_mod(x, rj1);
                i64 t = mul_mod((fx / rj) % r, mod_inv(fprime, r), r);
                i64 lift = x - t % r * rj;
                lifted.push_back(mod_reduce(lift, rj1));
            } else {
                // Singular: either every lift works or none does.
                if (f_mod(x, rj1) == 0)
                    for (i64 t = 0; t < r; ++t) lifted.push_back(x + t * rj);
            }
        }
        std::sort(lifted.begin(), lifted.end());
        lifted.erase(std::unique(lifted.begin(), lifted.end()), lifted.end());
        roots = std::move(lifted);
        rj = rj1;
    }
    return roots;
}

}  // namespace

std::vector<i64> solve_monic_quadratic_mod(i64 c1, i64 c0, i64 m) {
    if (m < 2) throw std::invalid_argument("solve_monic_quadratic_mod: modulus must be at least 2");
    c1 = mod_reduce(c1, m);
    c0 = mod_reduce(c0, m);
    Factorization fac = factorize(m);

    // Solve modulo each prime power, then combine with CRT.
    std::vector<i64> acc = {0};
    i64 acc_mod = 1;
    for (auto& e : fac.factors) {
        i64 pk = 1;
        for (int i = 0; i < e.exponent; ++i) pk *= e.prime;
        auto part = quad_roots_prime_power(c1 % pk, c0 % pk, e.prime, e.exponent);
        if (part.empty()) return {};
        std::vector<i64> next;
        next.reserve(acc.size() * part.size());
        i64 inv = mod_inv(acc_mod, pk);  // prime-power moduli are pairwise coprime
        for (i64 x : acc)
            for (i64 y : part) {
                // x (mod acc_mod), y (mod pk) -> x + acc_mod * ((y - x) / acc_mod mod pk)
                i64 t = mul_mod(mod_reduce(y - x, pk), inv, pk);
                next.push_back(x + acc_mod * t);
            }
        acc = std::move(next);
        acc_mod *= pk;
    }
    std::sort(acc.begin(), acc.end());
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    return acc;
}

}  // namespace lensknots
