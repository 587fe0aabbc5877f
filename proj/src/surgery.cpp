#include "lensknots/surgery.hpp"

#include <cstdint>
#include <numeric>

namespace lensknots {

namespace {

using i128 = __int128;

}  // namespace

SurgeryResult surgery_lens_space(const HomologyCoordinates& c) {
    i128 p_wide = (i128)c.A * c.a + (i128)c.B * c.b;
    if (p_wide < 0) p_wide = -p_wide;
    if (p_wide > INT64_MAX) throw Overflow("surgery: |A*a + B*b| exceeds 64 bits");
    i64 p = (i64)p_wide;
    if (p == 0) throw NotLensSurgery("surgery: A*a + B*b = 0");
    if (p == 1) return {LensSpace{1, 0}, LambdaClass{1, 0}, 1, 0, 0};

    i64 lambda_raw;
    if (std::gcd(mod_reduce(c.a, p), p) == 1) {
        lambda_raw = mul_mod(-c.B, mod_inv(c.a, p), p);
    } else if (std::gcd(mod_reduce(c.b, p), p) == 1) {
        lambda_raw = mul_mod(c.A, mod_inv(c.b, p), p);
    } else {
        throw NonPrimitive("surgery: neither a nor b is a unit mod p");
    }
    if (std::gcd(lambda_raw, p) != 1)
        throw NonPrimitive("surgery: dual class is not a unit mod p");

    i64 q_raw = mod_reduce(-mul_mod(lambda_raw, lambda_raw, p), p);
    return {normalize(p, q_raw), canonical_lambda(p, lambda_raw), p, q_raw, lambda_raw};
}

namespace {

// True when t equals +-base^2 or +-base^-2 mod p, the inverse branch being
// considered only when base is a unit mod p.
bool matches_square_up_to_sign_and_inverse(i64 t, i64 base, i64 p) {
    i64 sq = mul_mod(base, base, p);
    if (t == sq || t == mod_reduce(-sq, p)) return true;
    if (std::gcd(mod_reduce(base, p), p) != 1) return false;
    i64 inv_sq = mod_inv(sq, p);
    return t == inv_sq || t == mod_reduce(-inv_sq, p);
}

}  // namespace

bool verify_lemma3_congruences(const HomologyCoordinates& c, const SurgeryResult& r) {
    i64 p = r.p_raw;
    if (p < 2) return false;
    i64 aq = mul_mod(mul_mod(c.a, c.a, p), r.q_raw, p);
    i64 bq = mul_mod(mul_mod(c.b, c.b, p), r.q_raw, p);
    return matches_square_up_to_sign_and_inverse(aq, c.B, p) &&
           matches_square_up_to_sign_and_inverse(bq, c.A, p);
}

}  // namespace lensknots
