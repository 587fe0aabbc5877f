#include <doctest.h>

#include <numeric>

#include "lensknots/surgery.hpp"

using namespace lensknots;

TEST_CASE("surgery_lens_space examples") {
    auto r = surgery_lens_space({5, 3, 7, -1});
    CHECK(r.space == LensSpace{32, 7});
    CHECK(r.lambda == LambdaClass{32, 5});
    CHECK(r.p_raw == 32);
    CHECK(r.lambda_raw == 27);  // -3 * inv(7,32)
    CHECK(r.q_raw == 7);        // -27^2 mod 32

    r = surgery_lens_space({2, 3, -5, -3});
    CHECK(r.space == LensSpace{19, 7});
    CHECK(r.lambda == LambdaClass{19, 7});

    r = surgery_lens_space({2, 5, 1, -4});
    CHECK(r.space == LensSpace{18, 5});
    CHECK(r.lambda == LambdaClass{18, 5});

    CHECK_THROWS_AS(surgery_lens_space({1, 1, 1, -1}), NotLensSurgery);
}

TEST_CASE("surgery p = 1 gives the three-sphere") {
    // Figure-eight fiber coordinates (m, n, -(m+n), n) at (2, 3): p = |‑10+9| = 1.
    auto r = surgery_lens_space({2, 3, -5, 3});
    CHECK(r.space == LensSpace{1, 0});
    CHECK(r.lambda == LambdaClass{1, 0});
    CHECK(r.p_raw == 1);
    CHECK(r.q_raw == 0);
    CHECK(r.lambda_raw == 0);
}

TEST_CASE("surgery error cases") {
    // p = 8 with a = b = 2: neither coefficient is a unit mod p.
    CHECK_THROWS_AS(surgery_lens_space({2, 2, 2, 2}), NonPrimitive);
    // a is a unit but the resulting dual class shares a factor with p
    // (gcd(A,B) = 2 here, which family enumerators never emit).
    CHECK_THROWS_AS(surgery_lens_space({6, 2, 1, 2}), NonPrimitive);
    // |A*a + B*b| above the 64-bit range.
    const i64 big = 4000000000;
    CHECK_THROWS_AS(surgery_lens_space({big, big, big, big}), Overflow);
}

TEST_CASE("verify_lemma3_congruences examples") {
    HomologyCoordinates c{5, 3, 7, -1};
    auto r = surgery_lens_space(c);
    CHECK(verify_lemma3_congruences(c, r));

    c = {2, 3, -5, -3};
    r = surgery_lens_space(c);
    CHECK(verify_lemma3_congruences(c, r));

    c = {1, 3, -1, 2};
    r = surgery_lens_space(c);
    CHECK(r.space == LensSpace{5, 1});
    CHECK(verify_lemma3_congruences(c, r));

    // A tampered q must be rejected.
    c = {5, 3, 7, -1};
    r = surgery_lens_space(c);
    r.q_raw = 3;
    CHECK_FALSE(verify_lemma3_congruences(c, r));
}

TEST_CASE("negating all coordinates preserves the result") {
    for (HomologyCoordinates c : {HomologyCoordinates{5, 3, 7, -1},
                                  HomologyCoordinates{2, 3, -5, -3},
                                  HomologyCoordinates{2, 5, 1, -4},
                                  HomologyCoordinates{1, 3, -1, 2}}) {
        auto r = surgery_lens_space(c);
        auto rn = surgery_lens_space({-c.A, -c.B, -c.a, -c.b});
        CHECK(r.space == rn.space);
        CHECK(r.lambda == rn.lambda);
    }
}

TEST_CASE("small-coordinate sweep satisfies every post-condition") {
    for (i64 A = -6; A <= 6; ++A)
        for (i64 B = -6; B <= 6; ++B)
            for (i64 a = -6; a <= 6; ++a)
                for (i64 b = -6; b <= 6; ++b) {
                    i64 p = A * a + B * b;
                    if (p < 0) p = -p;
                    HomologyCoordinates c{A, B, a, b};
                    if (p == 0) {
                        CHECK_THROWS_AS(surgery_lens_space(c), NotLensSurgery);
                        continue;
                    }
                    SurgeryResult r;
                    try {
                        r = surgery_lens_space(c);
                    } catch (const NonPrimitive&) {
                        // Legal only when no unit branch produces a unit dual class.
                        bool a_unit = std::gcd(a, p) == 1;
                        bool b_unit = std::gcd(b, p) == 1;
                        if (a_unit)
                            CHECK(std::gcd(mod_reduce(-B * mod_inv(a, p), p), p) != 1);
                        else if (b_unit)
                            CHECK(std::gcd(mod_reduce(A * mod_inv(b, p), p), p) != 1);
                        else
                            CHECK(true);
                        continue;
                    }
                    CHECK(r.p_raw == p);
                    if (p == 1) {
                        CHECK(r.space == LensSpace{1, 0});
                        continue;
                    }
                    CHECK(std::gcd(r.lambda_raw, p) == 1);
                    CHECK(std::gcd(r.q_raw, p) == 1);
                    CHECK(r.q_raw == mod_reduce(-r.lambda_raw * r.lambda_raw, p));
                    CHECK(r.space == normalize(p, r.q_raw));
                    CHECK(r.lambda == canonical_lambda(p, r.lambda_raw));
                    CHECK(verify_lemma3_congruences(c, r));
                    // When both branches apply they agree up to orbit.
                    if (std::gcd(a, p) == 1 && std::gcd(b, p) == 1) {
                        i64 alt = mod_reduce(A * mod_inv(b, p), p);
                        CHECK(canonical_lambda(p, alt) == r.lambda);
                    }
                }
}
