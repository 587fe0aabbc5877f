#pragma once

#include <set>
#include <string>

#include "lensknots/errors.hpp"
#include "lensknots/modmath.hpp"

namespace lensknots {

// A lens space in canonical form. p is the order of the first homology group;
// q is the canonical representative of its class under q ~ +-q^(+-1) mod p.
// The three-sphere is encoded as (1, 0).
struct LensSpace {
    i64 p = 1;
    i64 q = 0;

    friend bool operator==(const LensSpace&, const LensSpace&) = default;
    friend auto operator<=>(const LensSpace&, const LensSpace&) = default;
};

// The homology class of a dual knot, canonical under the same 4-element orbit
// value ~ +-value^(+-1) mod p. For p = 1 the value is 0.
struct LambdaClass {
    i64 p = 1;
    i64 value = 0;

    friend bool operator==(const LambdaClass&, const LambdaClass&) = default;
    friend auto operator<=>(const LambdaClass&, const LambdaClass&) = default;
};

// The orbit {x, p-x, x^-1, p-x^-1} mod p of a unit residue, as a sorted set
// (size 1, 2, or 4). Requires p >= 2; throws NonUnit when gcd(x, p) != 1.
std::set<i64> orbit(i64 p, i64 x);

// Reduce (p, q_raw) to canonical form: (1, 0) when p = 1, otherwise the
// orbit minimum in [1, p-1]. Throws NonUnit when p >= 2 and gcd(q_raw, p) != 1.
LensSpace normalize(i64 p, i64 q_raw);

// Equality of canonical forms.
bool same_space(const LensSpace& x, const LensSpace& y);

// Canonicalize a raw dual-knot homology value; same orbit convention as
// normalize, with p = 1 mapping to value 0.
LambdaClass canonical_lambda(i64 p, i64 lambda_raw);

// "L(p,q)", or "S3" for (1, 0).
std::string render(const LensSpace& s);

}  // namespace lensknots
