#pragma once

#include "lensknots/lens.hpp"

namespace lensknots {

// Homology coordinates (A, B, a, b) of a curve on the genus-2 splitting surface,
// in the fixed basis used throughout the family definitions.
struct HomologyCoordinates {
    i64 A = 0;
    i64 B = 0;
    i64 a = 0;
    i64 b = 0;

    friend bool operator==(const HomologyCoordinates&, const HomologyCoordinates&) = default;
    friend auto operator<=>(const HomologyCoordinates&, const HomologyCoordinates&) = default;
};

// Outcome of integral surgery on the curve: the resulting lens space, the dual
// knot's homology class, and the raw (pre-canonicalization) residues that
// produced them.
struct SurgeryResult {
    LensSpace space;
    LambdaClass lambda;
    i64 p_raw = 0;
    i64 q_raw = 0;
    i64 lambda_raw = 0;
};

// Compute the lens space L(p, q) and dual-knot class resulting from surgery on
// a curve with the given coordinates:
//   p = |A*a + B*b|
//   lambda = -B/a (mod p) when a is a unit, else A/b (mod p)
//   q = -lambda^2 (mod p)
// p = 1 yields the S3 result {(1,0), (1,0), 1, 0, 0}.
// Throws NotLensSurgery when A*a + B*b = 0; NonPrimitive when neither a nor b
// (and hence no dual class) is a unit mod p; Overflow when |A*a + B*b| exceeds
// the 64-bit range.
SurgeryResult surgery_lens_space(const HomologyCoordinates& c);

// Check the defining congruences of the surgery map against a result:
//   a^2 * q = +-B^(+-2)  and  b^2 * q = +-A^(+-2)  (mod p),
// where the inverse branch is considered only when the base is a unit mod p.
bool verify_lemma3_congruences(const HomologyCoordinates& c, const SurgeryResult& r);

}  // namespace lensknots
