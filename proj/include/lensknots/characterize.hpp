#pragma once

#include <utility>
#include <vector>

#include "lensknots/families.hpp"
#include "lensknots/lens.hpp"

namespace lensknots {

/// Outcome of one of the two number-theoretic obtainability predicates.
struct PredicateResult {
    bool representable = false;
    std::vector<i64> q_set;  // canonical q values, sorted ascending, deduped

    friend bool operator==(const PredicateResult&, const PredicateResult&) = default;
};

/// Trefoil-fiber obtainability of some L(p, *): true iff p is odd, not
/// divisible by 9, and every prime factor other than 3 is congruent to
/// 1 mod 6. q_set holds the canonical forms of lambda^2 over all roots
/// lambda of x^2 + x + 1 (mod p); empty when not representable.
PredicateResult theorem4_predicate(i64 p);

/// Figure-eight-fiber obtainability: true iff p is odd, not divisible by 25,
/// and every prime factor other than 5 is congruent to +-1 mod 5. q_set as
/// above with x^2 + x - 1 (mod p).
PredicateResult theorem5_predicate(i64 p);

/// All coprime (m, n) with |m|, |n| <= ceil(3*sqrt(p)) solving
/// m^2 + m*n + n^2 = p (TrefoilFiber) or |n^2 - m*n - m^2| = p (Fig8Fiber),
/// deduplicated under (m, n) ~ (-m, -n) by keeping m > 0, sorted by (m, n).
/// This is the brute-force oracle behind the two predicates; it does NOT
/// apply the |m|, |n| >= 2 figure bound or the torus-class exclusion.
/// Throws InvalidDescriptor for non-fiber families.
std::vector<std::pair<i64, i64>> represent_form(FamilyId form, i64 p);

/// One way to obtain the query space: a family member together with the
/// canonical dual class of the resulting surgery.
struct Witness {
    FamilyId family = FamilyId::TorusI;
    KnotDescriptor descriptor;
    LambdaClass lambda;

    friend bool operator==(const Witness&, const Witness&) = default;
};

/// Everything classify() can say about one lens space.
struct ClassificationReport {
    LensSpace query;
    // Sorted by (family, lambda, params); one witness per (family, lambda)
    // class (the parameter-lexicographically smallest reconstruction).
    std::vector<Witness> witnesses;
    bool theorem4 = false;
    bool theorem5 = false;
};

/// Decide which families can produce the (canonical, p >= 2) query space:
/// torus/cable via divisor splits of p -+ 1, fibers via represent_form,
/// the four exceptional families by solving their order quadratics in J, and
/// families III..VI by the bounded reverse search over B in
/// (1, max{8, 2p/5}]. Every witness is re-verified through the surgery map.
/// Throws NonCanonical when the query is not in canonical form.
ClassificationReport classify(const LensSpace& space);

}  // namespace lensknots
