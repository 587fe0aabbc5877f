#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lensknots/surgery.hpp"

namespace lensknots {

// The twelve knot families. The first six are word-presented families on the
// genus-2 surface, the two fiber families live on a once-punctured torus fiber,
// and the last four are the one-parameter exceptional families.
enum class FamilyId {
    TorusI,
    CableII,
    TypeIII,
    TypeIV,
    TypeV,
    TypeVI,
    TrefoilFiber,
    Fig8Fiber,
    SporadicA,
    SporadicB,
    SporadicC,
    SporadicD,
};

inline constexpr std::array<FamilyId, 12> kAllFamilies = {
    FamilyId::TorusI,   FamilyId::CableII,      FamilyId::TypeIII,   FamilyId::TypeIV,
    FamilyId::TypeV,    FamilyId::TypeVI,       FamilyId::TrefoilFiber,
    FamilyId::Fig8Fiber, FamilyId::SporadicA,   FamilyId::SporadicB,
    FamilyId::SporadicC, FamilyId::SporadicD,
};

// Kebab-case name used by the CLI: torus, cable, type-iii ... type-vi,
// trefoil, fig8, sporadic-a ... sporadic-d.
std::string_view family_name(FamilyId f);
std::optional<FamilyId> family_from_name(std::string_view name);

// A specific knot in a family. Parameter order by family:
//   TorusI, CableII:            {n, s, a}       n >= 2, gcd(n,s) = 1, a = +-1
//   TypeIII:                    {J, n, eps, a, K}  J >= 1, n >= 1, eps = +-1
//                                               (eps = 1 when n = 1), a = +-1
//   TypeIV:                     {J, n, eps, a, K}  J >= 2, n >= 2 (eps = 1 when n = 2)
//   TypeV:                      {J, n, eps, a, K}  J >= 0, n >= 2 (eps = 1 when n = 2)
//   TypeVI:                     {J, a, K}       J >= 1
//   TrefoilFiber, Fig8Fiber:    {m, n}          gcd(m,n) = 1, |m| >= 2, |n| >= 2
//   SporadicA..SporadicD:       {J}             J >= 0
struct KnotDescriptor {
    FamilyId family = FamilyId::TorusI;
    std::vector<i64> params;

    friend bool operator==(const KnotDescriptor&, const KnotDescriptor&) = default;
    friend auto operator<=>(const KnotDescriptor&, const KnotDescriptor&) = default;
};

// Names of the parameters in storage order, e.g. {"J","n","eps","a","K"}.
std::vector<std::string_view> param_names(FamilyId f);

// "J=1,n=1,eps=1,a=1,K=0" style rendering of the parameter tuple.
std::string params_to_string(const KnotDescriptor& d);

// Throws InvalidDescriptor when the tuple violates the family's parameter
// bounds (wrong arity, out-of-range value, or failed coprimality).
void validate_descriptor(const KnotDescriptor& d);

// Exponent data of the four exceptional word templates
// A^head B^rep (A^mid_a B^mid_b A^mid_a B^rep)^J. Each exponent is paired with
// a dual value; the pairs satisfy head*mid_a_dual - mid_a*head_dual = 1 and
// mid_b*rep_dual - rep*mid_b_dual = 1.
struct SporadicTuple {
    i64 a_head, a_head_dual;
    i64 a_rep, a_rep_dual;
    i64 b_mid, b_mid_dual;
    i64 b_rep, b_rep_dual;
};

// The tuple for one of SporadicA..SporadicD; throws InvalidDescriptor for
// other families.
SporadicTuple sporadic_tuple(FamilyId f);

// Homology coordinates of the knot determined by a descriptor.
HomologyCoordinates coords_of(const KnotDescriptor& d);

// A word over {A, B} with positive exponents, as a sequence of syllables.
struct Syllable {
    char letter = 'A';  // 'A' or 'B'
    i64 exponent = 1;

    friend bool operator==(const Syllable&, const Syllable&) = default;
};
using Word = std::vector<Syllable>;

// The defining free-group word of a non-fiber descriptor; throws NoWordForm
// for the fiber families (they are presented on a fiber surface, not by a word).
Word word_of(const KnotDescriptor& d);

// Exponent sums per letter: (total of A, total of B).
std::pair<i64, i64> abelianization(const Word& w);

// True when the coordinates satisfy family f's coordinate-level constraint
// system (the broader textual form used by the reverse search, not the
// narrower enumeration parameter ranges).
bool check_constraints(const HomologyCoordinates& c, FamilyId f);

// True when the (m, n) curve class on the fiber surface is carried to a
// coordinate pair with an entry of magnitude <= 1 by the fiber's automorphism
// (trefoil: order-six rotation; figure eight: the Anosov map and its inverse).
// Such classes are torus knots, so the fiber families exclude them; they are
// already covered by the torus family.
bool fiber_class_is_torus(FamilyId fiber_family, i64 m, i64 n);

// One enumerated knot with its surgery outcome.
struct FamilyEmission {
    KnotDescriptor descriptor;
    SurgeryResult result;
};

// All knots of family f whose surgery gives 2 <= p <= p_max, one emission per
// (space, lambda) class among sign-symmetric parameter choices, sorted by
// (p, q, lambda, params). Deterministic.
std::vector<FamilyEmission> enumerate_family(FamilyId f, i64 p_max);

}  // namespace lensknots
