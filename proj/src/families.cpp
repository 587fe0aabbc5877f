/// @file families.cpp
/// @brief The twelve knot families: descriptors, words, coordinates,
///        constraint checks, and bounded enumeration.

#include "lensknots/families.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "lensknots/modmath.hpp"

namespace lensknots {

namespace {

using i128 = __int128;

constexpr std::array<std::pair<FamilyId, std::string_view>, 12> kNames = {{
    {FamilyId::TorusI, "torus"},
    {FamilyId::CableII, "cable"},
    {FamilyId::TypeIII, "type-iii"},
    {FamilyId::TypeIV, "type-iv"},
    {FamilyId::TypeV, "type-v"},
    {FamilyId::TypeVI, "type-vi"},
    {FamilyId::TrefoilFiber, "trefoil"},
    {FamilyId::Fig8Fiber, "fig8"},
    {FamilyId::SporadicA, "sporadic-a"},
    {FamilyId::SporadicB, "sporadic-b"},
    {FamilyId::SporadicC, "sporadic-c"},
    {FamilyId::SporadicD, "sporadic-d"},
}};

i64 narrow(i128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw Overflow(std::string(what) + ": value exceeds 64 bits");
    return static_cast<i64>(v);
}

bool is_sign(i64 x) { return x == 1 || x == -1; }

[[noreturn]] void bad(const KnotDescriptor& d, const std::string& why) {
    throw InvalidDescriptor(std::string(family_name(d.family)) + ": " + why);
}

void require_arity(const KnotDescriptor& d, size_t n) {
    if (d.params.size() != n)
        bad(d, "expected " + std::to_string(n) + " parameters, got " +
                   std::to_string(d.params.size()));
}

// x == y (mod m) for m >= 1, overflow-safe.
bool congruent(i128 x, i128 y, i64 m) {
    i128 r = (x - y) % m;
    return r == 0;
}

i64 floor_div(i128 a, i128 b) {  // b > 0
    i128 q = a / b;
    if (a % b != 0 && a < 0) --q;
    return narrow(q, "floor_div");
}

i64 ceil_div(i128 a, i128 b) {  // b > 0
    i128 q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return narrow(q, "ceil_div");
}

// Coordinates of the four exceptional families as functions of J.
std::array<i128, 4> sporadic_coords(FamilyId f, i128 J) {
    switch (f) {
        case FamilyId::SporadicA: return {4 * J + 1, 2 * J + 1, 6 * J + 1, -J};
        case FamilyId::SporadicB: return {6 * J + 2, 2 * J + 1, 4 * J + 1, -J};
        case FamilyId::SporadicC: return {6 * J + 4, 2 * J + 1, -4 * J - 3, J + 1};
        case FamilyId::SporadicD: return {4 * J + 3, 2 * J + 1, -6 * J - 5, J + 1};
        default: throw InvalidDescriptor("not an exceptional family");
    }
}

bool is_sporadic(FamilyId f) {
    return f == FamilyId::SporadicA || f == FamilyId::SporadicB ||
           f == FamilyId::SporadicC || f == FamilyId::SporadicD;
}

bool is_fiber(FamilyId f) {
    return f == FamilyId::TrefoilFiber || f == FamilyId::Fig8Fiber;
}

}  // namespace

std::string_view family_name(FamilyId f) {
    for (auto [id, name] : kNames)
        if (id == f) return name;
    throw std::invalid_argument("unknown family id");
}

std::optional<FamilyId> family_from_name(std::string_view name) {
    for (auto [id, n] : kNames)
        if (n == name) return id;
    return std::nullopt;
}

std::vector<std::string_view> param_names(FamilyId f) {
    switch (f) {
        case FamilyId::TorusI:
        case FamilyId::CableII: return {"n", "s", "a"};
        case FamilyId::TypeIII:
        case FamilyId::TypeIV:
        case FamilyId::TypeV: return {"J", "n", "eps", "a", "K"};
        case FamilyId::TypeVI: return {"J", "a", "K"};
        case FamilyId::TrefoilFiber:
        case FamilyId::Fig8Fiber: return {"m", "n"};
        default: return {"J"};
    }
}

std::string params_to_string(const KnotDescriptor& d) {
    auto names = param_names(d.family);
    if (names.size() != d.params.size())
        bad(d, "parameter arity mismatch");
    std::string out;
    for (size_t i = 0; i < names.size(); ++i) {
        if (i) out += ',';
        out += names[i];
        out += '=';
        out += std::to_string(d.params[i]);
    }
    return out;
}

void validate_descriptor(const KnotDescriptor& d) {
    const auto& v = d.params;
    switch (d.family) {
        case FamilyId::TorusI:
        case FamilyId::CableII: {
            require_arity(d, 3);
            if (v[0] < 2) bad(d, "n must be >= 2");
            if (v[1] == 0 || std::gcd(v[0], v[1]) != 1)
                bad(d, "s must be nonzero and coprime to n");
            if (!is_sign(v[2])) bad(d, "a must be +-1");
            return;
        }
        case FamilyId::TypeIII:
        case FamilyId::TypeIV:
        case FamilyId::TypeV: {
            require_arity(d, 5);
            i64 j_min = d.family == FamilyId::TypeIII   ? 1
                        : d.family == FamilyId::TypeIV ? 2
                                                       : 0;
            i64 n_min = d.family == FamilyId::TypeIII ? 1 : 2;
            if (v[0] < j_min) bad(d, "J must be >= " + std::to_string(j_min));
            if (v[1] < n_min) bad(d, "n must be >= " + std::to_string(n_min));
            if (!is_sign(v[2])) bad(d, "eps must be +-1");
            if (v[1] == n_min && v[2] != 1)
                bad(d, "eps must be 1 at the smallest n");
            if (!is_sign(v[3])) bad(d, "a must be +-1");
            return;
        }
        case FamilyId::TypeVI: {
            require_arity(d, 3);
            if (v[0] < 1) bad(d, "J must be >= 1");
            if (!is_sign(v[1])) bad(d, "a must be +-1");
            return;
        }
        case FamilyId::TrefoilFiber:
        case FamilyId::Fig8Fiber: {
            require_arity(d, 2);
            if (std::abs(v[0]) < 2 || std::abs(v[1]) < 2)
                bad(d, "|m| and |n| must be >= 2");
            if (std::gcd(v[0], v[1]) != 1) bad(d, "m and n must be coprime");
            return;
        }
        default: {
            require_arity(d, 1);
            if (v[0] < 0) bad(d, "J must be >= 0");
            return;
        }
    }
}

SporadicTuple sporadic_tuple(FamilyId f) {
    switch (f) {
        case FamilyId::SporadicA: return {1, 1, 2, 3, 1, -1, 1, 0};
        case FamilyId::SporadicB: return {2, 1, 3, 2, 1, -1, 1, 0};
        case FamilyId::SporadicC: return {4, -3, 3, -2, 1, 0, 1, 1};
        case FamilyId::SporadicD: return {3, -5, 2, -3, 1, 0, 1, 1};
        default: throw InvalidDescriptor("not an exceptional family");
    }
}

HomologyCoordinates coords_of(const KnotDescriptor& d) {
    validate_descriptor(d);
    const auto& v = d.params;
    switch (d.family) {
        case FamilyId::TorusI: return {1, v[0], v[2], v[1]};
        case FamilyId::CableII: return {1, 2 * v[0], v[2], 2 * v[1]};
        case FamilyId::TypeIII: {
            const i64 J = v[0], n = v[1], eps = v[2], a = v[3], K = v[4];
            const i128 A = (i128)J + 1;
            const i128 B = (2 * (i128)n + eps) * A - eps;
            const i128 b = -(i128)a * 2 * eps * A - (i128)a * B * K;
            return {narrow(A, "A"), narrow(B, "B"), a, narrow(b, "b")};
        }
        case FamilyId::TypeIV: {
            const i64 J = v[0], n = v[1], eps = v[2], a = v[3], K = v[4];
            const i128 A = 2 * (i128)J + 1;
            const i128 B = (i128)n * A + (i128)J * eps;
            const i128 b = -(i128)a * eps * A - (i128)a * B * K;
            return {narrow(A, "A"), narrow(B, "B"), a, narrow(b, "b")};
        }
        case FamilyId::TypeV: {
            const i64 J = v[0], n = v[1], eps = v[2], a = v[3], K = v[4];
            const i128 A = 2 * (i128)J + 3;
            const i128 B = (i128)n * A + eps;
            const i128 b = -(i128)a * eps * A - (i128)a * B * K;
            return {narrow(A, "A"), narrow(B, "B"), a, narrow(b, "b")};
        }
        case FamilyId::TypeVI: {
            const i64 J = v[0], a = v[1], K = v[2];
            const i128 A = 2 * (i128)J + 2;
            const i128 B = 2 * A + 1;
            const i128 b = (i128)a * (A - 1) + (i128)a * B * K;
            return {narrow(A, "A"), narrow(B, "B"), a, narrow(b, "b")};
        }
        case FamilyId::TrefoilFiber: {
            const i128 m = v[0], n = v[1];
            return {v[0], v[1], narrow(-(m + n), "a"), narrow(-n, "b")};
        }
        case FamilyId::Fig8Fiber: {
            const i128 m = v[0], n = v[1];
            return {v[0], v[1], narrow(-(m + n), "a"), v[1]};
        }
        default: {
            auto c = sporadic_coords(d.family, v[0]);
            return {narrow(c[0], "A"), narrow(c[1], "B"), narrow(c[2], "a"),
                    narrow(c[3], "b")};
        }
    }
}

Word word_of(const KnotDescriptor& d) {
    validate_descriptor(d);
    if (is_fiber(d.family))
        throw NoWordForm(std::string(family_name(d.family)) +
                         ": fiber classes have no canonical word form");
    const auto& v = d.params;
    Word w;
    auto syl = [&w](char letter, i64 e) { w.push_back({letter, e}); };
    switch (d.family) {
        case FamilyId::TorusI:  // A B^n
            syl('A', 1);
            syl('B', v[0]);
            break;
        case FamilyId::CableII:  // B^n A B^n
            syl('B', v[0]);
            syl('A', 1);
            syl('B', v[0]);
            break;
        case FamilyId::TypeIII: {  // B^n (A B^{2n+eps})^J A B^n
            const i64 J = v[0], n = v[1], eps = v[2];
            syl('B', n);
            for (i64 i = 0; i < J; ++i) {
                syl('A', 1);
                syl('B', 2 * n + eps);
            }
            syl('A', 1);
            syl('B', n);
            break;
        }
        case FamilyId::TypeIV: {  // A B^n (A B^{n+eps} A B^n)^J
            const i64 J = v[0], n = v[1], eps = v[2];
            syl('A', 1);
            syl('B', n);
            for (i64 i = 0; i < J; ++i) {
                syl('A', 1);
                syl('B', n + eps);
                syl('A', 1);
                syl('B', n);
            }
            break;
        }
        case FamilyId::TypeV: {  // (A B^n)^{J+1} A B^{n+eps} (A B^n)^{J+1}
            const i64 J = v[0], n = v[1], eps = v[2];
            for (i64 i = 0; i <= J; ++i) {
                syl('A', 1);
                syl('B', n);
            }
            syl('A', 1);
            syl('B', n + eps);
            for (i64 i = 0; i <= J; ++i) {
                syl('A', 1);
                syl('B', n);
            }
            break;
        }
        case FamilyId::TypeVI: {  // B (A B^2)^J A B^3 (A B^2)^J A B
            const i64 J = v[0];
            syl('B', 1);
            for (i64 i = 0; i < J; ++i) {
                syl('A', 1);
                syl('B', 2);
            }
            syl('A', 1);
            syl('B', 3);
            for (i64 i = 0; i < J; ++i) {
                syl('A', 1);
                syl('B', 2);
            }
            syl('A', 1);
            syl('B', 1);
            break;
        }
        default: {  // A^head B^rep (A^mid_a B^mid_b A^mid_a B^rep)^J
            const SporadicTuple t = sporadic_tuple(d.family);
            const i64 J = v[0];
            syl('A', t.a_head);
            syl('B', t.b_rep);
            for (i64 i = 0; i < J; ++i) {
                syl('A', t.a_rep);
                syl('B', t.b_mid);
                syl('A', t.a_rep);
                syl('B', t.b_rep);
            }
            break;
        }
    }
    return w;
}

std::pair<i64, i64> abelianization(const Word& w) {
    i128 a = 0, b = 0;
    for (const auto& s : w) {
        if (s.letter == 'A')
            a += s.exponent;
        else if (s.letter == 'B')
            b += s.exponent;
        else
            throw std::invalid_argument("word letters must be 'A' or 'B'");
    }
    return {narrow(a, "abelianization A"), narrow(b, "abelianization B")};
}

bool check_constraints(const HomologyCoordinates& c, FamilyId f) {
    const i64 A = c.A, B = c.B, a = c.a, b = c.b;
    switch (f) {
        case FamilyId::TorusI:
            return A == 1 && B >= 2 && is_sign(a) && std::gcd(B, b) == 1;
        case FamilyId::CableII:
            return A == 1 && B >= 4 && B % 2 == 0 && is_sign(a) &&
                   std::gcd(B, b) == 2;
        case FamilyId::TypeIII: {
            if (A < 2 || B < 1 || !is_sign(a)) return false;
            for (i64 eps : {1, -1}) {
                i128 t = (i128)B + eps;
                if (t < 0 || t % A != 0 || (t / A) % 2 == 0) continue;
                if (congruent(b, -2 * (i128)eps * A * a, B)) return true;
            }
            return false;
        }
        case FamilyId::TypeIV: {
            if (A <= 3 || B < 1 || !is_sign(a)) return false;
            for (i64 eps : {1, -1}) {
                i128 t = 2 * (i128)B + eps;
                if (t % A != 0) continue;
                if (congruent(b, -(i128)eps * A * a, B)) return true;
            }
            return false;
        }
        case FamilyId::TypeV: {
            if (A < 2 || A % 2 == 0 || B < 1 || !is_sign(a)) return false;
            for (i64 eps : {1, -1}) {
                i128 t = (i128)B - eps;
                if (t < 0 || t % A != 0) continue;
                if (congruent(b, -(i128)eps * A * a, B)) return true;
            }
            return false;
        }
        case FamilyId::TypeVI:
            return A > 2 && A % 2 == 0 && (i128)B == 2 * (i128)A + 1 &&
                   is_sign(a) && congruent(b, (i128)a * (A - 1), B);
        case FamilyId::TrefoilFiber:
        case FamilyId::Fig8Fiber: {
            if (std::abs(A) < 2 || std::abs(B) < 2 || std::gcd(A, B) != 1)
                return false;
            if ((i128)a != -((i128)A + B)) return false;
            return f == FamilyId::TrefoilFiber ? b == -B : b == B;
        }
        default: {
            if (B < 1 || B % 2 == 0) return false;
            auto want = sporadic_coords(f, ((i128)B - 1) / 2);
            return want[0] == A && want[1] == B && want[2] == a && want[3] == b;
        }
    }
}

bool fiber_class_is_torus(FamilyId fiber_family, i64 m, i64 n) {
    auto unit = [](i128 x, i128 y) {
        return (x <= 1 && x >= -1) || (y <= 1 && y >= -1);
    };
    if (fiber_family == FamilyId::TrefoilFiber) {
        // Orbit of the order-six monodromy, modulo sign: coordinates run over
        // the multiset {m, n, m+n}.
        i128 s = (i128)m + n;
        return unit(m, n) || (s >= -1 && s <= 1);
    }
    if (fiber_family != FamilyId::Fig8Fiber)
        throw InvalidDescriptor("not a fiber family");
    // Walk the Anosov map U(m,n) = (n, m+n) / its inverse (n-m, m) downhill in
    // max-norm; the norm is unimodal along the orbit, so a unit pair, if the
    // orbit has one, sits within two steps of the local minimum.
    auto nrm = [](i128 x, i128 y) {
        i128 ax = x < 0 ? -x : x, ay = y < 0 ? -y : y;
        return ax > ay ? ax : ay;
    };
    i128 cm = m, cn = n;
    for (int step = 0; step < 512; ++step) {
        if (unit(cm, cn)) return true;
        i128 fm = cn, fn = cm + cn;   // U
        i128 bm = cn - cm, bn = cm;   // U^-1
        if (nrm(fm, fn) < nrm(cm, cn)) {
            cm = fm, cn = fn;
            continue;
        }
        if (nrm(bm, bn) < nrm(cm, cn)) {
            cm = bm, cn = bn;
            continue;
        }
        return unit(fm, fn) || unit(bm, bn) || unit(fn, fm + fn) ||
               unit(bn - bm, bm);
    }
    return false;
}

namespace {

// Shared emission path: build the descriptor, run the surgery map, keep
// results with 2 <= p <= p_max.
void emit(FamilyId f, std::vector<i64> params, i64 p_max,
          std::vector<FamilyEmission>& out) {
    KnotDescriptor d{f, std::move(params)};
    SurgeryResult r = surgery_lens_space(coords_of(d));
    if (r.p_raw < 2 || r.p_raw > p_max) return;
    out.push_back({std::move(d), r});
}

// Families III..VI: for fixed non-K parameters the order is |c + sgn*K*B^2|,
// so the K values reaching p <= p_max form one contiguous interval.
void emit_k_interval(FamilyId f, const std::vector<i64>& base, i64 B, i128 c,
                     int sgn, i64 p_max, std::vector<FamilyEmission>& out) {
    const i128 B2 = (i128)B * B;
    const i128 lo_num = sgn > 0 ? -(i128)p_max - c : c - p_max;
    const i128 hi_num = sgn > 0 ? (i128)p_max - c : c + p_max;
    const i64 k_lo = ceil_div(lo_num, B2), k_hi = floor_div(hi_num, B2);
    for (i64 K = k_lo; K <= k_hi; ++K) {
        i128 pw = c + (i128)sgn * K * B2;
        if (pw < 0) pw = -pw;
        if (pw < 2 || pw > p_max) continue;
        if (pw < B)
            throw std::logic_error(
                "family enumeration: order fell below B, bound proof violated");
        auto params = base;
        params.push_back(K);
        emit(f, std::move(params), p_max, out);
    }
}

void enumerate_torus_like(FamilyId f, i64 p_max,
                          std::vector<FamilyEmission>& out) {
    // TorusI: p = |1 + n*s|; CableII: p = |1 + 4*n*s| (B = 2n, b = 2s).
    const i64 mult = f == FamilyId::TorusI ? 1 : 4;
    for (i64 n = 2; mult * n - 1 <= p_max; ++n) {
        const i64 span = mult * n;
        const i64 s_lo = ceil_div(-(i128)p_max - 1, span);
        const i64 s_hi = floor_div((i128)p_max - 1, span);
        for (i64 s = s_lo; s <= s_hi; ++s) {
            if (s == 0 || std::gcd(n, s) != 1) continue;
            emit(f, {n, s, 1}, p_max, out);
        }
    }
}

void enumerate_type_iii(i64 p_max, std::vector<FamilyEmission>& out) {
    for (i64 A = 2; 3 * A - 1 <= p_max; ++A) {
        for (i64 eps : {1, -1}) {
            for (i64 n = (eps == 1 ? 1 : 2);; ++n) {
                const i128 B = (2 * (i128)n + eps) * A - eps;
                if (B > p_max) break;
                const i128 c = A * (1 - 2 * (i128)eps * B);
                emit_k_interval(FamilyId::TypeIII, {A - 1, n, eps, 1},
                                narrow(B, "B"), c, -1, p_max, out);
            }
        }
    }
}

void enumerate_type_iv(i64 p_max, std::vector<FamilyEmission>& out) {
    for (i64 A = 5; (5 * A - 1) / 2 <= p_max; A += 2) {
        const i64 J = (A - 1) / 2;
        for (i64 eps : {1, -1}) {
            for (i64 n = (eps == 1 ? 2 : 3);; ++n) {
                const i128 B = (i128)n * A + (i128)J * eps;
                if (B > p_max) break;
                const i128 c = A * (1 - (i128)eps * B);
                emit_k_interval(FamilyId::TypeIV, {J, n, eps, 1},
                                narrow(B, "B"), c, -1, p_max, out);
            }
        }
    }
}

void enumerate_type_v(i64 p_max, std::vector<FamilyEmission>& out) {
    for (i64 A = 3; 2 * A + 1 <= p_max; A += 2) {
        const i64 J = (A - 3) / 2;
        for (i64 eps : {1, -1}) {
            for (i64 n = (eps == 1 ? 2 : 3);; ++n) {
                const i128 B = (i128)n * A + eps;
                if (B > p_max) break;
                const i128 c = A * (1 - (i128)eps * B);
                emit_k_interval(FamilyId::TypeV, {J, n, eps, 1},
                                narrow(B, "B"), c, -1, p_max, out);
            }
        }
    }
}

void enumerate_type_vi(i64 p_max, std::vector<FamilyEmission>& out) {
    for (i64 A = 4; 2 * (i128)A * A - 1 <= p_max; A += 2) {
        const i64 J = (A - 2) / 2;
        const i64 B = 2 * A + 1;
        const i128 c = 2 * (i128)A * A - 1;
        emit_k_interval(FamilyId::TypeVI, {J, 1}, B, c, +1, p_max, out);
    }
}

void enumerate_fiber(FamilyId f, i64 p_max, std::vector<FamilyEmission>& out) {
    // Every class with order <= p_max has a representative within this window
    // (trefoil: the form is positive definite with |m|,|n| <= sqrt(4p/3);
    // fig8: the norm-descent minimum of a class of value p stays well inside
    // 3*sqrt(p), checked by the wider-window sweep in the tests).
    const i64 window = static_cast<i64>(std::ceil(3.0 * std::sqrt((double)p_max)));
    using Key = std::tuple<i64, i64, i64, int>;
    std::map<std::pair<LensSpace, i64>, std::pair<Key, FamilyEmission>> best;
    for (i64 m = 2; m <= window; ++m) {
        for (i64 n = -window; n <= window; ++n) {
            if (std::abs(n) < 2 || std::gcd(m, n) != 1) continue;
            if (fiber_class_is_torus(f, m, n)) continue;
            KnotDescriptor d{f, {m, n}};
            SurgeryResult r = surgery_lens_space(coords_of(d));
            if (r.p_raw < 2 || r.p_raw > p_max) continue;
            Key key{std::max(m, std::abs(n)), m, std::abs(n), n < 0 ? 1 : 0};
            auto [it, inserted] = best.try_emplace(
                std::pair{r.space, r.lambda.value},
                std::pair{key, FamilyEmission{std::move(d), r}});
            if (!inserted && key < it->second.first)
                it->second = {key, FamilyEmission{KnotDescriptor{f, {m, n}}, r}};
        }
    }
    for (auto& [cls, kept] : best) out.push_back(std::move(kept.second));
}

void enumerate_sporadic(FamilyId f, i64 p_max,
                        std::vector<FamilyEmission>& out) {
    // Orders grow as 22*J^2 + beta*J + gamma, strictly increasing for J >= 0.
    for (i64 J = 0;; ++J) {
        auto c = sporadic_coords(f, J);
        const i128 p = c[0] * c[2] + c[1] * c[3];
        if ((p < 0 ? -p : p) > p_max) break;
        emit(f, {J}, p_max, out);
    }
}

}  // namespace

std::vector<FamilyEmission> enumerate_family(FamilyId f, i64 p_max) {
    if (p_max < 2) throw std::invalid_argument("enumerate_family: p_max < 2");
    std::vector<FamilyEmission> out;
    switch (f) {
        case FamilyId::TorusI:
        case FamilyId::CableII: enumerate_torus_like(f, p_max, out); break;
        case FamilyId::TypeIII: enumerate_type_iii(p_max, out); break;
        case FamilyId::TypeIV: enumerate_type_iv(p_max, out); break;
        case FamilyId::TypeV: enumerate_type_v(p_max, out); break;
        case FamilyId::TypeVI: enumerate_type_vi(p_max, out); break;
        case FamilyId::TrefoilFiber:
        case FamilyId::Fig8Fiber: enumerate_fiber(f, p_max, out); break;
        default: enumerate_sporadic(f, p_max, out); break;
    }
    std::sort(out.begin(), out.end(), [](const FamilyEmission& x,
                                         const FamilyEmission& y) {
        return std::tie(x.result.space.p, x.result.space.q,
                        x.result.lambda.value, x.descriptor.params) <
               std::tie(y.result.space.p, y.result.space.q,
                        y.result.lambda.value, y.descriptor.params);
    });
    return out;
}

}  // namespace lensknots
