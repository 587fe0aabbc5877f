#include "lensknots/lens.hpp"

#include <algorithm>

namespace lensknots {

std::set<i64> orbit(i64 p, i64 x) {
    if (p < 2) throw std::invalid_argument("orbit: p must be at least 2");
    i64 v = mod_reduce(x, p);
    i64 inv = mod_inv(v, p);  // throws NonUnit for non-units
    return {v, p - v, inv, p - inv};
}

LensSpace normalize(i64 p, i64 q_raw) {
    if (p < 1) throw std::invalid_argument("normalize: p must be positive");
    if (p == 1) return {1, 0};
    return {p, *orbit(p, q_raw).begin()};
}

bool same_space(const LensSpace& x, const LensSpace& y) { return x == y; }

LambdaClass canonical_lambda(i64 p, i64 lambda_raw) {
    if (p < 1) throw std::invalid_argument("canonical_lambda: p must be positive");
    if (p == 1) return {1, 0};
    return {p, *orbit(p, lambda_raw).begin()};
}

std::string render(const LensSpace& s) {
    if (s.p == 1) return "S3";
    return "L(" + std::to_string(s.p) + "," + std::to_string(s.q) + ")";
}

}  // namespace lensknots
