#pragma once

// Exact rational vectors (weight-space points, ray generators, facet normals).

#include "liecone/rat.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace liecone {

using RatVec = std::vector<Rat>;

inline RatVec rv_zero(std::size_t n) { return RatVec(n, Rat(0)); }

inline bool rv_is_zero(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

inline RatVec rv_add(const RatVec& a, const RatVec& b) {
    RatVec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline RatVec rv_sub(const RatVec& a, const RatVec& b) {
    RatVec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline RatVec rv_neg(const RatVec& a) {
    RatVec r(a);
    for (auto& x : r) x = -x;
    return r;
}

inline RatVec rv_scale(const RatVec& a, const Rat& c) {
    RatVec r(a);
    for (auto& x : r) x *= c;
    return r;
}

inline Rat rv_dot(const RatVec& a, const RatVec& b) {
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool rv_eq(const RatVec& a, const RatVec& b) { return a == b; }

// Strict total order: lexicographic on coordinates.
inline bool rv_lex_less(const RatVec& a, const RatVec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

// Scales a nonzero vector to the unique primitive integer vector on its ray:
// integer coordinates with gcd 1, direction preserved.  Zero stays zero.
inline RatVec rv_primitive(const RatVec& v) {
    Int l = 1;
    for (const auto& x : v) l = boost::multiprecision::lcm(l, rat_den(x));
    Int g = 0;
    RatVec r(v.size());
    std::vector<Int> nums(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        nums[i] = rat_num(v[i]) * (l / rat_den(v[i]));
        g = boost::multiprecision::gcd(g, nums[i]);
    }
    if (g == 0) return rv_zero(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(nums[i] / g);
    return r;
}

inline std::string rv_to_string(const RatVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += rat_to_string(v[i]);
    }
    return s + ")";
}

inline RatVec rv_concat(const RatVec& a, const RatVec& b) {
    RatVec r(a);
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

// Integer-coordinate vectors: the fast path for root/weight combinatorics.
// Values are standard coordinates times a per-datum scale factor.
using IVec = std::vector<long long>;

inline long long iv_dot(const IVec& a, const IVec& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline IVec iv_add(const IVec& a, const IVec& b) {
    IVec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline IVec iv_sub(const IVec& a, const IVec& b) {
    IVec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline IVec iv_scaled(const IVec& a, long long c) {
    IVec r(a);
    for (auto& x : r) x *= c;
    return r;
}

inline bool iv_is_zero(const IVec& a) {
    return std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; });
}

inline RatVec iv_to_rv(const IVec& v, const Int& scale) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(Int(v[i]), scale);
    return r;
}

// Exact only when every coordinate of v*scale is integral; callers must
// guarantee that (lattice vectors in a datum with that scale always are).
inline IVec rv_to_iv(const RatVec& v, const Int& scale) {
    IVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat x = v[i] * Rat(scale);
        if (rat_den(x) != 1) throw std::invalid_argument("vector not in 1/scale lattice: " + rv_to_string(v));
        Int n = rat_num(x);
        r[i] = static_cast<long long>(n);
    }
    return r;
}

}  // namespace liecone
