#pragma once

// Exact rational scalar used throughout the library.  All decision paths are
// integer/rational; floating point never enters except in the numerical
// cross-check harness (kostant.hpp), which is quarantined there.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace liecone {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Canonical form: "p" for integers, "p/q" otherwise, q > 0 always.
inline std::string rat_to_string(const Rat& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

// Accepts "p", "p/q", optional leading '-'.  Throws std::invalid_argument.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    auto check_int = [&](const std::string& t) {
        if (t.empty()) throw std::invalid_argument("bad rational literal: " + s);
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw std::invalid_argument("bad rational literal: " + s);
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                throw std::invalid_argument("bad rational literal: " + s);
    };
    if (slash == std::string::npos) {
        check_int(s);
        return Rat(Int(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    Int d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rat(Int(num), d);
}

inline int rat_sign(const Rat& r) { return r.sign(); }

// 64-bit FNV-1a; used for stable input digests in verdicts.
struct Fnv1a {
    std::uint64_t h = 1469598103934665603ull;
    void feed(const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
    }
    std::string hex() const {
        static const char* d = "0123456789abcdef";
        std::string out(16, '0');
        std::uint64_t v = h;
        for (int i = 15; i >= 0; --i) {
            out[static_cast<std::size_t>(i)] = d[v & 0xf];
            v >>= 4;
        }
        return out;
    }
};

}  // namespace liecone
