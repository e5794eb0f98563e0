#pragma once

// Double description with explicit lineality handling: given homogeneous
// constraints <a_i, x> >= 0, produce a lineality basis plus the extreme rays
// of the pointed quotient.  Exact rational arithmetic throughout; rays are
// kept as primitive integer vectors, adjacency is decided by a rank test, so
// no tolerance or tie-breaking heuristic exists anywhere.

#include "liecone/mat.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

namespace liecone {

struct DualDescription {
    std::vector<RatVec> lineality;  // canonical: reduced row echelon, primitive
    std::vector<RatVec> rays;       // canonical: primitive, reduced mod lineality, lex-sorted
};

namespace detail {

// r := r*<a,b0> - b0*<a,r>, keeping prior constraint values (all zero on b0)
// scaled by the positive factor <a,b0>.
inline RatVec eliminate_along(const RatVec& r, const RatVec& b0, const Rat& ab0, const Rat& ar) {
    RatVec out = rv_sub(rv_scale(r, ab0), rv_scale(b0, ar));
    return rv_primitive(out);
}

}  // namespace detail

inline DualDescription dual_description(const std::vector<RatVec>& constraints, std::size_t dim) {
    std::vector<RatVec> B;  // current lineality basis
    B.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        RatVec e = rv_zero(dim);
        e[i] = 1;
        B.push_back(e);
    }
    std::vector<RatVec> R;           // current extreme rays (mod lineality)
    std::vector<RatVec> processed;   // constraints handled so far

    for (const auto& a : constraints) {
        // 1. Shrink lineality if it sticks out of the halfspace.
        std::size_t hit = B.size();
        for (std::size_t i = 0; i < B.size(); ++i)
            if (rv_dot(a, B[i]) != 0) { hit = i; break; }
        if (hit != B.size()) {
            RatVec b0 = B[hit];
            B.erase(B.begin() + static_cast<std::ptrdiff_t>(hit));
            Rat ab0 = rv_dot(a, b0);
            if (ab0 < 0) { b0 = rv_neg(b0); ab0 = -ab0; }
            for (auto& b : B) {
                Rat ab = rv_dot(a, b);
                if (ab != 0) b = detail::eliminate_along(b, b0, ab0, ab);
            }
            for (auto& r : R) {
                Rat ar = rv_dot(a, r);
                if (ar != 0) r = detail::eliminate_along(r, b0, ab0, ar);
            }
            R.push_back(rv_primitive(b0));
            processed.push_back(a);
            continue;
        }
        // 2. Classic DD step on the pointed part.
        std::vector<std::size_t> plus, zero, minus;
        std::vector<Rat> val(R.size());
        for (std::size_t i = 0; i < R.size(); ++i) {
            val[i] = rv_dot(a, R[i]);
            (val[i] > 0 ? plus : val[i] < 0 ? minus : zero).push_back(i);
        }
        if (!minus.empty()) {
            // Adjacency: rays p,q span a 2-face iff the constraints active at
            // both have rank dim - |B| - 2.
            const std::size_t want = dim - B.size() - 2;
            std::vector<RatVec> fresh;
            for (auto p : plus) {
                for (auto q : minus) {
                    Mat act;
                    for (const auto& c : processed)
                        if (rv_dot(c, R[p]) == 0 && rv_dot(c, R[q]) == 0) act.rows.push_back(c);
                    if (mat_rank(act) != want) continue;
                    RatVec w = rv_sub(rv_scale(R[q], val[p]), rv_scale(R[p], val[q]));
                    fresh.push_back(rv_primitive(w));
                }
            }
            std::vector<RatVec> keep;
            keep.reserve(plus.size() + zero.size() + fresh.size());
            for (auto i : plus) keep.push_back(R[i]);
            for (auto i : zero) keep.push_back(R[i]);
            for (auto& w : fresh) keep.push_back(std::move(w));
            R = std::move(keep);
        }
        processed.push_back(a);
    }

    // Canonicalize: echelonize the lineality, reduce rays modulo it, sort.
    DualDescription out;
    if (!B.empty()) {
        Mat lb;
        lb.rows = B;
        rref(lb);
        for (auto& row : lb.rows)
            if (!rv_is_zero(row)) out.lineality.push_back(rv_primitive(row));
    }
    for (auto r : R) {
        for (const auto& b : out.lineality) {
            // b is primitive-echelon; eliminate r's component on b's pivot.
            std::size_t piv = 0;
            while (b[piv] == 0) ++piv;
            if (r[piv] != 0) r = rv_sub(r, rv_scale(b, r[piv] / b[piv]));
        }
        out.rays.push_back(rv_primitive(r));
    }
    std::sort(out.rays.begin(), out.rays.end(), rv_lex_less);
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
    return out;
}

}  // namespace liecone
