#pragma once

// Involutive automorphisms of a root datum and the chamber geometry they
// induce: the (-1)-eigenspace a*, the restricted root system obtained by
// projecting roots onto a*, a positive system compatible with the
// projection, and the Weyl element carrying the restricted chamber into the
// standard dominant chamber.

#include "liecone/cone.hpp"
#include "liecone/rootdatum.hpp"

#include <set>
#include <string>
#include <vector>

namespace liecone {

struct InvolutionData {
    Mat sigma;  // amb x amb on standard coordinates; orthogonal, squares to 1
    // pos_roots[i] maps to sign(v) * pos_roots[|v|-1].
    std::vector<long long> root_permutation;
};

struct RestrictedRootData {
    std::vector<RatVec> astar_basis;          // reduced basis of the (-1)-eigenspace
    std::vector<RatVec> restricted_positive;  // positive restricted roots, lex order
    std::vector<RatVec> compatible_positive;  // root-datum positive system compatible with them
    std::vector<std::size_t> align_word;      // simple reflections carrying it to the standard chamber
    Cone chamber;                             // dominant cone of the restricted system, inside a*
    Cone image_chamber;                       // its image inside the standard dominant chamber
};

namespace detail {

// Rows of a reduced row-echelon basis for the span of the given vectors.
inline std::pair<std::vector<RatVec>, std::vector<std::size_t>> reduced_basis(
    std::vector<RatVec> vecs) {
    Mat m{std::move(vecs)};
    auto pivots = rref(m);
    std::vector<RatVec> rows(m.rows.begin(), m.rows.begin() + pivots.size());
    return {rows, pivots};
}

// Coordinates in a reduced basis: for v in the span, the pivot entries.
inline RatVec pivot_coords(const RatVec& v, const std::vector<std::size_t>& pivots) {
    RatVec c;
    c.reserve(pivots.size());
    for (auto p : pivots) c.push_back(v[p]);
    return c;
}

inline bool lex_positive(const RatVec& v) {
    for (const auto& x : v) {
        if (x > 0) return true;
        if (x < 0) return false;
    }
    return false;
}

// Directions orthogonal to every weight of the datum; momentum cones live in
// the span of the weights, so these enter chamber constructions as equalities.
inline std::vector<RatVec> weight_span_complement(const RootDatum& rd) {
    std::vector<RatVec> rows;
    for (const auto& w : rd.fund_weights) rows.push_back(rd.unscale(w));
    for (const auto& z : rd.central_dirs) rows.push_back(rd.unscale(z));
    if (rows.empty()) rows.push_back(rv_zero(rd.amb));
    return nullspace(Mat{std::move(rows)});
}

}  // namespace detail

inline InvolutionData make_involution(const RootDatum& rd, Mat sigma) {
    const std::size_t n = rd.amb;
    if (sigma.rows.size() != n)
        throw SpecError("involution matrix must be square of the ambient dimension");
    for (const auto& row : sigma.rows)
        if (row.size() != n)
            throw SpecError("involution matrix must be square of the ambient dimension");

    Mat sq = sigma.mul(sigma);
    Mat gram = sigma.transpose().mul(sigma);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat id = i == j ? Rat(1) : Rat(0);
            if (sq.rows[i][j] != id) throw SpecError("involution matrix must square to the identity");
            if (gram.rows[i][j] != id)
                throw SpecError("involution matrix must preserve the inner product");
        }

    InvolutionData inv{std::move(sigma), {}};
    inv.root_permutation.reserve(rd.pos_roots.size());
    for (const auto& a : rd.pos_roots) {
        RatVec img = inv.sigma.apply(rd.unscale(a));
        long long code = 0;
        for (std::size_t j = 0; j < rd.pos_roots.size() && code == 0; ++j) {
            RatVec b = rd.unscale(rd.pos_roots[j]);
            if (rv_eq(img, b)) code = static_cast<long long>(j) + 1;
            else if (rv_eq(img, rv_neg(b))) code = -(static_cast<long long>(j) + 1);
        }
        if (code == 0)
            throw SpecError("involution matrix does not permute the roots: image of " +
                            rv_to_string(rd.unscale(a)) + " is " + rv_to_string(img));
        inv.root_permutation.push_back(code);
    }
    for (const auto& v : rd.lattice_basis)
        if (!rd_in_lattice(rd, inv.sigma.apply(rd.unscale(v))))
            throw SpecError("involution matrix does not preserve the weight lattice: image of " +
                            rv_to_string(rd.unscale(v)) + " leaves it");
    return inv;
}

inline RestrictedRootData restricted_chamber(const RootDatum& rd, const InvolutionData& inv) {
    const std::size_t n = rd.amb;
    Mat plus, minus;  // sigma + 1 and sigma - 1
    plus.rows.assign(n, rv_zero(n));
    minus.rows.assign(n, rv_zero(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat id = i == j ? Rat(1) : Rat(0);
            plus.rows[i][j] = inv.sigma.rows[i][j] + id;
            minus.rows[i][j] = inv.sigma.rows[i][j] - id;
        }

    RestrictedRootData out;
    auto [abasis, apivots] = detail::reduced_basis(nullspace(plus));
    auto [fbasis, fpivots] = detail::reduced_basis(nullspace(minus));
    out.astar_basis = abasis;

    // Restricted roots: nonzero projections of roots onto a*.
    std::set<RatVec> restricted;
    for (const auto& a : rd.pos_roots) {
        RatVec ar = rd.unscale(a);
        RatVec p = rv_scale(rv_sub(ar, inv.sigma.apply(ar)), Rat(1, 2));
        if (rv_is_zero(p)) continue;
        restricted.insert(p);
        restricted.insert(rv_neg(p));
    }
    for (const auto& p : restricted)
        for (const auto& q : restricted) {
            Rat c = Rat(2) * rv_dot(q, p) / rv_dot(p, p);
            if (!restricted.count(rv_sub(q, rv_scale(p, c))))
                throw SpecError("restricted roots do not form a root system; the (-1)-eigenspace "
                                "of the involution is not maximal abelian in its eigenspace");
        }
    for (const auto& p : restricted)
        if (detail::lex_positive(detail::pivot_coords(p, apivots)))
            out.restricted_positive.push_back(p);

    // Positive system compatible with the restricted one: a root is positive
    // when (a*-coordinates of its projection, then fixed-part coordinates of
    // its sigma-average) is lex-positive.  The projection of a compatible
    // positive root is then automatically a positive restricted root.
    for (const auto& a : rd.pos_roots) {
        RatVec ar = rd.unscale(a);
        RatVec proj = rv_scale(rv_sub(ar, inv.sigma.apply(ar)), Rat(1, 2));
        RatVec avg = rv_scale(rv_add(ar, inv.sigma.apply(ar)), Rat(1, 2));
        RatVec key = rv_concat(detail::pivot_coords(proj, apivots),
                               detail::pivot_coords(avg, fpivots));
        out.compatible_positive.push_back(detail::lex_positive(key) ? ar : rv_neg(ar));
    }
    {
        std::set<RatVec> seen;
        for (const auto& a : out.compatible_positive) {
            RatVec p = rv_scale(rv_sub(a, inv.sigma.apply(a)), Rat(1, 2));
            if (!rv_is_zero(p)) seen.insert(p);
        }
        std::set<RatVec> expect(out.restricted_positive.begin(), out.restricted_positive.end());
        if (seen != expect)
            throw std::logic_error("compatible positive system fails to restrict onto the "
                                   "positive restricted roots");
    }

    // Chamber of the restricted system inside a*, cut down to the span of
    // the weights (momentum directions never leave it).
    std::vector<RatVec> facets = out.restricted_positive;
    for (const auto& row : plus.rows) {
        if (rv_is_zero(row)) continue;
        facets.push_back(row);
        facets.push_back(rv_neg(row));
    }
    for (const auto& c : detail::weight_span_complement(rd)) {
        facets.push_back(c);
        facets.push_back(rv_neg(c));
    }
    out.chamber = dd_convert(cone_from_facets(n, std::move(facets)));

    // Weyl element aligning the compatible chamber with the standard one:
    // dominantize the (regular) sum of the compatible positive roots.
    RatVec vsum = rv_zero(n);
    for (const auto& a : out.compatible_positive) vsum = rv_add(vsum, a);
    out.align_word = to_dominant(rd, rd.rescale(vsum)).second;

    std::vector<RatVec> igens;
    for (const auto& g : out.chamber.generators) {
        RatVec img = g;
        for (auto i : out.align_word) img = apply_simple_reflection(rd, i, img);
        for (const auto& s : rd.simple_roots)
            if (rv_dot(img, rd.unscale(s)) < 0)
                throw std::logic_error("aligned restricted chamber left the dominant chamber");
        igens.push_back(std::move(img));
    }
    out.image_chamber = dd_convert(cone_from_generators(n, std::move(igens)));
    return out;
}

}  // namespace liecone
