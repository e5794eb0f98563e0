#pragma once

// Rational polyhedral cones with dual V/H representations, exact membership
// certificates, intersection, and triviality decisions.  Conventions:
//   - generators: R>=0-span; the zero cone is the empty generator list;
//     lineality shows up as +/- generator pairs.
//   - facets: inner normals, <f, x> >= 0; implicit equalities as +/- pairs.

#include "liecone/dd.hpp"
#include "liecone/simplex.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace liecone {

struct Cone {
    std::size_t dim = 0;
    std::vector<RatVec> generators;
    std::optional<std::vector<RatVec>> facets;
    bool canonical = false;
};

struct ConeUnion {
    std::size_t dim = 0;
    std::vector<Cone> components;
};

enum class SupportKind { Finite, Monoid };

// Weight-support summary of a module: finitely many weights, or a finitely
// generated monoid of highest weights.
struct SupportDescription {
    SupportKind kind = SupportKind::Finite;
    std::size_t dim = 0;
    std::vector<RatVec> weights;
};

inline Cone cone_from_generators(std::size_t dim, std::vector<RatVec> gens) {
    Cone c;
    c.dim = dim;
    c.generators = std::move(gens);
    return c;
}

inline Cone cone_from_facets(std::size_t dim, std::vector<RatVec> facets) {
    Cone c;
    c.dim = dim;
    c.facets = std::move(facets);
    // generators filled by dd_convert
    auto dd = dual_description(*c.facets, dim);
    for (const auto& b : dd.lineality) {
        c.generators.push_back(b);
        c.generators.push_back(rv_primitive(rv_neg(b)));
    }
    for (const auto& r : dd.rays) c.generators.push_back(r);
    std::sort(c.generators.begin(), c.generators.end(), rv_lex_less);
    return c;
}

inline Cone cone_zero(std::size_t dim) { return cone_from_generators(dim, {}); }

inline Cone cone_full(std::size_t dim) { return cone_from_facets(dim, {}); }

// Canonical dual form: generators become {extreme rays mod lineality, +/-
// echelon lineality basis}, facets likewise canonical for the dual side.
inline Cone dd_convert(const Cone& in) {
    Cone c;
    c.dim = in.dim;
    // Facets from generators (dual cone's description), generators from the
    // facets: two dual_description runs give canonical forms of both sides.
    const std::vector<RatVec>& gens =
        in.generators.empty() && in.facets ? cone_from_facets(in.dim, *in.facets).generators
                                           : in.generators;
    auto dual = dual_description(gens, in.dim);
    std::vector<RatVec> facets;
    for (const auto& b : dual.lineality) {
        facets.push_back(b);
        facets.push_back(rv_primitive(rv_neg(b)));
    }
    for (const auto& r : dual.rays) facets.push_back(r);
    std::sort(facets.begin(), facets.end(), rv_lex_less);
    auto primal = dual_description(facets, in.dim);
    c.generators.clear();
    for (const auto& b : primal.lineality) {
        c.generators.push_back(b);
        c.generators.push_back(rv_primitive(rv_neg(b)));
    }
    for (const auto& r : primal.rays) c.generators.push_back(r);
    std::sort(c.generators.begin(), c.generators.end(), rv_lex_less);
    c.facets = std::move(facets);
    c.canonical = true;
    return c;
}

inline const Cone& ensure_canonical(Cone& c) {
    if (!c.canonical) c = dd_convert(c);
    return c;
}

inline Cone canonical(const Cone& c) { return c.canonical ? c : dd_convert(c); }

inline bool cone_is_zero(const Cone& c) {
    if (c.canonical) return c.generators.empty();
    return canonical(c).generators.empty();
}

inline bool cone_equal(const Cone& a, const Cone& b) {
    if (a.dim != b.dim) return false;
    return canonical(a).generators == canonical(b).generators;
}

// Exact membership with a nonnegative-combination certificate over the
// cone's stored generators.
inline std::optional<std::vector<Rat>> cone_membership(const RatVec& v, const Cone& c) {
    if (v.size() != c.dim) throw std::invalid_argument("membership: dimension mismatch");
    return nonneg_combination(c.generators, v);
}

inline Cone cone_intersect(const Cone& a, const Cone& b) {
    if (a.dim != b.dim) throw std::invalid_argument("intersect: dimension mismatch");
    Cone ca = canonical(a), cb = canonical(b);
    std::vector<RatVec> combined = *ca.facets;
    combined.insert(combined.end(), cb.facets->begin(), cb.facets->end());
    return dd_convert(cone_from_facets(a.dim, std::move(combined)));
}

struct TrivialityCertificate {
    bool trivial = false;
    // Nontrivial case: a common nonzero point with exact coefficients over
    // each cone's generator list.
    RatVec witness;
    std::vector<Rat> coeffs_a, coeffs_b;
    // Trivial case: the combined facet system whose solution set is {0}.
    std::vector<RatVec> combined_facets;
};

inline TrivialityCertificate is_trivial_intersection(const Cone& a, const Cone& b) {
    Cone ca = canonical(a), cb = canonical(b);
    Cone inter = cone_intersect(ca, cb);
    TrivialityCertificate cert;
    if (inter.generators.empty()) {
        cert.trivial = true;
        cert.combined_facets = *ca.facets;
        cert.combined_facets.insert(cert.combined_facets.end(), cb.facets->begin(),
                                    cb.facets->end());
        return cert;
    }
    cert.trivial = false;
    cert.witness = inter.generators.front();
    auto ma = cone_membership(cert.witness, ca);
    auto mb = cone_membership(cert.witness, cb);
    if (!ma || !mb) throw std::logic_error("intersection witness failed membership re-check");
    cert.coeffs_a = *ma;
    cert.coeffs_b = *mb;
    return cert;
}

// Independent triviality route: 2*dim sign-pinned exact feasibility programs;
// never constructs the intersection cone.  Used to cross-verify verdicts.
inline bool trivial_intersection_lp(const Cone& a, const Cone& b) {
    const Cone& ca = a.generators.empty() && a.facets ? canonical(a) : a;
    const Cone& cb = b.generators.empty() && b.facets ? canonical(b) : b;
    const std::size_t n = a.dim;
    std::vector<RatVec> cols;
    for (const auto& g : ca.generators) {
        RatVec col(g);
        col.push_back(Rat(0));  // slot for the pinned coordinate, set per probe
        cols.push_back(col);
    }
    for (const auto& h : cb.generators) {
        RatVec col = rv_neg(h);
        col.push_back(Rat(0));
        cols.push_back(col);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (int sigma : {1, -1}) {
            for (std::size_t j = 0; j < ca.generators.size(); ++j)
                cols[j][n] = ca.generators[j][i];
            for (std::size_t j = 0; j < cb.generators.size(); ++j)
                cols[ca.generators.size() + j][n] = 0;
            RatVec target = rv_zero(n + 1);
            target[n] = sigma;
            if (nonneg_combination(cols, target)) return false;
        }
    }
    return true;
}

// Checks a certificate against the two cones it claims to describe.
inline bool certificate_valid(const Cone& a, const Cone& b, const TrivialityCertificate& cert) {
    if (cert.trivial) {
        auto dd = dual_description(cert.combined_facets, a.dim);
        if (!dd.lineality.empty() || !dd.rays.empty()) return false;
        // The claimed facets must actually bound both cones.
        Cone ca = canonical(a), cb = canonical(b);
        for (const auto& f : cert.combined_facets) {
            bool ok_a = std::all_of(ca.generators.begin(), ca.generators.end(),
                                    [&](const RatVec& g) { return rv_dot(f, g) >= 0; });
            bool ok_b = std::all_of(cb.generators.begin(), cb.generators.end(),
                                    [&](const RatVec& g) { return rv_dot(f, g) >= 0; });
            if (!ok_a && !ok_b) return false;
        }
        return true;
    }
    if (rv_is_zero(cert.witness)) return false;
    Cone ca = canonical(a), cb = canonical(b);
    if (cert.coeffs_a.size() != ca.generators.size()) return false;
    if (cert.coeffs_b.size() != cb.generators.size()) return false;
    RatVec ra = rv_zero(a.dim), rb = rv_zero(b.dim);
    for (std::size_t j = 0; j < ca.generators.size(); ++j) {
        if (cert.coeffs_a[j] < 0) return false;
        ra = rv_add(ra, rv_scale(ca.generators[j], cert.coeffs_a[j]));
    }
    for (std::size_t j = 0; j < cb.generators.size(); ++j) {
        if (cert.coeffs_b[j] < 0) return false;
        rb = rv_add(rb, rv_scale(cb.generators[j], cert.coeffs_b[j]));
    }
    return ra == cert.witness && rb == cert.witness;
}

inline Cone limit_cone(const SupportDescription& s) {
    if (s.kind == SupportKind::Finite) return dd_convert(cone_zero(s.dim));
    return dd_convert(cone_from_generators(s.dim, s.weights));
}

// Convex-hull membership of a point in finitely many points (polytope, not
// cone); returns barycentric coefficients when inside.
inline std::optional<std::vector<Rat>> hull_membership(const RatVec& p,
                                                       const std::vector<RatVec>& points) {
    return convex_combination(points, p);
}

// Image of a cone under a linear map given by a matrix acting on coordinates.
inline Cone cone_map(const Mat& m, const Cone& c) {
    std::vector<RatVec> gens;
    gens.reserve(c.generators.size());
    const std::vector<RatVec>& src =
        c.generators.empty() && c.facets ? canonical(c).generators : c.generators;
    for (const auto& g : src) gens.push_back(m.apply(g));
    return cone_from_generators(m.nrows(), std::move(gens));
}

// Product cone in block coordinates.
inline Cone cone_product(const Cone& a, const Cone& b) {
    std::vector<RatVec> gens;
    for (const auto& g : a.generators) gens.push_back(rv_concat(g, rv_zero(b.dim)));
    for (const auto& h : b.generators) gens.push_back(rv_concat(rv_zero(a.dim), h));
    return cone_from_generators(a.dim + b.dim, std::move(gens));
}

inline std::string cone_canonical_string(const Cone& c) {
    Cone k = canonical(c);
    std::string s = "dim=" + std::to_string(k.dim) + ";g:";
    for (const auto& g : k.generators) s += rv_to_string(g);
    s += ";f:";
    for (const auto& f : *k.facets) s += rv_to_string(f);
    return s;
}

}  // namespace liecone
