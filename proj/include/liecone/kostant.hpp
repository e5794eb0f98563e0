#pragma once

// Sampling cross-check of the torus projection of adjoint orbits: for the
// matrix-realizable test types, project conjugates of a torus element onto
// the torus and verify the projections land in the convex hull of the Weyl
// orbit.  This is the only part of the library that touches floating point;
// hull membership itself is decided against exact facet data after
// rationalizing each sample.

#include "liecone/cone.hpp"
#include "liecone/rootdatum.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

namespace liecone {

struct KostantReport {
    std::size_t samples = 0;
    double max_violation = 0.0;  // Euclidean distance outside the hull, worst sample
    bool all_inside = false;     // max_violation within tolerance
    bool origin_in_hull = false; // exact membership of 0 in Conv(W y)
};

inline constexpr double kostant_tolerance = 1e-9;

namespace detail {

// Exact facet system of Conv(points), homogenized as (1, p): rows (c0, c)
// with c0 + <c, x> >= 0 on the hull.
inline std::vector<RatVec> hull_facets(std::size_t dim, const std::vector<RatVec>& points) {
    std::vector<RatVec> gens;
    gens.reserve(points.size());
    for (const auto& p : points) {
        RatVec g;
        g.reserve(dim + 1);
        g.push_back(Rat(1));
        g.insert(g.end(), p.begin(), p.end());
        gens.push_back(std::move(g));
    }
    Cone c = canonical(cone_from_generators(dim + 1, std::move(gens)));
    return *c.facets;
}

inline Rat rationalize_sample(double x) {
    if (!(std::fabs(x) < 1e6)) throw std::logic_error("sample coordinate out of range");
    long long n = std::llround(x * 1e12);
    return Rat(Int(n), Int(1000000000000LL));
}

}  // namespace detail

inline KostantReport kostant_projection_check(const RootDatum& rd, const RatVec& y,
                                              std::size_t samples) {
    if (y.size() != rd.amb) throw SpecError("torus element has the wrong dimension");
    KostantReport rep;
    rep.samples = samples;

    std::vector<RatVec> orbit = weyl_orbit(rd, y);
    rep.origin_in_hull = hull_membership(rv_zero(rd.amb), orbit).has_value();

    if (rv_is_zero(y)) {
        // Conjugation fixes 0; the projection is identically 0.
        rep.all_inside = true;
        return rep;
    }
    if (rd.type_str != "A1" && rd.type_str != "A2")
        throw SpecError("conjugation sampling is realized for types A1 and A2 only");

    std::vector<RatVec> facets = detail::hull_facets(rd.amb, orbit);
    std::vector<double> facet_norm(facets.size());
    for (std::size_t f = 0; f < facets.size(); ++f) {
        double s = 0;
        for (std::size_t i = 1; i < facets[f].size(); ++i) {
            double x = static_cast<double>(facets[f][i]);
            s += x * x;
        }
        facet_norm[f] = std::sqrt(s);
    }

    std::mt19937_64 rng(0x51ab5eedcafef00dULL);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double worst = 0.0;

    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<double> pr(rd.amb, 0.0);
        if (rd.type_str == "A1") {
            // Unit quaternion = special-unitary 2x2; conjugation acts on the
            // traceless skew-hermitian space as the associated rotation, and
            // the torus component scales y by one diagonal rotation entry.
            double a, b, c, d, n2;
            do {
                a = gauss(rng), b = gauss(rng), c = gauss(rng), d = gauss(rng);
                n2 = a * a + b * b + c * c + d * d;
            } while (n2 < 1e-12);
            pr[0] = static_cast<double>(y[0]) * (a * a + b * b - c * c - d * d) / n2;
        } else {
            // Haar-ish 3x3 unitary: complex Gaussian matrix, Gram-Schmidt on
            // columns.  Column phases cancel in |k_ij|^2, so the projection
            // pr_i = sum_j |k_ij|^2 y_j is unaffected by the det phase.
            std::complex<double> k[3][3];
            for (auto& row : k)
                for (auto& x : row) x = {gauss(rng), gauss(rng)};
            for (int j = 0; j < 3; ++j) {
                for (int p = 0; p < j; ++p) {
                    std::complex<double> dot = 0;
                    for (int i = 0; i < 3; ++i) dot += std::conj(k[i][p]) * k[i][j];
                    for (int i = 0; i < 3; ++i) k[i][j] -= dot * k[i][p];
                }
                double nrm = 0;
                for (int i = 0; i < 3; ++i) nrm += std::norm(k[i][j]);
                nrm = std::sqrt(nrm);
                for (int i = 0; i < 3; ++i) k[i][j] /= nrm;
            }
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    pr[static_cast<std::size_t>(i)] +=
                        std::norm(k[i][j]) * static_cast<double>(y[static_cast<std::size_t>(j)]);
        }

        RatVec q;
        q.reserve(rd.amb);
        for (double x : pr) q.push_back(detail::rationalize_sample(x));
        for (std::size_t f = 0; f < facets.size(); ++f) {
            Rat val = facets[f][0];
            for (std::size_t i = 0; i < rd.amb; ++i) val += facets[f][i + 1] * q[i];
            if (val < 0 && facet_norm[f] > 0) {
                double viol = -static_cast<double>(val) / facet_norm[f];
                if (viol > worst) worst = viol;
            }
        }
    }
    rep.max_violation = worst;
    rep.all_inside = worst <= kostant_tolerance;
    return rep;
}

}  // namespace liecone
