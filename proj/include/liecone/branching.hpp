#pragma once

// Branching of irreducible representations along an embedding: restriction of
// the weight-multiplicity map plus iterative highest-weight stripping, the
// dimension of the invariant (trivial-type) subspace, and enumeration of the
// monoid of spherical highest weights up to a height bound.

#include "liecone/embedding.hpp"

#include <future>
#include <map>
#include <set>
#include <thread>
#include <vector>

namespace liecone {

// Target-dominant scaled highest weight -> multiplicity.
using BranchingResult = std::map<IVec, long long>;

namespace detail {

inline std::map<IVec, long long> push_full_diagram(const Embedding& e, const IVec& lambda) {
    auto wd = weight_multiplicities(e.source, lambda);
    std::map<IVec, long long> pushed;
    for (const auto& [mu, m] : wd.dominant) {
        long long mult = m;
        for_each_orbit_point(e.source, mu,
                             [&](const IVec& w) { pushed[push_weight(e, w)] += mult; });
    }
    return pushed;
}

}  // namespace detail

inline BranchingResult branch(const Embedding& e, const IVec& lambda) {
    auto pushed = detail::push_full_diagram(e, lambda);
    if (e.target.simple_roots.empty()) return pushed;  // torus target: weights are the types

    BranchingResult result;
    const IVec& rho = e.target.rho;
    while (!pushed.empty()) {
        // Highest remaining type: maximal pairing with rho', lex-max tie-break.
        // For a genuine (Weyl-invariant) restriction this is always dominant.
        auto best = pushed.begin();
        long long best_score = iv_dot(best->first, rho);
        for (auto it = std::next(pushed.begin()); it != pushed.end(); ++it) {
            long long s = iv_dot(it->first, rho);
            if (s > best_score || (s == best_score && it->first > best->first)) {
                best = it;
                best_score = s;
            }
        }
        IVec hw = best->first;
        long long mult = best->second;
        if (mult < 0 || !rd_dominant(e.target, hw))
            throw SpecError("branching produced an inconsistent decomposition; "
                            "the restriction matrix does not describe a subgroup embedding");
        result[hw] += mult;
        auto wd = weight_multiplicities(e.target, hw);
        for (const auto& [mu, m] : wd.dominant) {
            long long drop = m * mult;
            detail::for_each_orbit_point(e.target, mu, [&](const IVec& w) {
                auto it = pushed.find(w);
                if (it == pushed.end())
                    throw SpecError("branching produced an inconsistent decomposition; "
                                    "the restriction matrix does not describe a subgroup embedding");
                it->second -= drop;
                if (it->second == 0) pushed.erase(it);
            });
        }
    }
    for (const auto& [hw, m] : result)
        if (m < 0)
            throw SpecError("branching produced a negative multiplicity; "
                            "the restriction matrix does not describe a subgroup embedding");
    return result;
}

namespace detail {

// Pushed-multiplicity values at a small set of target points, evaluated
// without materializing the full pushed diagram when the matrix is square
// and invertible.
inline std::vector<long long> pushed_values_at(const Embedding& e, const WeightDiagram& wd,
                                               const std::vector<IVec>& points) {
    std::vector<long long> vals(points.size(), 0);
    if (e.inv_den != 0) {
        for (std::size_t i = 0; i < points.size(); ++i) {
            auto pre = pull_weight(e, points[i]);
            if (!pre) continue;
            // Diagram weights all lie in the source lattice, so preimages
            // outside it contribute nothing (and cannot be dominantized).
            if (!rd_in_lattice(e.source, e.source.unscale(*pre))) continue;
            IVec dom = to_dominant(e.source, *pre).first;
            auto it = wd.dominant.find(dom);
            if (it != wd.dominant.end()) vals[i] = it->second;
        }
        return vals;
    }
    std::map<IVec, std::size_t> index;
    for (std::size_t i = 0; i < points.size(); ++i) index.emplace(points[i], i);
    for (const auto& [mu, m] : wd.dominant) {
        long long mult = m;
        for_each_orbit_point(e.source, mu, [&](const IVec& w) {
            auto it = index.find(push_weight(e, w));
            if (it != index.end()) vals[it->second] += mult;
        });
    }
    return vals;
}

}  // namespace detail

// Multiplicity of the trivial target-type in the restriction of V_lambda.
// Computed by the alternating Weyl-sum formula over the pushed weight map;
// agreement with branch() is covered by tests.
inline long long invariant_dimension(const Embedding& e, const IVec& lambda,
                                     const detail::SignedWeyl* cached_weyl = nullptr) {
    auto wd = weight_multiplicities(e.source, lambda);
    if (e.target.simple_roots.empty()) {
        IVec zero(e.target.amb, 0);
        return detail::pushed_values_at(e, wd, {zero})[0];
    }
    detail::SignedWeyl local;
    const detail::SignedWeyl& sw = cached_weyl ? *cached_weyl : (local = detail::weyl_with_det(e.target));
    std::vector<IVec> points;
    points.reserve(sw.elements.size());
    for (const auto& [wrho, det] : sw.elements) {
        (void)det;
        points.push_back(iv_sub(wrho, e.target.rho));
    }
    auto vals = detail::pushed_values_at(e, wd, points);
    long long n0 = 0;
    for (std::size_t i = 0; i < sw.elements.size(); ++i) n0 += sw.elements[i].second * vals[i];
    if (n0 < 0)
        throw SpecError("invariant dimension came out negative; "
                        "the restriction matrix does not describe a subgroup embedding");
    return n0;
}

struct SphericalMonoid {
    std::vector<IVec> elements;    // all spherical weights found, (height, lex) order
    std::vector<IVec> generators;  // minimal generating set of the discovered monoid
    bool saturated = false;        // every generator sits at height <= bound/2
};

// All dominant lattice weights of height <= bound carrying an invariant
// vector, with a minimal generating set.  "saturated" is the honest
// completeness heuristic: the discovered monoid is generated strictly below
// half the search bound, so doubling the bound could not have added a
// generator that combines elements already seen.
inline SphericalMonoid spherical_monoid(const Embedding& e, long long bound, unsigned jobs = 1) {
    if (bound <= 0) throw SpecError("enumeration bound must be positive");
    auto weights = enumerate_dominant(e.source, bound);
    detail::SignedWeyl sw;
    if (!e.target.simple_roots.empty()) sw = detail::weyl_with_det(e.target);

    std::vector<long long> inv(weights.size(), 0);
    if (jobs <= 1 || weights.size() < 8) {
        for (std::size_t i = 0; i < weights.size(); ++i)
            inv[i] = invariant_dimension(e, weights[i], &sw);
    } else {
        unsigned n = std::min<unsigned>(jobs, std::thread::hardware_concurrency() ?
                                                  std::thread::hardware_concurrency() : 4u);
        std::vector<std::future<void>> futs;
        std::size_t chunk = (weights.size() + n - 1) / n;
        for (unsigned t = 0; t < n; ++t) {
            std::size_t lo = t * chunk, hi = std::min(weights.size(), lo + chunk);
            if (lo >= hi) break;
            futs.push_back(std::async(std::launch::async, [&, lo, hi] {
                for (std::size_t i = lo; i < hi; ++i)
                    inv[i] = invariant_dimension(e, weights[i], &sw);
            }));
        }
        for (auto& f : futs) f.get();  // order-independent merge: fixed slots
    }

    SphericalMonoid out;
    std::set<IVec> found;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (inv[i] > 0) {
            out.elements.push_back(weights[i]);
            found.insert(weights[i]);
        }
    }
    for (const auto& g : out.elements) {
        if (iv_is_zero(g)) continue;
        bool decomposable = false;
        for (const auto& a : out.elements) {
            if (iv_is_zero(a) || a == g) continue;
            IVec diff = iv_sub(g, a);
            if (!iv_is_zero(diff) && found.count(diff)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) out.generators.push_back(g);
    }
    out.saturated = !out.generators.empty();
    for (const auto& g : out.generators)
        if (rd_height(e.source, g) * 2 > bound) out.saturated = false;
    return out;
}

// The limit cone of the monoid of spherical weights.
inline Cone monoid_limit_cone(const RootDatum& rd, const SphericalMonoid& m) {
    SupportDescription sd{SupportKind::Monoid, rd.amb, {}};
    for (const auto& g : m.generators) sd.weights.push_back(rd.unscale(g));
    if (sd.weights.empty()) return cone_zero(rd.amb);
    return limit_cone(sd);
}

}  // namespace liecone
