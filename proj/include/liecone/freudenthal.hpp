#pragma once

// Weight multiplicities by the Freudenthal recursion and dimensions by the
// Weyl product formula.  Works on the datum's scaled integer lattice; every
// division is checked exact.

#include "liecone/rootdatum.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace liecone {

// Multiplicities at dominant weights only; expand via Weyl orbits on demand.
struct WeightDiagram {
    std::map<IVec, long long> dominant;  // dominant weight -> multiplicity
};

namespace detail {

// Integer projector onto simple-root coordinates: coeffs(x) = Pnum * x / pden
// with an exact back-substitution check, so span membership and integrality
// are decided without rational arithmetic in the hot loop.
struct RootCoeffs {
    std::vector<IVec> pnum;  // one row per simple root
    long long pden = 1;
    const RootDatum* rd = nullptr;

    explicit RootCoeffs(const RootDatum& datum) : rd(&datum) {
        const auto& S = datum.simple_roots;
        if (S.empty()) return;
        // P = (S^T S)^{-1} S^T over the rationals, then cleared to integers.
        Mat gram;
        gram.rows.assign(S.size(), rv_zero(S.size()));
        for (std::size_t i = 0; i < S.size(); ++i)
            for (std::size_t j = 0; j < S.size(); ++j) gram.rows[i][j] = Rat(iv_dot(S[i], S[j]));
        auto gi = inverse(gram);
        if (!gi) throw std::logic_error("simple roots are linearly dependent");
        Mat st;
        st.rows.assign(S.size(), rv_zero(datum.amb));
        for (std::size_t i = 0; i < S.size(); ++i)
            for (std::size_t j = 0; j < datum.amb; ++j) st.rows[i][j] = Rat(S[i][j]);
        Mat p = gi->mul(st);
        Int den = 1;
        for (const auto& row : p.rows)
            for (const auto& x : row) den = boost::multiprecision::lcm(den, rat_den(x));
        pden = static_cast<long long>(den);
        pnum.assign(S.size(), IVec(datum.amb, 0));
        for (std::size_t i = 0; i < S.size(); ++i)
            for (std::size_t j = 0; j < datum.amb; ++j) {
                Rat v = p.rows[i][j] * Rat(den);
                pnum[i][j] = static_cast<long long>(rat_num(v));
            }
    }

    // diff as nonnegative integer coefficients over simple roots, else nullopt.
    std::optional<std::vector<long long>> nonneg_coeffs(const IVec& diff) const {
        std::vector<long long> k(pnum.size());
        for (std::size_t i = 0; i < pnum.size(); ++i) {
            long long num = iv_dot(pnum[i], diff);
            if (num % pden != 0) return std::nullopt;
            k[i] = num / pden;
            if (k[i] < 0) return std::nullopt;
        }
        // back-substitution: catches points outside the root span
        for (std::size_t j = 0; j < diff.size(); ++j) {
            long long acc = 0;
            for (std::size_t i = 0; i < pnum.size(); ++i) acc += k[i] * rd->simple_roots[i][j];
            if (acc != diff[j]) return std::nullopt;
        }
        return k;
    }
};

inline IVec dominantize(const RootDatum& rd, IVec x) {
    for (;;) {
        bool moved = false;
        for (std::size_t i = 0; i < rd.simple_roots.size(); ++i) {
            const IVec& a = rd.simple_roots[i];
            long long d = iv_dot(x, a);
            if (d >= 0) continue;
            long long den = iv_dot(a, a);
            long long c = 2 * d / den;  // exact for lattice points
            if ((2 * d) % den != 0) throw std::invalid_argument("reflection leaves the scaled lattice");
            for (std::size_t k = 0; k < x.size(); ++k) x[k] -= c * a[k];
            moved = true;
            break;
        }
        if (!moved) return x;
    }
}

// Orbits factor through coordinate blocks (simple roots never straddle two
// factors), so a product orbit is the cartesian product of per-block orbits.
inline std::vector<std::vector<IVec>> block_orbits(const RootDatum& rd, const IVec& v) {
    std::vector<std::vector<IVec>> out;
    for (const auto& fac : rd.factors) {
        IVec slice(v.begin() + fac.offset, v.begin() + fac.offset + fac.amb);
        std::vector<IVec> roots;
        for (const auto& a : rd.simple_roots) {
            bool in_block = false, outside = false;
            for (std::size_t k = 0; k < a.size(); ++k) {
                if (a[k] == 0) continue;
                if (k >= fac.offset && k < fac.offset + fac.amb) in_block = true;
                else outside = true;
            }
            if (in_block && !outside)
                roots.emplace_back(a.begin() + fac.offset, a.begin() + fac.offset + fac.amb);
        }
        std::set<IVec> orbit{slice};
        std::vector<IVec> frontier{slice};
        while (!frontier.empty()) {
            std::vector<IVec> next;
            for (const auto& x : frontier) {
                for (const auto& a : roots) {
                    long long num = 2 * iv_dot(x, a), den = iv_dot(a, a);
                    if (num % den != 0) throw std::invalid_argument("reflection leaves the scaled lattice");
                    long long c = num / den;
                    IVec y(x);
                    for (std::size_t k = 0; k < y.size(); ++k) y[k] -= c * a[k];
                    if (orbit.insert(y).second) next.push_back(y);
                }
            }
            frontier = std::move(next);
        }
        out.emplace_back(orbit.begin(), orbit.end());
    }
    return out;
}

// Calls f(point) for every point of the Weyl orbit of v, assembling the
// cartesian product of block orbits.
template <typename F>
inline void for_each_orbit_point(const RootDatum& rd, const IVec& v, F&& f) {
    auto blocks = block_orbits(rd, v);
    std::vector<std::size_t> idx(blocks.size(), 0);
    IVec point(rd.amb, 0);
    for (;;) {
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            const IVec& s = blocks[b][idx[b]];
            std::copy(s.begin(), s.end(), point.begin() + rd.factors[b].offset);
        }
        f(point);
        std::size_t b = 0;
        while (b < blocks.size() && idx[b] + 1 == blocks[b].size()) idx[b++] = 0;
        if (b == blocks.size()) break;
        ++idx[b];
    }
}

inline Int orbit_size(const RootDatum& rd, const IVec& v) {
    Int n = 1;
    for (const auto& blk : block_orbits(rd, v)) n *= Int(blk.size());
    return n;
}

// Weyl group elements as (w . rho, det w) pairs; rho is regular, so points
// index elements bijectively and the sign is well defined.
struct SignedWeyl {
    std::vector<std::pair<IVec, int>> elements;
};

inline SignedWeyl weyl_with_det(const RootDatum& rd) {
    SignedWeyl sw;
    std::map<IVec, int> seen{{rd.rho, 1}};
    std::vector<IVec> frontier{rd.rho};
    while (!frontier.empty()) {
        std::vector<IVec> next;
        for (const auto& x : frontier) {
            int d = seen.at(x);
            for (std::size_t i = 0; i < rd.simple_roots.size(); ++i) {
                IVec y = apply_simple_reflection(rd, i, x);
                if (seen.emplace(y, -d).second) next.push_back(y);
            }
        }
        frontier = std::move(next);
    }
    sw.elements.assign(seen.begin(), seen.end());
    return sw;
}

}  // namespace detail

inline WeightDiagram weight_multiplicities(const RootDatum& rd, const IVec& lambda) {
    if (!rd_dominant(rd, lambda))
        throw SpecError("weight_multiplicities: weight is not dominant");
    for (const auto& a : rd.simple_roots) {
        Rat p = rd_pairing(lambda, a);
        if (rat_den(p) != 1) throw SpecError("weight_multiplicities: weight not in the lattice");
    }
    WeightDiagram wd;
    if (rd.simple_roots.empty()) {
        wd.dominant[lambda] = 1;
        return wd;
    }
    detail::RootCoeffs rc(rd);

    // Dominant weights below lambda: closure under "subtract a positive root,
    // dominantize", which stays inside the diagram.
    std::set<IVec> doms{lambda};
    std::vector<IVec> frontier{lambda};
    while (!frontier.empty()) {
        std::vector<IVec> next;
        for (const auto& mu : frontier) {
            for (const auto& a : rd.pos_roots) {
                IVec dom = detail::dominantize(rd, iv_sub(mu, a));
                if (doms.count(dom)) continue;
                if (!rc.nonneg_coeffs(iv_sub(lambda, dom))) continue;
                doms.insert(dom);
                next.push_back(dom);
            }
        }
        frontier = std::move(next);
    }

    // Level = sum of simple-root coefficients of lambda - mu; the recursion
    // needs strictly smaller levels first.
    std::vector<std::pair<long long, IVec>> order;
    order.reserve(doms.size());
    for (const auto& mu : doms) {
        auto k = rc.nonneg_coeffs(iv_sub(lambda, mu));
        long long lvl = 0;
        for (auto c : *k) lvl += c;
        order.emplace_back(lvl, mu);
    }
    std::sort(order.begin(), order.end());

    const long long lam_norm = iv_dot(iv_add(lambda, rd.rho), iv_add(lambda, rd.rho));
    for (const auto& [lvl, mu] : order) {
        if (lvl == 0) {
            wd.dominant[mu] = 1;
            continue;
        }
        long long rhs = 0;
        for (const auto& a : rd.pos_roots) {
            IVec nu = mu;
            for (;;) {
                nu = iv_add(nu, a);
                IVec dom = detail::dominantize(rd, nu);
                auto it = wd.dominant.find(dom);
                if (it == wd.dominant.end()) break;  // alpha-strings are unbroken
                rhs += iv_dot(nu, a) * it->second;
            }
        }
        long long denom = lam_norm - iv_dot(iv_add(mu, rd.rho), iv_add(mu, rd.rho));
        if (denom <= 0 || (2 * rhs) % denom != 0 || rhs <= 0)
            throw std::logic_error("Freudenthal recursion produced an invalid multiplicity");
        wd.dominant[mu] = 2 * rhs / denom;
    }
    return wd;
}

// Full weight map (every weight, not just dominant ones).
inline std::map<IVec, long long> expand_diagram(const RootDatum& rd, const WeightDiagram& wd) {
    std::map<IVec, long long> full;
    for (const auto& [mu, m] : wd.dominant) {
        long long mult = m;
        detail::for_each_orbit_point(rd, mu, [&](const IVec& w) { full[w] = mult; });
    }
    return full;
}

inline Int weyl_dimension(const RootDatum& rd, const IVec& lambda) {
    if (!rd_dominant(rd, lambda)) throw SpecError("weyl_dimension: weight is not dominant");
    IVec lr = iv_add(lambda, rd.rho);
    Rat dim(1);
    for (const auto& a : rd.pos_roots) dim *= Rat(iv_dot(lr, a), iv_dot(rd.rho, a));
    if (rat_den(dim) != 1) throw std::logic_error("Weyl dimension is not an integer");
    return rat_num(dim);
}

inline Int diagram_total_dimension(const RootDatum& rd, const WeightDiagram& wd) {
    Int total = 0;
    for (const auto& [mu, m] : wd.dominant) total += detail::orbit_size(rd, mu) * m;
    return total;
}

}  // namespace liecone
