#pragma once

// Exact phase-1 simplex: nonnegative solutions of G a = v.  Bland's rule, so
// termination is unconditional; everything is rational, so feasibility is
// decided exactly.  This is the certificate engine behind cone membership.

#include "liecone/mat.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace liecone {

// Finds a >= 0 with sum_j a_j cols[j] = target; nullopt iff none exists.
inline std::optional<std::vector<Rat>> nonneg_combination(const std::vector<RatVec>& cols,
                                                          const RatVec& target) {
    const std::size_t m = target.size();
    const std::size_t k = cols.size();
    // Tableau [G | I | b] with b >= 0 after row sign normalization.
    std::vector<RatVec> T(m, rv_zero(k + m + 1));
    for (std::size_t i = 0; i < m; ++i) {
        int flip = target[i] < 0 ? -1 : 1;
        for (std::size_t j = 0; j < k; ++j) T[i][j] = flip * cols[j][i];
        T[i][k + i] = 1;
        T[i][k + m] = flip * target[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = k + i;

    auto reduced_cost = [&](std::size_t j) {
        // cost: 0 on real vars, 1 on artificials
        Rat rc = j >= k ? Rat(1) : Rat(0);
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] >= k) rc -= T[i][j];
        return rc;
    };

    for (;;) {
        // Bland: smallest-index entering column with negative reduced cost.
        std::size_t enter = k + m;
        for (std::size_t j = 0; j < k + m; ++j) {
            bool in_basis = false;
            for (auto b : basis)
                if (b == j) { in_basis = true; break; }
            if (in_basis) continue;
            if (reduced_cost(j) < 0) { enter = j; break; }
        }
        if (enter == k + m) break;  // optimal
        // Ratio test; Bland tie-break on leaving basic variable index.
        std::size_t leave = m;
        Rat best;
        for (std::size_t i = 0; i < m; ++i) {
            if (T[i][enter] <= 0) continue;
            Rat ratio = T[i][k + m] / T[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break;  // unbounded: cannot happen in phase 1
        // Pivot.
        Rat inv = Rat(1) / T[leave][enter];
        for (auto& x : T[leave]) x *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            Rat f = T[i][enter];
            for (std::size_t j = 0; j <= k + m; ++j) T[i][j] -= f * T[leave][j];
        }
        basis[leave] = enter;
    }

    Rat w(0);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= k) w += T[i][k + m];
    if (w != 0) return std::nullopt;

    std::vector<Rat> a(k, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < k) a[basis[i]] = T[i][k + m];
    return a;
}

// Convex-combination variant: additionally sum_j a_j = 1.
inline std::optional<std::vector<Rat>> convex_combination(const std::vector<RatVec>& points,
                                                          const RatVec& target) {
    std::vector<RatVec> lifted;
    lifted.reserve(points.size());
    for (const auto& p : points) {
        RatVec q(p);
        q.push_back(Rat(1));
        lifted.push_back(q);
    }
    RatVec t(target);
    t.push_back(Rat(1));
    return nonneg_combination(lifted, t);
}

}  // namespace liecone
