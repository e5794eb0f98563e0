#pragma once

// Dense exact rational linear algebra; everything is fraction-free safe
// because Rat is arbitrary precision.  Sizes here are tiny (rank <= 16).

#include "liecone/ratvec.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace liecone {

struct Mat {
    std::vector<RatVec> rows;  // all rows same length

    std::size_t nrows() const { return rows.size(); }
    std::size_t ncols() const { return rows.empty() ? 0 : rows[0].size(); }

    static Mat identity(std::size_t n) {
        Mat m;
        m.rows.assign(n, rv_zero(n));
        for (std::size_t i = 0; i < n; ++i) m.rows[i][i] = 1;
        return m;
    }

    RatVec apply(const RatVec& v) const {
        RatVec r(nrows(), Rat(0));
        for (std::size_t i = 0; i < nrows(); ++i) r[i] = rv_dot(rows[i], v);
        return r;
    }

    Mat transpose() const {
        Mat t;
        t.rows.assign(ncols(), rv_zero(nrows()));
        for (std::size_t i = 0; i < nrows(); ++i)
            for (std::size_t j = 0; j < ncols(); ++j) t.rows[j][i] = rows[i][j];
        return t;
    }

    Mat mul(const Mat& other) const {
        Mat r;
        r.rows.assign(nrows(), rv_zero(other.ncols()));
        for (std::size_t i = 0; i < nrows(); ++i)
            for (std::size_t k = 0; k < ncols(); ++k)
                if (rows[i][k] != 0)
                    for (std::size_t j = 0; j < other.ncols(); ++j)
                        r.rows[i][j] += rows[i][k] * other.rows[k][j];
        return r;
    }
};

// In-place Gauss-Jordan to reduced row echelon form; returns pivot columns.
inline std::vector<std::size_t> rref(Mat& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.ncols() && r < m.nrows(); ++c) {
        std::size_t sel = r;
        while (sel < m.nrows() && m.rows[sel][c] == 0) ++sel;
        if (sel == m.nrows()) continue;
        std::swap(m.rows[sel], m.rows[r]);
        Rat inv = Rat(1) / m.rows[r][c];
        for (auto& x : m.rows[r]) x *= inv;
        for (std::size_t i = 0; i < m.nrows(); ++i) {
            if (i == r || m.rows[i][c] == 0) continue;
            Rat f = m.rows[i][c];
            for (std::size_t j = 0; j < m.ncols(); ++j) m.rows[i][j] -= f * m.rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t mat_rank(Mat m) { return rref(m).size(); }

// Basis of {x : Mx = 0}, one vector per free column, deterministic order.
inline std::vector<RatVec> nullspace(Mat m) {
    auto pivots = rref(m);
    std::size_t n = m.ncols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        RatVec v = rv_zero(n);
        v[free] = 1;
        for (std::size_t pi = 0; pi < pivots.size(); ++pi) v[pivots[pi]] = -m.rows[pi][free];
        basis.push_back(v);
    }
    return basis;
}

// One solution of Mx = b, or nullopt if inconsistent.
inline std::optional<RatVec> solve(const Mat& m, const RatVec& b) {
    Mat aug = m;
    for (std::size_t i = 0; i < aug.nrows(); ++i) aug.rows[i].push_back(b[i]);
    auto pivots = rref(aug);
    std::size_t n = m.ncols();
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;  // 0 = 1 row
    RatVec x = rv_zero(n);
    for (std::size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = aug.rows[pi][n];
    return x;
}

inline std::optional<Mat> inverse(const Mat& m) {
    std::size_t n = m.nrows();
    Mat aug = m;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) aug.rows[i].push_back(i == j ? Rat(1) : Rat(0));
    auto pivots = rref(aug);
    if (pivots.size() != n) return std::nullopt;
    Mat inv;
    inv.rows.assign(n, rv_zero(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.rows[i][j] = aug.rows[i][n + j];
    return inv;
}

// Columns-as-generators view: solve sum_j x_j col_j = b.
inline Mat mat_from_columns(const std::vector<RatVec>& cols, std::size_t dim) {
    Mat m;
    m.rows.assign(dim, rv_zero(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) m.rows[i][j] = cols[j][i];
    return m;
}

}  // namespace liecone
