#pragma once

// A closed subgroup embedding seen through its effect on weights: a rational
// matrix restricting source-group weight coordinates to target-subgroup
// weight coordinates (the transpose of the Cartan-subalgebra inclusion).

#include "liecone/freudenthal.hpp"
#include "liecone/rootdatum.hpp"

#include <optional>
#include <utility>

namespace liecone {

struct Embedding {
    RootDatum source;  // the big group K
    RootDatum target;  // the subgroup K'
    Mat matrix;        // target.amb x source.amb, standard coordinates

    // Integer fast path on scaled vectors: push(w) = push_num * w / push_den.
    std::vector<IVec> push_num;
    long long push_den = 1;
    // Inverse fast path when the matrix is square and invertible.
    std::vector<IVec> inv_num;
    long long inv_den = 0;  // zero when unavailable
};

// Scaled source-lattice vector -> scaled target vector.
inline IVec push_weight(const Embedding& e, const IVec& w) {
    IVec out(e.target.amb, 0);
    for (std::size_t i = 0; i < e.target.amb; ++i) {
        long long num = iv_dot(e.push_num[i], w);
        if (num % e.push_den != 0)
            throw SpecError("restriction matrix is not lattice-compatible at weight " +
                            rv_to_string(e.source.unscale(w)));
        out[i] = num / e.push_den;
    }
    return out;
}

// Scaled target vector -> scaled source vector, when the matrix is square and
// invertible and the preimage lies in the source's 1/scale lattice.
inline std::optional<IVec> pull_weight(const Embedding& e, const IVec& w) {
    if (e.inv_den == 0) return std::nullopt;
    IVec out(e.source.amb, 0);
    for (std::size_t i = 0; i < e.source.amb; ++i) {
        long long num = iv_dot(e.inv_num[i], w);
        if (num % e.inv_den != 0) return std::nullopt;
        out[i] = num / e.inv_den;
    }
    return out;
}

inline Embedding make_embedding(RootDatum source, RootDatum target, Mat matrix) {
    if (matrix.rows.size() != target.amb)
        throw SpecError("restriction matrix row count must equal the subgroup's coordinate count");
    for (const auto& row : matrix.rows)
        if (row.size() != source.amb)
            throw SpecError("restriction matrix column count must equal the group's coordinate count");

    Embedding e{std::move(source), std::move(target), std::move(matrix), {}, 1, {}, 0};

    // Integerized pushforward on scaled coordinates:
    //   push(w_scaled_src) = (tgt.scale * M / src.scale) * w_scaled_src
    Int den = 1;
    std::vector<RatVec> rows(e.target.amb);
    for (std::size_t i = 0; i < e.target.amb; ++i) {
        rows[i] = rv_scale(e.matrix.rows[i], Rat(e.target.scale, e.source.scale));
        for (const auto& x : rows[i]) den = boost::multiprecision::lcm(den, rat_den(x));
    }
    e.push_den = static_cast<long long>(den);
    e.push_num.assign(e.target.amb, IVec(e.source.amb, 0));
    for (std::size_t i = 0; i < e.target.amb; ++i)
        for (std::size_t j = 0; j < e.source.amb; ++j)
            e.push_num[i][j] = static_cast<long long>(rat_num(rows[i][j] * Rat(den)));

    // Lattice compatibility: the source lattice basis must land in the
    // target lattice.
    for (const auto& v : e.source.lattice_basis) {
        RatVec img = e.matrix.apply(e.source.unscale(v));
        if (!rd_in_lattice(e.target, img))
            throw SpecError("restriction matrix is not lattice-compatible: image of " +
                            rv_to_string(e.source.unscale(v)) + " is " + rv_to_string(img));
    }

    if (e.source.amb == e.target.amb) {
        if (auto inv = inverse(e.matrix)) {
            Int iden = 1;
            std::vector<RatVec> irows(e.source.amb);
            for (std::size_t i = 0; i < e.source.amb; ++i) {
                irows[i] = rv_scale(inv->rows[i], Rat(e.source.scale, e.target.scale));
                for (const auto& x : irows[i]) iden = boost::multiprecision::lcm(iden, rat_den(x));
            }
            e.inv_den = static_cast<long long>(iden);
            e.inv_num.assign(e.source.amb, IVec(e.target.amb, 0));
            for (std::size_t i = 0; i < e.source.amb; ++i)
                for (std::size_t j = 0; j < e.target.amb; ++j)
                    e.inv_num[i][j] = static_cast<long long>(rat_num(irows[i][j] * Rat(iden)));
        }
    }
    return e;
}

inline Embedding identity_embedding(const RootDatum& rd) {
    return make_embedding(rd, rd, Mat::identity(rd.amb));
}

}  // namespace liecone
