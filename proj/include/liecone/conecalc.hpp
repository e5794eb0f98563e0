#pragma once

// The two cones of the admissibility criterion: the momentum cone of a
// subgroup (by chamber geometry when the subgroup is toral or the fixed
// points of an involution, by spherical-monoid enumeration otherwise), and
// the asymptotic support of a module description.  Ships the named subgroup
// presets and a small catalog of module descriptions.

#include "liecone/branching.hpp"
#include "liecone/involution.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace liecone {

enum class SubgroupKind { MaximalTorus, DerivedMaximalTorus, CentralTorus, SymmetricPair, General };

struct SubgroupSpec {
    SubgroupKind kind = SubgroupKind::MaximalTorus;
    std::string preset;                  // non-empty when built from a named preset
    std::optional<Mat> sigma;            // SymmetricPair payload
    // General payload; for the other kinds an optional equivalent embedding
    // used by the enumeration cross-check.
    std::optional<Embedding> embedding;
};

struct ConeOptions {
    long long bound = 6;
    unsigned jobs = 1;
};

struct ConeResult {
    Cone cone;
    std::string method;
    bool exact = true;       // false only for an unsaturated enumeration
    SphericalMonoid monoid;  // populated on the enumeration route
};

// ---------------------------------------------------------------------------
// A torus with the same ambient space and weight lattice as the given datum:
// the target datum for restriction to the maximal torus.

inline RootDatum torus_quotient_datum(const RootDatum& rd) {
    RootDatum t;
    t.type_str = "torus(" + rd.type_str + ")";
    t.lattice = rd.lattice;
    t.amb = rd.amb;
    t.scale = rd.scale;
    t.factors = {Factor{'T', static_cast<int>(rd.amb), 0, rd.amb}};
    t.lattice_basis = rd.lattice_basis;

    // Orthogonal directions spanning the lattice span (exact Gram-Schmidt
    // over a reduced basis), kept primitive and scaled.
    std::vector<RatVec> span;
    for (const auto& v : rd.lattice_basis) span.push_back(rd.unscale(v));
    Mat m{std::move(span)};
    auto pivots = rref(m);
    std::vector<RatVec> ortho;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        RatVec v = m.rows[i];
        for (const auto& u : ortho) v = rv_sub(v, rv_scale(u, rv_dot(v, u) / rv_dot(u, u)));
        ortho.push_back(std::move(v));
    }
    for (const auto& u : ortho) t.central_dirs.push_back(t.rescale(rv_primitive(u)));
    for (const auto& z : t.central_dirs) {
        Rat zz(iv_dot(z, z));
        Rat g(0);
        for (const auto& v : t.lattice_basis) {
            Rat s = Rat(iv_dot(v, z)) / zz;
            if (s == 0) continue;
            if (g == 0) {
                g = boost::multiprecision::abs(s);
            } else {
                Int p1 = rat_num(g), q1 = rat_den(g);
                Int p2 = boost::multiprecision::abs(rat_num(s)), q2 = rat_den(s);
                g = Rat(boost::multiprecision::gcd(p1 * q2, p2 * q1), q1 * q2);
            }
        }
        t.central_step.push_back(g);
    }
    t.rho = IVec(rd.amb, 0);
    return t;
}

// ---------------------------------------------------------------------------
// Named subgroup presets.

inline std::vector<std::string> subgroup_preset_names() {
    return {"torus",   "derived-torus",        "center",
            "trivial", "diagonal",             "so(2n-1)-in-so(2n)",
            "u(n)-in-so(2n)",                  "spin7-triality-in-so8"};
}

namespace detail {

inline Mat zero_matrix(std::size_t rows, std::size_t cols) {
    Mat m;
    m.rows.assign(rows, rv_zero(cols));
    return m;
}

inline void require_d_factors(const RootDatum& rd, const std::string& preset) {
    if (!rd.semisimple() || rd.factors.empty())
        throw SpecError("preset '" + preset + "' needs a semisimple product of D-type factors");
    for (const auto& f : rd.factors)
        if (f.family != 'D')
            throw SpecError("preset '" + preset + "' needs a semisimple product of D-type factors");
}

inline Embedding trivial_embedding(const RootDatum& rd) {
    return make_embedding(rd, make_root_datum("T1"), zero_matrix(1, rd.amb));
}

}  // namespace detail

inline SubgroupSpec subgroup_preset(const RootDatum& rd, const std::string& name) {
    SubgroupSpec out;
    out.preset = name;

    if (name == "torus") {
        out.kind = SubgroupKind::MaximalTorus;
        out.embedding = make_embedding(rd, torus_quotient_datum(rd), Mat::identity(rd.amb));
        return out;
    }
    if (name == "derived-torus") {
        out.kind = SubgroupKind::DerivedMaximalTorus;
        if (rd.simple_roots.empty()) {
            out.embedding = detail::trivial_embedding(rd);
        } else {
            Mat m;
            for (const auto& a : rd.simple_roots) {
                RatVec ar = rd.unscale(a);
                m.rows.push_back(rv_scale(ar, Rat(2) / rv_dot(ar, ar)));
            }
            RootDatum tgt = make_root_datum("T" + std::to_string(m.rows.size()));
            out.embedding = make_embedding(rd, std::move(tgt), std::move(m));
        }
        return out;
    }
    if (name == "center") {
        out.kind = SubgroupKind::CentralTorus;
        if (rd.central_dirs.empty()) {
            out.embedding = detail::trivial_embedding(rd);
        } else {
            Mat m;
            for (std::size_t j = 0; j < rd.central_dirs.size(); ++j) {
                RatVec z = rd.unscale(rd.central_dirs[j]);
                if (rd.central_step[j] == 0)
                    m.rows.push_back(rv_zero(rd.amb));
                else
                    m.rows.push_back(rv_scale(z, Rat(1) / (rv_dot(z, z) * rd.central_step[j])));
            }
            RootDatum tgt = make_root_datum("T" + std::to_string(m.rows.size()));
            out.embedding = make_embedding(rd, std::move(tgt), std::move(m));
        }
        return out;
    }
    if (name == "trivial") {
        out.kind = SubgroupKind::General;
        out.embedding = detail::trivial_embedding(rd);
        return out;
    }
    if (name == "diagonal") {
        if (rd.factors.size() != 2 || !rd.semisimple() ||
            rd.factors[0].family != rd.factors[1].family ||
            rd.factors[0].rank != rd.factors[1].rank)
            throw SpecError("preset 'diagonal' needs a product of two equal semisimple factors");
        std::size_t h = rd.factors[0].amb;
        Mat sig = detail::zero_matrix(rd.amb, rd.amb);
        for (std::size_t i = 0; i < h; ++i) {
            sig.rows[i][h + i] = 1;
            sig.rows[h + i][i] = 1;
        }
        out.kind = SubgroupKind::SymmetricPair;
        out.sigma = std::move(sig);
        std::string ftype = std::string(1, rd.factors[0].family) + std::to_string(rd.factors[0].rank);
        RootDatum tgt = make_root_datum(ftype, rd.lattice);
        Mat m = detail::zero_matrix(h, rd.amb);
        for (std::size_t i = 0; i < h; ++i) {
            m.rows[i][i] = 1;
            m.rows[i][h + i] = 1;
        }
        out.embedding = make_embedding(rd, std::move(tgt), std::move(m));
        return out;
    }
    if (name == "so(2n-1)-in-so(2n)") {
        detail::require_d_factors(rd, name);
        Mat sig = Mat::identity(rd.amb);
        for (const auto& f : rd.factors) sig.rows[f.offset + f.amb - 1][f.offset + f.amb - 1] = -1;
        out.kind = SubgroupKind::SymmetricPair;
        out.sigma = std::move(sig);
        std::string ttype;
        std::size_t trows = 0;
        for (const auto& f : rd.factors) {
            if (!ttype.empty()) ttype += 'x';
            ttype += "B" + std::to_string(f.rank - 1);
            trows += f.amb - 1;
        }
        Mat m = detail::zero_matrix(trows, rd.amb);
        std::size_t r = 0;
        for (const auto& f : rd.factors)
            for (std::size_t i = 0; i + 1 < f.amb; ++i, ++r) m.rows[r][f.offset + i] = 1;
        out.embedding = make_embedding(rd, make_root_datum(ttype), std::move(m));
        return out;
    }
    if (name == "u(n)-in-so(2n)") {
        detail::require_d_factors(rd, name);
        Mat sig = detail::zero_matrix(rd.amb, rd.amb);
        for (const auto& f : rd.factors) {
            std::size_t n = f.amb;
            for (std::size_t i = 0; i + 1 < n; i += 2) {
                sig.rows[f.offset + i][f.offset + i + 1] = -1;
                sig.rows[f.offset + i + 1][f.offset + i] = -1;
            }
            if (n % 2 == 1) sig.rows[f.offset + n - 1][f.offset + n - 1] = 1;
        }
        out.kind = SubgroupKind::SymmetricPair;
        out.sigma = std::move(sig);
        std::string ttype;
        for (const auto& f : rd.factors) {
            if (!ttype.empty()) ttype += 'x';
            ttype += "U" + std::to_string(f.rank);
        }
        try {
            out.embedding = make_embedding(rd, make_root_datum(ttype), Mat::identity(rd.amb));
        } catch (const SpecError&) {
            // Simply connected source lattices do not restrict onto the
            // unitary weight lattice; the chamber route still applies.
        }
        return out;
    }
    if (name == "spin7-triality-in-so8") {
        if (rd.factors.size() != 2 || rd.factors[0].family != 'D' || rd.factors[0].rank != 4 ||
            rd.factors[1].family != 'D' || rd.factors[1].rank != 4 || !rd.semisimple())
            throw SpecError("preset 'spin7-triality-in-so8' needs the group of two D4 factors");
        // Columns of the two blocks: images of the target coordinate
        // functionals under the two triality-related isometries.
        const Rat h(1, 2);
        std::vector<RatVec> F = {{h, h, h, h}, {h, h, -h, -h}, {h, -h, h, -h}, {h, -h, -h, h}};
        std::vector<RatVec> G = {{h, h, h, -h}, {h, h, -h, h}, {h, -h, h, h}, {h, -h, -h, -h}};
        Mat m = detail::zero_matrix(4, 8);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                m.rows[i][j] = F[j][i];
                m.rows[i][4 + j] = G[j][i];
            }
        out.kind = SubgroupKind::General;
        out.embedding = make_embedding(rd, make_root_datum("D4"), std::move(m));
        return out;
    }
    throw SpecError("unknown subgroup preset '" + name + "'");
}

// ---------------------------------------------------------------------------
// Momentum cone of a subgroup.

inline ConeResult c_cone(const RootDatum& rd, const SubgroupSpec& sub, const ConeOptions& opts = {}) {
    ConeResult out;
    switch (sub.kind) {
        case SubgroupKind::MaximalTorus: {
            std::vector<RatVec> facets;
            for (const auto& a : rd.simple_roots) facets.push_back(rd.unscale(a));
            for (const auto& z : rd.central_dirs) {
                RatVec v = rd.unscale(z);
                facets.push_back(v);
                facets.push_back(rv_neg(v));
            }
            for (const auto& c : detail::weight_span_complement(rd)) {
                facets.push_back(c);
                facets.push_back(rv_neg(c));
            }
            out.cone = dd_convert(cone_from_facets(rd.amb, std::move(facets)));
            out.method = "maximal-torus-chamber";
            return out;
        }
        case SubgroupKind::DerivedMaximalTorus: {
            out.cone = dominant_chamber(rd);
            out.method = "derived-torus-chamber";
            return out;
        }
        case SubgroupKind::CentralTorus: {
            std::vector<RatVec> gens;
            for (const auto& w : rd.fund_weights) {
                RatVec v = rd.unscale(w);
                gens.push_back(v);
                gens.push_back(rv_neg(v));
            }
            Cone span = cone_from_generators(rd.amb, std::move(gens));
            out.cone = cone_intersect(dominant_chamber(rd), span);
            out.method = "central-torus-slice";
            return out;
        }
        case SubgroupKind::SymmetricPair: {
            if (!sub.sigma) throw SpecError("symmetric-pair subgroup needs an involution matrix");
            InvolutionData inv = make_involution(rd, *sub.sigma);
            out.cone = restricted_chamber(rd, inv).image_chamber;
            out.method = "symmetric-pair-chamber";
            return out;
        }
        case SubgroupKind::General: {
            if (!sub.embedding) throw SpecError("general subgroup needs a restriction matrix");
            const Embedding& e = *sub.embedding;
            if (e.source.type_str != rd.type_str || e.source.lattice != rd.lattice ||
                e.source.amb != rd.amb)
                throw SpecError("subgroup embedding is for a different ambient group");
            out.monoid = spherical_monoid(e, opts.bound, opts.jobs);
            out.cone = monoid_limit_cone(rd, out.monoid);
            out.method = "spherical-enumeration";
            out.exact = out.monoid.saturated;
            return out;
        }
    }
    throw std::logic_error("unreachable subgroup kind");
}

// The enumeration route for a spec whose primary route is chamber-based;
// used to cross-check the two methods against each other.
inline ConeResult c_cone_enumerated(const RootDatum& rd, const SubgroupSpec& sub,
                                    const ConeOptions& opts = {}) {
    if (!sub.embedding)
        throw SpecError("subgroup spec carries no embedding for the enumeration route");
    SubgroupSpec gen;
    gen.kind = SubgroupKind::General;
    gen.preset = sub.preset;
    gen.embedding = sub.embedding;
    return c_cone(rd, gen, opts);
}

// ---------------------------------------------------------------------------
// Asymptotic support of a module description.

enum class ModuleKind { FiniteDimensional, MonoidSupport, OrbitComponents, ParabolicInduced };

struct KModuleSpec {
    ModuleKind kind = ModuleKind::FiniteDimensional;
    std::vector<RatVec> weights;                  // MonoidSupport generators
    std::vector<std::vector<RatVec>> components;  // OrbitComponents generator lists
    std::optional<SubgroupSpec> qcapk;            // ParabolicInduced payload
};

struct SupportResult {
    ConeUnion support;
    std::string method;
    bool exact = true;
};

namespace detail {

inline void validate_support_weights(const RootDatum& rd, const std::vector<RatVec>& ws) {
    if (ws.empty()) throw SpecError("a support description needs at least one weight");
    for (const auto& w : ws) {
        if (w.size() != rd.amb)
            throw SpecError("support weight " + rv_to_string(w) + " has the wrong dimension");
        if (!rd_in_dominant_lattice(rd, w))
            throw SpecError("support weight " + rv_to_string(w) +
                            " is not a dominant lattice weight");
    }
}

}  // namespace detail

inline SupportResult as_support(const RootDatum& rd, const KModuleSpec& X,
                                const ConeOptions& opts = {}) {
    SupportResult out;
    out.support.dim = rd.amb;
    switch (X.kind) {
        case ModuleKind::FiniteDimensional: {
            out.support.components = {limit_cone({SupportKind::Finite, rd.amb, {}})};
            out.method = "finite-dimensional";
            return out;
        }
        case ModuleKind::MonoidSupport: {
            detail::validate_support_weights(rd, X.weights);
            out.support.components = {limit_cone({SupportKind::Monoid, rd.amb, X.weights})};
            out.method = "monoid-support";
            return out;
        }
        case ModuleKind::OrbitComponents: {
            if (X.components.empty())
                throw SpecError("an orbit-component description needs at least one component");
            for (const auto& s : X.components) {
                detail::validate_support_weights(rd, s);
                out.support.components.push_back(limit_cone({SupportKind::Monoid, rd.amb, s}));
            }
            out.method = "orbit-components";
            return out;
        }
        case ModuleKind::ParabolicInduced: {
            if (!X.qcapk) throw SpecError("a parabolic description needs a subgroup section");
            ConeResult c = c_cone(rd, *X.qcapk, opts);
            out.support.components = {c.cone};
            out.method = "parabolic-induction/" + c.method;
            out.exact = c.exact;
            return out;
        }
    }
    throw std::logic_error("unreachable module kind");
}

// ---------------------------------------------------------------------------
// Built-in catalog of module descriptions, instantiated per root datum.

struct CatalogEntry {
    std::string name;
    KModuleSpec module;
    std::string note;
};

inline std::vector<CatalogEntry> module_catalog(const RootDatum& rd, bool corrupt = false) {
    // Smallest dominant lattice vector on each extreme ray of the chamber.
    auto lattice_ray = [&](const IVec& w) -> std::optional<RatVec> {
        RatVec v = rv_primitive(rd.unscale(w));
        for (int k = 1; k <= 8; ++k) {
            RatVec c = rv_scale(v, Rat(k));
            if (rd_in_dominant_lattice(rd, c)) return c;
        }
        return std::nullopt;
    };

    std::vector<CatalogEntry> out;
    out.push_back({"finite-dimensional",
                   {ModuleKind::FiniteDimensional, {}, {}, std::nullopt},
                   "any finite-dimensional module; support cone is the origin"});

    std::vector<RatVec> rays;
    for (const auto& w : rd.fund_weights)
        if (auto c = lattice_ray(w)) rays.push_back(*c);
    for (std::size_t j = 0; j < rd.central_dirs.size(); ++j) {
        if (rd.central_step[j] == 0) continue;
        if (auto c = lattice_ray(rd.central_dirs[j])) {
            rays.push_back(*c);
            rays.push_back(rv_neg(*c));
        }
    }
    if (corrupt && !rays.empty())  // negative control for the golden suite
        out.front().module = {ModuleKind::MonoidSupport, {rays.front()}, {}, std::nullopt};
    if (!rays.empty()) {
        out.push_back({"full-support",
                       {ModuleKind::MonoidSupport, rays, {}, std::nullopt},
                       "support monoid spanning every chamber ray the lattice meets"});
        out.push_back({"first-fundamental-ray",
                       {ModuleKind::MonoidSupport, {rays.front()}, {}, std::nullopt},
                       "support along the first chamber ray"});
        if (rays.size() >= 2)
            out.push_back({"two-orbit-union",
                           {ModuleKind::OrbitComponents,
                            {},
                            {{rays.front()}, {rays.back()}},
                            std::nullopt},
                           "two orbit closures: first and last chamber rays"});
    }
    KModuleSpec par;
    par.kind = ModuleKind::ParabolicInduced;
    par.qcapk = SubgroupSpec{SubgroupKind::DerivedMaximalTorus, "derived-torus", std::nullopt,
                             std::nullopt};
    out.push_back({"parabolic-derived-torus", std::move(par),
                   "induced from a parabolic whose compact Levi part is the derived torus"});
    return out;
}

// Root data exercised by the golden suite and the catalog checks.
inline std::vector<std::string> shipped_semisimple_types() {
    return {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "D2", "D3", "D4", "A1xA1", "D2xD2", "D4xD4"};
}

struct SymmetricPairCase {
    std::string type;
    LatticeKind lattice;
    std::string preset;
};

// Symmetric-pair presets shipped for the method-coherence suite (rank <= 4).
inline std::vector<SymmetricPairCase> shipped_symmetric_pairs() {
    return {{"A1xA1", LatticeKind::Weight, "diagonal"},
            {"A2xA2", LatticeKind::Weight, "diagonal"},
            {"D2", LatticeKind::Integral, "so(2n-1)-in-so(2n)"},
            {"D3", LatticeKind::Integral, "so(2n-1)-in-so(2n)"},
            {"D4", LatticeKind::Integral, "so(2n-1)-in-so(2n)"},
            {"D2", LatticeKind::Integral, "u(n)-in-so(2n)"},
            {"D3", LatticeKind::Integral, "u(n)-in-so(2n)"},
            {"D4", LatticeKind::Integral, "u(n)-in-so(2n)"}};
}

}  // namespace liecone
