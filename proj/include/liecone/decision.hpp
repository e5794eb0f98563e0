#pragma once

// Admissibility verdicts: a module description restricted to a subgroup is
// admissible exactly when every component of its asymptotic support meets the
// subgroup's momentum cone only at the origin.  Verdicts carry replayable
// certificates, a digest of the input cones, and a three-valued state so
// truncated enumerations never over-claim.

#include "liecone/conecalc.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace liecone {

enum class AdmissibleState { Admissible, NotAdmissible, Provisional };

struct Verdict {
    AdmissibleState state = AdmissibleState::Provisional;
    std::optional<RatVec> witness;                   // common nonzero ray when not admissible
    std::vector<TrivialityCertificate> certificates; // one per support component
    std::string inputs_digest;
    std::vector<std::string> method_tags;
    bool exact = true;
};

namespace detail {

inline std::string fnv1a_hex(const std::vector<std::string>& parts) {
    std::uint64_t h = 1469598103934665603ULL;
    for (const auto& s : parts) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        h ^= 0xff;  // part separator so concatenation boundaries matter
        h *= 1099511628211ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace detail

inline Verdict decide_admissible(const ConeUnion& as_k, const Cone& c, bool exact = true,
                                 std::vector<std::string> method_tags = {}) {
    if (as_k.dim != c.dim)
        throw SpecError("support and momentum cone live in different dimensions");
    for (const auto& comp : as_k.components)
        if (comp.dim != c.dim)
            throw SpecError("support and momentum cone live in different dimensions");

    Verdict v;
    v.exact = exact;
    v.method_tags = std::move(method_tags);

    std::vector<std::string> digest_parts;
    for (const auto& comp : as_k.components)
        digest_parts.push_back(cone_canonical_string(canonical(comp)));
    digest_parts.push_back(cone_canonical_string(canonical(c)));
    v.inputs_digest = detail::fnv1a_hex(digest_parts);

    bool all_trivial = true;
    for (const auto& comp : as_k.components) {
        TrivialityCertificate cert = is_trivial_intersection(comp, c);
        // Independent route: scan for a common ray by linear programming.
        bool lp_trivial = trivial_intersection_lp(comp, c);
        if (cert.trivial != lp_trivial)
            throw std::logic_error("triviality routes disagree: double description vs LP");
        // Replay the certificate and the intersection itself.
        if (!certificate_valid(comp, c, cert))
            throw std::logic_error("triviality certificate failed replay");
        if (cone_is_zero(cone_intersect(comp, c)) != cert.trivial)
            throw std::logic_error("triviality routes disagree: certificate vs intersection");
        if (!cert.trivial) {
            all_trivial = false;
            if (!v.witness) v.witness = cert.witness;
        }
        v.certificates.push_back(std::move(cert));
    }

    // A nonzero common ray refutes admissibility even from an unsaturated
    // (under-approximated) cone; the converse needs exact inputs.
    if (!all_trivial)
        v.state = AdmissibleState::NotAdmissible;
    else
        v.state = exact ? AdmissibleState::Admissible : AdmissibleState::Provisional;
    return v;
}

inline Verdict decide_q_series(const RootDatum& rd, const SubgroupSpec& qcapk,
                               const SubgroupSpec& kprime, const ConeOptions& opts = {}) {
    ConeResult q = c_cone(rd, qcapk, opts);
    ConeResult k = c_cone(rd, kprime, opts);
    ConeUnion as;
    as.dim = rd.amb;
    as.components = {q.cone};
    return decide_admissible(as, k.cone, q.exact && k.exact,
                             {"q-series", "as:" + q.method, "ck:" + k.method});
}

inline Verdict decide_all_irreps(const RootDatum& rd, const SubgroupSpec& m,
                                 const SubgroupSpec& kprime, const ConeOptions& opts = {}) {
    ConeResult mc = c_cone(rd, m, opts);
    ConeResult k = c_cone(rd, kprime, opts);
    ConeUnion as;
    as.dim = rd.amb;
    as.components = {mc.cone};
    return decide_admissible(as, k.cone, mc.exact && k.exact,
                             {"all-irreps", "as:" + mc.method, "ck:" + k.method});
}

inline Verdict decide_module(const RootDatum& rd, const KModuleSpec& x,
                             const SubgroupSpec& kprime, const ConeOptions& opts = {}) {
    SupportResult s = as_support(rd, x, opts);
    ConeResult k = c_cone(rd, kprime, opts);
    return decide_admissible(s.support, k.cone, s.exact && k.exact,
                             {"module", "as:" + s.method, "ck:" + k.method});
}

// For a datum with one-dimensional center: the maximal-torus cone must agree
// with the central-torus cone (computed by two unrelated constructions).
inline bool hermitian_center_check(const RootDatum& rd) {
    if (rd.central_dirs.size() != 1)
        throw SpecError("hermitian center check needs exactly one central direction");
    SubgroupSpec torus;
    torus.kind = SubgroupKind::MaximalTorus;
    SubgroupSpec center;
    center.kind = SubgroupKind::CentralTorus;
    return cone_equal(c_cone(rd, torus).cone, c_cone(rd, center).cone);
}

// ---------------------------------------------------------------------------
// Deterministic JSON rendering (fixed key order, rationals as "p/q" strings,
// no whitespace) so repeated runs emit identical bytes.

namespace detail {

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

inline std::string json_rat_array(const std::vector<Rat>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out.push_back(',');
        out += "\"" + rat_to_string(xs[i]) + "\"";
    }
    return out + "]";
}

inline std::string json_string_array(const std::vector<std::string>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out.push_back(',');
        out += "\"" + json_escape(xs[i]) + "\"";
    }
    return out + "]";
}

inline std::string json_certificate(const TrivialityCertificate& cert) {
    std::string out = "{\"trivial\":";
    out += cert.trivial ? "true" : "false";
    if (cert.trivial) {
        out += ",\"facets\":[";
        for (std::size_t i = 0; i < cert.combined_facets.size(); ++i) {
            if (i) out.push_back(',');
            out += json_rat_array(cert.combined_facets[i]);
        }
        out += "]";
    } else {
        out += ",\"witness\":" + json_rat_array(cert.witness);
        out += ",\"coefficients_a\":" + json_rat_array(cert.coeffs_a);
        out += ",\"coefficients_b\":" + json_rat_array(cert.coeffs_b);
    }
    return out + "}";
}

}  // namespace detail

inline std::string verdict_json(const Verdict& v) {
    std::string out = "{\"admissible\":";
    out += v.state == AdmissibleState::Admissible ? "true" : "false";
    out += ",\"provisional\":";
    out += v.state == AdmissibleState::Provisional ? "true" : "false";
    if (v.witness) out += ",\"witness\":" + detail::json_rat_array(*v.witness);
    out += ",\"certificates\":[";
    for (std::size_t i = 0; i < v.certificates.size(); ++i) {
        if (i) out.push_back(',');
        out += detail::json_certificate(v.certificates[i]);
    }
    out += "]";
    out += ",\"inputs_digest\":\"" + v.inputs_digest + "\"";
    out += ",\"method_tags\":" + detail::json_string_array(v.method_tags);
    return out + "}";
}

inline int verdict_exit_code(const Verdict& v) {
    switch (v.state) {
        case AdmissibleState::Admissible: return 0;
        case AdmissibleState::NotAdmissible: return 1;
        case AdmissibleState::Provisional: return 2;
    }
    return 3;
}

}  // namespace liecone
