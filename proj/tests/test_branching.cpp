#include <catch2/catch_amalgamated.hpp>

#include "liecone/branching.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>

using namespace liecone;

namespace {

RatVec rv(std::initializer_list<long long> xs) {
    RatVec v;
    for (auto x : xs) v.push_back(Rat(x));
    return v;
}

Mat mat(std::initializer_list<std::initializer_list<long long>> rows) {
    Mat m;
    for (auto& r : rows) m.rows.push_back(rv(r));
    return m;
}

// Highest weight from fundamental-weight coefficients (plus nothing central).
IVec hw_fund(const RootDatum& rd, const std::vector<long long>& coeffs) {
    RatVec x = rv_zero(rd.amb);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        x = rv_add(x, rv_scale(rd.unscale(rd.fund_weights[i]), Rat(coeffs[i])));
    return rd.rescale(x);
}

long long mult_of(const BranchingResult& br, const IVec& hw) {
    auto it = br.find(hw);
    return it == br.end() ? 0 : it->second;
}

}  // namespace

TEST_CASE("identity restriction returns the representation itself") {
    for (const char* type : {"A1", "A2", "B2", "D3"}) {
        RootDatum rd = make_root_datum(type);
        Embedding e = identity_embedding(rd);
        for (long long a = 0; a <= 2; ++a)
            for (long long b = 0; b <= 2; ++b) {
                std::vector<long long> c(rd.rank(), 0);
                c[0] = a;
                c[c.size() - 1] = b;
                IVec lam = hw_fund(rd, c);
                BranchingResult br = branch(e, lam);
                REQUIRE(br.size() == 1);
                REQUIRE(br.begin()->first == lam);
                REQUIRE(br.begin()->second == 1);
            }
    }
}

TEST_CASE("diagonal restriction reproduces the Clebsch-Gordan rule") {
    RootDatum src = make_root_datum("A1xA1");
    RootDatum tgt = make_root_datum("A1");
    Embedding e = make_embedding(src, tgt, mat({{1, 1}}));
    for (long long a = 0; a <= 6; ++a)
        for (long long b = 0; b <= 6; ++b) {
            IVec lam = hw_fund(src, {a, b});
            BranchingResult br = branch(e, lam);
            // V_a (x) V_b = V_{a+b} + V_{a+b-2} + ... + V_{|a-b|}, each once.
            REQUIRE(br.size() == static_cast<std::size_t>(std::min(a, b) + 1));
            for (long long c = a + b; c >= std::llabs(a - b); c -= 2)
                REQUIRE(mult_of(br, hw_fund(tgt, {c})) == 1);
        }
}

TEST_CASE("principal three-dimensional subgroup splits the eight-dimensional adjoint") {
    RootDatum src = make_root_datum("A2");
    RootDatum tgt = make_root_datum("A1");
    // Weight functional of the principal sl2: evaluation against diag(2,0,-2).
    Embedding e = make_embedding(src, tgt, mat({{2, 0, -2}}));
    BranchingResult br = branch(e, hw_fund(src, {1, 1}));
    REQUIRE(br.size() == 2);
    REQUIRE(mult_of(br, hw_fund(tgt, {2})) == 1);
    REQUIRE(mult_of(br, hw_fund(tgt, {4})) == 1);
}

TEST_CASE("odd orthogonal subgroup of the even orthogonal group") {
    // Restriction along the first n-1 coordinates.
    RootDatum src = make_root_datum("D3");
    RootDatum tgt = make_root_datum("B2");
    Embedding e = make_embedding(src, tgt, mat({{1, 0, 0}, {0, 1, 0}}));
    // Vector representation (highest weight e1, dim 6) -> vector (dim 5) + trivial.
    IVec vec6 = src.rescale(rv({1, 0, 0}));
    BranchingResult br = branch(e, vec6);
    REQUIRE(br.size() == 2);
    REQUIRE(mult_of(br, tgt.rescale(rv({1, 0}))) == 1);
    REQUIRE(mult_of(br, IVec(tgt.amb, 0)) == 1);
}

TEST_CASE("half-spin representations restrict to the spin representation") {
    RootDatum src = make_root_datum("D3");
    RootDatum tgt = make_root_datum("B2");
    Embedding e = make_embedding(src, tgt, mat({{1, 0, 0}, {0, 1, 0}}));
    RatVec spin_plus = {Rat(1, 2), Rat(1, 2), Rat(1, 2)};
    RatVec spin_minus = {Rat(1, 2), Rat(1, 2), Rat(-1, 2)};
    IVec spin_b2 = tgt.rescale({Rat(1, 2), Rat(1, 2)});
    for (const RatVec& s : {spin_plus, spin_minus}) {
        BranchingResult br = branch(e, src.rescale(s));
        REQUIRE(br.size() == 1);
        REQUIRE(mult_of(br, spin_b2) == 1);
    }
}

TEST_CASE("torus restriction returns the full weight map") {
    RootDatum src = make_root_datum("A1");
    RootDatum tgt = make_root_datum("T1");
    Embedding e = make_embedding(src, tgt, mat({{1}}));
    BranchingResult br = branch(e, hw_fund(src, {2}));
    REQUIRE(br.size() == 3);
    REQUIRE(mult_of(br, tgt.rescale(rv({2}))) == 1);
    REQUIRE(mult_of(br, tgt.rescale(rv({0}))) == 1);
    REQUIRE(mult_of(br, tgt.rescale(rv({-2}))) == 1);
}

TEST_CASE("restriction conserves total dimension") {
    std::mt19937 rng(20260816);
    struct Case {
        Embedding e;
        std::size_t nfund;
    };
    std::vector<Case> cases;
    cases.push_back({make_embedding(make_root_datum("A1xA1"), make_root_datum("A1"), mat({{1, 1}})), 2});
    cases.push_back({make_embedding(make_root_datum("A2"), make_root_datum("A1"), mat({{2, 0, -2}})), 2});
    cases.push_back({make_embedding(make_root_datum("D3"), make_root_datum("B2"),
                                    mat({{1, 0, 0}, {0, 1, 0}})), 3});
    cases.push_back({make_embedding(make_root_datum("D2", LatticeKind::Integral), make_root_datum("U2"),
                                    mat({{1, 0}, {0, 1}})), 2});
    cases.push_back({make_embedding(make_root_datum("B2"), make_root_datum("A1xA1"),
                                    mat({{1, -1}, {1, 1}})), 2});
    for (auto& c : cases) {
        for (int trial = 0; trial < 6; ++trial) {
            std::vector<long long> coeffs(c.nfund);
            for (auto& x : coeffs) x = rng() % 3;
            IVec lam = hw_fund(c.e.source, coeffs);
            Int total = weyl_dimension(c.e.source, lam);
            if (total > 20000) continue;
            BranchingResult br = branch(c.e, lam);
            Int sum = 0;
            if (c.e.target.simple_roots.empty()) {
                for (const auto& [hw, m] : br) sum += m;
            } else {
                for (const auto& [hw, m] : br) sum += Int(m) * weyl_dimension(c.e.target, hw);
            }
            REQUIRE(sum == total);
        }
    }
}

TEST_CASE("invariant dimension matches the trivial-type count of the full decomposition") {
    std::vector<Embedding> es;
    es.push_back(make_embedding(make_root_datum("A1xA1"), make_root_datum("A1"), mat({{1, 1}})));
    es.push_back(make_embedding(make_root_datum("A2"), make_root_datum("A1"), mat({{2, 0, -2}})));
    es.push_back(make_embedding(make_root_datum("D3"), make_root_datum("B2"),
                                mat({{1, 0, 0}, {0, 1, 0}})));
    es.push_back(make_embedding(make_root_datum("A1"), make_root_datum("T1"), mat({{1}})));
    es.push_back(make_embedding(make_root_datum("A2"), make_root_datum("T2"),
                                mat({{1, -1, 0}, {0, 1, -1}})));
    std::mt19937 rng(7);
    for (auto& e : es) {
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<long long> coeffs(e.source.rank());
            for (auto& x : coeffs) x = rng() % 3;
            IVec lam = hw_fund(e.source, coeffs);
            BranchingResult br = branch(e, lam);
            REQUIRE(invariant_dimension(e, lam) == mult_of(br, IVec(e.target.amb, 0)));
        }
    }
}

TEST_CASE("invariant dimension basic values") {
    Embedding diag = make_embedding(make_root_datum("A1xA1"), make_root_datum("A1"), mat({{1, 1}}));
    for (long long n = 0; n <= 4; ++n)
        for (long long m = 0; m <= 4; ++m)
            REQUIRE(invariant_dimension(diag, hw_fund(diag.source, {n, m})) == (n == m ? 1 : 0));

    // Zero-weight multiplicity of the adjoint representation equals the rank.
    Embedding torus = make_embedding(make_root_datum("A2"), make_root_datum("T2"),
                                     mat({{1, -1, 0}, {0, 1, -1}}));
    REQUIRE(invariant_dimension(torus, hw_fund(torus.source, {1, 1})) == 2);
    REQUIRE(invariant_dimension(torus, hw_fund(torus.source, {0, 0})) == 1);
    REQUIRE(invariant_dimension(torus, hw_fund(torus.source, {1, 0})) == 0);
}

TEST_CASE("spherical monoid of a torus inside the rank-one group") {
    Embedding e = make_embedding(make_root_datum("A1"), make_root_datum("T1"), mat({{1}}));
    SphericalMonoid sm = spherical_monoid(e, 4);
    REQUIRE(sm.elements.size() == 3);  // 0, 2, 4 (even highest weights)
    REQUIRE(sm.generators.size() == 1);
    REQUIRE(sm.generators[0] == hw_fund(e.source, {2}));
    REQUIRE(sm.saturated);
}

TEST_CASE("spherical monoid of the odd orthogonal subgroup is the first-coordinate ray") {
    Embedding e = make_embedding(make_root_datum("D2"), make_root_datum("B1"), mat({{1, 0}}));
    SphericalMonoid sm = spherical_monoid(e, 4);
    REQUIRE(sm.generators.size() == 1);
    REQUIRE(sm.generators[0] == e.source.rescale(rv({1, 0})));
    REQUIRE(sm.saturated);

    Embedding e3 = make_embedding(make_root_datum("D3"), make_root_datum("B2"),
                                  mat({{1, 0, 0}, {0, 1, 0}}));
    SphericalMonoid sm3 = spherical_monoid(e3, 4);
    REQUIRE(sm3.generators.size() == 1);
    REQUIRE(sm3.generators[0] == e3.source.rescale(rv({1, 0, 0})));
    REQUIRE(sm3.saturated);
}

TEST_CASE("spherical monoid of the diagonal subgroup is the equal-pairs ray") {
    Embedding e = make_embedding(make_root_datum("A1xA1"), make_root_datum("A1"), mat({{1, 1}}));
    SphericalMonoid sm = spherical_monoid(e, 6);
    REQUIRE(sm.generators.size() == 1);
    REQUIRE(sm.generators[0] == hw_fund(e.source, {1, 1}));
    REQUIRE(sm.saturated);
    // Elements are exactly the diagonal pairs up to the bound.
    REQUIRE(sm.elements.size() == 4);  // (0,0), (1,1), (2,2), (3,3)
}

TEST_CASE("spherical monoid is closed under addition below the bound") {
    std::vector<Embedding> es;
    es.push_back(make_embedding(make_root_datum("A1xA1"), make_root_datum("A1"), mat({{1, 1}})));
    es.push_back(make_embedding(make_root_datum("D2"), make_root_datum("B1"), mat({{1, 0}})));
    es.push_back(make_embedding(make_root_datum("A1"), make_root_datum("T1"), mat({{1}})));
    for (auto& e : es) {
        long long bound = 6;
        SphericalMonoid sm = spherical_monoid(e, bound);
        std::set<IVec> found(sm.elements.begin(), sm.elements.end());
        for (const auto& a : sm.elements)
            for (const auto& b : sm.elements) {
                IVec s = iv_add(a, b);
                if (rd_height(e.source, s) <= bound) REQUIRE(found.count(s) == 1);
            }
    }
}

TEST_CASE("parallel monoid enumeration is deterministic") {
    Embedding e = make_embedding(make_root_datum("D3"), make_root_datum("B2"),
                                 mat({{1, 0, 0}, {0, 1, 0}}));
    SphericalMonoid a = spherical_monoid(e, 4, 1);
    SphericalMonoid b = spherical_monoid(e, 4, 4);
    REQUIRE(a.elements == b.elements);
    REQUIRE(a.generators == b.generators);
    REQUIRE(a.saturated == b.saturated);
}

TEST_CASE("monoid limit cone spans the generators") {
    Embedding e = make_embedding(make_root_datum("A1xA1"), make_root_datum("A1"), mat({{1, 1}}));
    SphericalMonoid sm = spherical_monoid(e, 6);
    Cone c = monoid_limit_cone(e.source, sm);
    REQUIRE(cone_membership(rv({3, 3}), c).has_value());
    REQUIRE_FALSE(cone_membership(rv({1, 0}), c).has_value());

    SphericalMonoid empty;
    Cone z = monoid_limit_cone(e.source, empty);
    REQUIRE(cone_is_zero(z));
}

TEST_CASE("invalid restriction data is rejected") {
    RootDatum a2 = make_root_datum("A2");
    RootDatum a1 = make_root_datum("A1");
    // Wrong shape.
    REQUIRE_THROWS_AS(make_embedding(a2, a1, mat({{1, 0}})), SpecError);
    REQUIRE_THROWS_AS(make_embedding(a2, a1, mat({{1, 0, 0}, {0, 1, 0}})), SpecError);
    // Lattice-incompatible: fundamental weights of the trace-zero plane have
    // thirds, which do not land in the integer lattice of the circle group.
    REQUIRE_THROWS_AS(make_embedding(a2, make_root_datum("T1"), mat({{1, 0, 0}})), SpecError);
    // Non-positive enumeration bound.
    Embedding e = make_embedding(make_root_datum("A1"), make_root_datum("T1"), mat({{1}}));
    REQUIRE_THROWS_AS(spherical_monoid(e, 0), SpecError);
    REQUIRE_THROWS_AS(spherical_monoid(e, -3), SpecError);
}

TEST_CASE("a weight map that is no restriction of representations is detected") {
    // Tripling is lattice-compatible but no group homomorphism induces it:
    // stripping the pushed two-dimensional representation needs weights that
    // are not there.
    Embedding e = make_embedding(make_root_datum("A1"), make_root_datum("A1"), mat({{3}}));
    REQUIRE_THROWS_AS(branch(e, hw_fund(e.source, {1})), SpecError);
}
