#include <catch2/catch_amalgamated.hpp>

#include "liecone/freudenthal.hpp"
#include "liecone/rootdatum.hpp"

#include <random>

using namespace liecone;

namespace {
RatVec rvq(std::initializer_list<long long> xs) {
    RatVec v;
    for (auto x : xs) v.push_back(Rat(x));
    return v;
}
}  // namespace

TEST_CASE("type strings build the expected root data") {
    RootDatum a1 = make_root_datum("A1");
    REQUIRE(a1.amb == 1);
    REQUIRE(a1.simple_roots == std::vector<IVec>{{2}});
    REQUIRE(a1.fund_weights == std::vector<IVec>{{1}});

    RootDatum a2 = make_root_datum("A2");
    REQUIRE(a2.amb == 3);
    REQUIRE(a2.pos_roots.size() == 3);
    REQUIRE(a2.unscale(a2.rho) == rvq({1, 0, -1}));

    RootDatum b2 = make_root_datum("B2");
    REQUIRE(b2.pos_roots.size() == 4);
    RatVec rho_b2 = b2.unscale(b2.rho);
    REQUIRE(rho_b2 == RatVec{Rat(3, 2), Rat(1, 2)});

    RootDatum d4 = make_root_datum("D4");
    REQUIRE(d4.pos_roots.size() == 12);
    REQUIRE(weyl_order(d4) == 192);

    RootDatum prod = make_root_datum("D4xD4");
    REQUIRE(prod.amb == 8);
    REQUIRE(prod.pos_roots.size() == 24);

    RootDatum withc = make_root_datum("A3+center1");
    REQUIRE(withc.amb == 5);
    REQUIRE(withc.central_dirs.size() == 1);

    RootDatum u2 = make_root_datum("U2");
    REQUIRE(u2.amb == 2);
    REQUIRE(u2.central_dirs.size() == 1);
    REQUIRE(u2.unscale(u2.simple_roots[0]) == rvq({1, -1}));

    REQUIRE_THROWS_AS(make_root_datum("Z9"), SpecError);
    REQUIRE_THROWS_AS(make_root_datum("A0"), SpecError);
    REQUIRE_THROWS_AS(make_root_datum(""), SpecError);
    REQUIRE_THROWS_AS(make_root_datum("D4x"), SpecError);
}

TEST_CASE("dominant chambers have the expected generators and facets") {
    RootDatum a1 = make_root_datum("A1");
    Cone c1 = dominant_chamber(a1);
    REQUIRE(c1.generators == std::vector<RatVec>{rvq({1})});

    RootDatum a1a1 = make_root_datum("A1xA1");
    Cone c2 = dominant_chamber(a1a1);
    REQUIRE(c2.generators == std::vector<RatVec>{rvq({0, 1}), rvq({1, 0})});

    RootDatum d4 = make_root_datum("D4");
    Cone c4 = dd_convert(dominant_chamber(d4));
    // facets: x1>=x2, x2>=x3, x3>=x4, x3>=-x4
    std::vector<RatVec> expect_f = {rvq({0, 0, 1, -1}), rvq({0, 0, 1, 1}), rvq({0, 1, -1, 0}),
                                    rvq({1, -1, 0, 0})};
    REQUIRE(*c4.facets == expect_f);
    std::vector<RatVec> expect_g = {rvq({1, 0, 0, 0}), rvq({1, 1, 0, 0}), rvq({1, 1, 1, -1}),
                                    rvq({1, 1, 1, 1})};
    REQUIRE(c4.generators == expect_g);

    RootDatum d2 = make_root_datum("D2");
    Cone cd2 = dd_convert(dominant_chamber(d2));
    REQUIRE(*cd2.facets == std::vector<RatVec>{rvq({1, -1}), rvq({1, 1})});

    // center contributes lineality
    RootDatum u2 = make_root_datum("U2");
    Cone cu2 = dominant_chamber(u2);
    REQUIRE(cone_membership(rvq({-3, -3}), cu2).has_value());
    REQUIRE(cone_membership(rvq({1, 0}), cu2).has_value());
    REQUIRE(!cone_membership(rvq({0, 1}), cu2).has_value());
}

TEST_CASE("Weyl orbits") {
    RootDatum a1 = make_root_datum("A1");
    auto o1 = weyl_orbit(a1, rvq({1}));
    REQUIRE(o1 == std::vector<RatVec>{rvq({-1}), rvq({1})});

    RootDatum a2 = make_root_datum("A2");
    auto o2 = weyl_orbit(a2, a2.unscale(a2.fund_weights[0]));
    REQUIRE(o2.size() == 3);

    auto o0 = weyl_orbit(a2, rvq({0, 0, 0}));
    REQUIRE(o0.size() == 1);

    // rational points: orbit BFS works off the integer lattice too
    RatVec half = rv_scale(a2.unscale(a2.fund_weights[0]), Rat(1, 2));
    REQUIRE(weyl_orbit(a2, half).size() == 3);

    // orbit meets the chamber in exactly the dominant representative
    RootDatum b2 = make_root_datum("B2");
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> coef(0, 2);
    for (int t = 0; t < 10; ++t) {
        IVec lam = iv_add(iv_scaled(b2.fund_weights[0], coef(rng)),
                          iv_scaled(b2.fund_weights[1], coef(rng)));
        auto orbit = weyl_orbit_set(b2, lam);
        int dominant_count = 0;
        for (const auto& w : orbit)
            if (rd_dominant(b2, w)) ++dominant_count;
        REQUIRE(dominant_count == 1);
        REQUIRE(weyl_order(b2) % orbit.size() == 0);
    }
}

TEST_CASE("weight multiplicities: rank-one strings") {
    RootDatum a1 = make_root_datum("A1");
    for (long long n = 0; n <= 6; ++n) {
        auto wd = weight_multiplicities(a1, IVec{n});
        auto full = expand_diagram(a1, wd);
        REQUIRE(Int(full.size()) == n + 1);
        for (long long k = -n; k <= n; k += 2) REQUIRE(full.at(IVec{k}) == 1);
        REQUIRE(weyl_dimension(a1, IVec{n}) == n + 1);
    }
}

TEST_CASE("weight multiplicities: adjoint of A2") {
    RootDatum a2 = make_root_datum("A2");
    RatVec adj = rv_add(a2.unscale(a2.fund_weights[0]), a2.unscale(a2.fund_weights[1]));
    IVec lam = a2.rescale(adj);
    auto wd = weight_multiplicities(a2, lam);
    IVec zero(a2.amb, 0);
    REQUIRE(wd.dominant.at(zero) == 2);
    REQUIRE(weyl_dimension(a2, lam) == 8);
    REQUIRE(diagram_total_dimension(a2, wd) == 8);

    auto wd0 = weight_multiplicities(a2, zero);
    REQUIRE(wd0.dominant.size() == 1);
    REQUIRE(wd0.dominant.at(zero) == 1);

    REQUIRE_THROWS_AS(weight_multiplicities(a2, a2.rescale(rvq({-1, 0, 1}))), SpecError);
}

TEST_CASE("diagram totals equal the dimension formula and orbits preserve multiplicity") {
    std::mt19937 rng(31337);
    for (const char* type : {"A1", "A2", "B2", "D4"}) {
        RootDatum rd = make_root_datum(type);
        std::uniform_int_distribution<int> coef(0, 2);
        for (int t = 0; t < 8; ++t) {
            IVec lam(rd.amb, 0);
            for (std::size_t k = 0; k < rd.fund_weights.size(); ++k)
                lam = iv_add(lam, iv_scaled(rd.fund_weights[k], coef(rng)));
            if (weyl_dimension(rd, lam) > 10000) continue;
            auto wd = weight_multiplicities(rd, lam);
            REQUIRE(diagram_total_dimension(rd, wd) == weyl_dimension(rd, lam));
            // Weyl invariance: expanding and re-dominantizing agrees everywhere
            auto full = expand_diagram(rd, wd);
            int checked = 0;
            for (const auto& [w, m] : full) {
                IVec dom = to_dominant(rd, w).first;
                REQUIRE(wd.dominant.at(dom) == m);
                if (++checked >= 40) break;
            }
        }
    }
}

TEST_CASE("dominant weight enumeration respects height, order, and lattice flags") {
    RootDatum a1 = make_root_datum("A1");
    auto e1 = enumerate_dominant(a1, 3);
    REQUIRE(e1 == std::vector<IVec>{{0}, {1}, {2}, {3}});

    RootDatum t1 = make_root_datum("T1");
    auto et = enumerate_dominant(t1, 2);
    REQUIRE(et == std::vector<IVec>{{0}, {-1}, {1}, {-2}, {2}});

    RootDatum d4w = make_root_datum("D4");
    auto ew = enumerate_dominant(d4w, 1);
    REQUIRE(ew.size() == 5);  // zero + four fundamental weights

    RootDatum d4i = make_root_datum("D4", LatticeKind::Integral);
    auto ei = enumerate_dominant(d4i, 1);
    REQUIRE(ei.size() == 3);  // spin weights dropped

    RootDatum d4r = make_root_datum("D4", LatticeKind::Root);
    auto er = enumerate_dominant(d4r, 1);
    REQUIRE(er.size() == 2);  // zero and the adjoint fundamental weight

    RootDatum u2 = make_root_datum("U2");
    auto eu = enumerate_dominant(u2, 2);
    REQUIRE(eu.size() == 6);
    for (const auto& w : eu) {
        REQUIRE(rd_dominant(u2, w));
        REQUIRE(rd_in_dominant_lattice(u2, u2.unscale(w)));
    }
}

TEST_CASE("reflection words move weights to the chamber") {
    RootDatum d4 = make_root_datum("D4");
    std::mt19937 rng(2025);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int t = 0; t < 20; ++t) {
        IVec x(d4.amb, 0);
        for (const auto& basis_vec : d4.lattice_basis) x = iv_add(x, iv_scaled(basis_vec, entry(rng)));
        auto [dom, word] = to_dominant(d4, x);
        REQUIRE(rd_dominant(d4, dom));
        IVec y = x;
        for (auto i : word) y = apply_simple_reflection(d4, i, y);
        REQUIRE(y == dom);
    }
}
