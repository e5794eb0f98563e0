#include <catch2/catch_amalgamated.hpp>

#include "liecone/decision.hpp"
#include "liecone/jobspec.hpp"

#include <cstdio>
#include <fstream>
#include <string>

using namespace liecone;

namespace {

std::string parse_error(const std::string& text) {
    try {
        parse_job_text(text, "t.job");
    } catch (const SpecError& e) {
        return e.what();
    }
    return "";
}

bool error_at(const std::string& text, const std::string& loc, const std::string& needle) {
    std::string msg = parse_error(text);
    INFO(msg);
    return msg.find(loc) != std::string::npos && msg.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("complete job file round-trips into a typed spec") {
    const std::string text =
        "# admissibility of the unitary pair against the split pair\n"
        "[group]\n"
        "type = D2xD2\n"
        "lattice = integral\n"
        "\n"
        "[subgroup]\n"
        "preset = u(n)-in-so(2n)   # inline comment\n"
        "\n"
        "[qcapk]\n"
        "preset = so(2n-1)-in-so(2n)\n"
        "\n"
        "[options]\n"
        "bound = 4\n"
        "jobs = 2\n"
        "format = json\n";
    JobSpec job = parse_job_text(text, "t.job");
    CHECK(job.group.type_str == "D2xD2");
    CHECK(job.group.lattice == LatticeKind::Integral);
    REQUIRE(job.subgroup.has_value());
    CHECK(job.subgroup->kind == SubgroupKind::SymmetricPair);
    REQUIRE(job.qcapk.has_value());
    CHECK(job.qcapk->kind == SubgroupKind::SymmetricPair);
    CHECK_FALSE(job.module.has_value());
    CHECK(job.options.bound == 4);
    CHECK(job.options.jobs == 2);
    CHECK(job.format == "json");

    // The parsed specs drive the decision layer exactly like hand-built ones.
    Verdict v = decide_q_series(job.group, *job.qcapk, *job.subgroup, job.options);
    Verdict w = decide_q_series(job.group, subgroup_preset(job.group, "so(2n-1)-in-so(2n)"),
                                subgroup_preset(job.group, "u(n)-in-so(2n)"), job.options);
    CHECK(v.state == w.state);
    CHECK(v.inputs_digest == w.inputs_digest);
}

TEST_CASE("subgroup kinds and modules parse field by field") {
    SECTION("named torus kinds need no extra keys") {
        for (std::string k : {"maximal-torus", "derived-torus", "central-torus"}) {
            JobSpec job = parse_job_text("[group]\ntype=B2\n[subgroup]\nkind=" + k + "\n");
            REQUIRE(job.subgroup.has_value());
        }
    }
    SECTION("symmetric pair with explicit sigma") {
        JobSpec job = parse_job_text(
            "[group]\ntype=D2\nlattice=integral\n"
            "[subgroup]\nkind=symmetric-pair\nsigma=(1,0),(0,-1)\n");
        REQUIRE(job.subgroup.has_value());
        REQUIRE(job.subgroup->sigma.has_value());
        ConeResult direct = c_cone(job.group, subgroup_preset(job.group, "so(2n-1)-in-so(2n)"));
        ConeResult parsed = c_cone(job.group, *job.subgroup);
        CHECK(cone_equal(direct.cone, parsed.cone));
    }
    SECTION("general embedding with target and matrix") {
        JobSpec job = parse_job_text(
            "[group]\ntype=A2\n"
            "[subgroup]\nkind=general\ntarget=T1\nmatrix=(1,1,1)\n");
        REQUIRE(job.subgroup.has_value());
        REQUIRE(job.subgroup->embedding.has_value());
        CHECK(job.subgroup->embedding->target.type_str == "T1");
        CHECK(job.subgroup->embedding->matrix.rows.size() == 1);
        CHECK(job.subgroup->embedding->matrix.rows[0] == RatVec{Rat(1), Rat(1), Rat(1)});
    }
    SECTION("monoid module accepts rational weight tuples") {
        JobSpec job = parse_job_text(
            "[group]\ntype=D2\n"
            "[subgroup]\nkind=derived-torus\n"
            "[module]\nkind=monoid\nweights=(1/2,1/2),(1,0)\n");
        REQUIRE(job.module.has_value());
        CHECK(job.module->kind == ModuleKind::MonoidSupport);
        REQUIRE(job.module->weights.size() == 2);
        CHECK(job.module->weights[0] == RatVec{Rat(1, 2), Rat(1, 2)});
        SupportResult s = as_support(job.group, *job.module);
        CHECK_FALSE(s.support.components.empty());
    }
    SECTION("orbit components via repeated component keys") {
        JobSpec job = parse_job_text(
            "[group]\ntype=A2\n"
            "[module]\nkind=orbits\ncomponent=(1,0,-1)\ncomponent=(2,-1,-1),(1,1,-2)\n");
        REQUIRE(job.module.has_value());
        CHECK(job.module->kind == ModuleKind::OrbitComponents);
        REQUIRE(job.module->components.size() == 2);
        CHECK(job.module->components[1].size() == 2);
    }
    SECTION("parabolic module consumes the qcapk section") {
        JobSpec job = parse_job_text(
            "[group]\ntype=B2\n"
            "[module]\nkind=parabolic\n"
            "[qcapk]\nkind=derived-torus\n");
        REQUIRE(job.module.has_value());
        CHECK(job.module->kind == ModuleKind::ParabolicInduced);
        REQUIRE(job.module->qcapk.has_value());
        CHECK_FALSE(job.qcapk.has_value());
        CHECK(job.module->qcapk->kind == SubgroupKind::DerivedMaximalTorus);
    }
    SECTION("catalog module looked up by name") {
        JobSpec job = parse_job_text(
            "[group]\ntype=A2\n"
            "[module]\nkind=catalog\nname=finite-dimensional\n");
        REQUIRE(job.module.has_value());
        CHECK(job.module->kind == ModuleKind::FiniteDimensional);
        JobSpec ray = parse_job_text(
            "[group]\ntype=A2\n"
            "[module]\nkind=catalog\nname=first-fundamental-ray\n");
        CHECK(ray.module->kind == ModuleKind::MonoidSupport);
        CHECK_FALSE(ray.module->weights.empty());
    }
    SECTION("finite module and defaulted options") {
        JobSpec job = parse_job_text("[group]\ntype=A1\n[module]\nkind=finite\n");
        CHECK(job.module->kind == ModuleKind::FiniteDimensional);
        CHECK(job.options.bound == 6);
        CHECK(job.options.jobs == 1);
        CHECK(job.format == "json");
    }
}

TEST_CASE("malformed job files are rejected with file and line positions") {
    CHECK(error_at("[grp]\n", "t.job:1", "unknown section"));
    CHECK(error_at("[group]\ntype=A1\nflavour=x\n", "t.job:3", "unknown key 'flavour'"));
    CHECK(error_at("[group]\ntype=A1\ntype=A2\n", "t.job:3", "duplicate key"));
    CHECK(error_at("[group]\ntype=A1\n[group]\ntype=A2\n", "t.job:3", "appears twice"));
    CHECK(error_at("type=A1\n", "t.job:1", "outside of any"));
    CHECK(error_at("[subgroup]\nkind=maximal-torus\n", "t.job:1", "missing [group]"));
    CHECK(error_at("[group]\nlattice=weight\n", "t.job:1", "needs type="));
    CHECK(error_at("[group]\ntype=A1\nlattice=dual\n", "t.job:3", "lattice"));
    CHECK(error_at("[group]\ntype=Z9\n", "t.job:2", ""));
    CHECK(error_at("[group]\ntype=A1\n[subgroup]\npreset=torus\nkind=general\n", "t.job:5",
                   "not both"));
    CHECK(error_at("[group]\ntype=A1\n[subgroup]\nbound=3\n", "t.job:3", "needs preset= or kind="));
    CHECK(error_at("[group]\ntype=D2\n[subgroup]\nkind=symmetric-pair\n", "t.job:4",
                   "needs sigma="));
    CHECK(error_at("[group]\ntype=D2\n[subgroup]\nkind=symmetric-pair\nsigma=(1,1),(0,1)\n",
                   "t.job:5", ""));
    CHECK(error_at("[group]\ntype=A2\n[subgroup]\nkind=general\ntarget=T1\n", "t.job:4",
                   "needs target= and matrix="));
    CHECK(error_at("[group]\ntype=A1\n[subgroup]\nkind=borel\n", "t.job:4", "unknown subgroup"));
    CHECK(error_at("[group]\ntype=A1\n[module]\nkind=mystery\n", "t.job:4", "unknown module"));
    CHECK(error_at("[group]\ntype=A1\n[module]\nkind=monoid\n", "t.job:4", "needs weights="));
    CHECK(error_at("[group]\ntype=A1\n[module]\nkind=orbits\n", "t.job:4", "needs component="));
    CHECK(error_at("[group]\ntype=A1\n[module]\nkind=parabolic\n", "t.job:4", "needs a [qcapk]"));
    CHECK(error_at("[group]\ntype=A1\n[module]\nkind=finite\n[qcapk]\nkind=derived-torus\n",
                   "t.job:5", "only used by parabolic"));
    CHECK(error_at("[group]\ntype=A1\n[module]\nkind=catalog\nname=imaginary\n", "t.job:5",
                   "no catalog module"));
    CHECK(error_at("[group]\ntype=A1\n[options]\nbound=0\n", "t.job:4", "bound must be >= 1"));
    CHECK(error_at("[group]\ntype=A1\n[options]\njobs=-1\n", "t.job:4", "jobs must be >= 1"));
    CHECK(error_at("[group]\ntype=A1\n[options]\nformat=xml\n", "t.job:4", "json or table"));
    CHECK(error_at("[group]\ntype=A1\n[options]\nbound=six\n", "t.job:4", "integer"));
    CHECK(error_at("[group]\ntype=A1\n[module]\nkind=monoid\nweights=(1/)\n", "t.job:5",
                   "denominator"));
    CHECK(error_at("[group]\ntype=A1\n[module]\nkind=monoid\nweights=(1,2\n", "t.job:5",
                   "missing ')'"));
    CHECK(error_at("[group]\ntype=A1\n[module]\nkind=monoid\nweights=(1),\n", "t.job:5",
                   "trailing ','"));
    CHECK(error_at("[group]\ntype=A1\n[module]\nkind=monoid\nweights=1,2\n", "t.job:5",
                   "expected '('"));
    CHECK(error_at("[group]\ntype=A1\n[subgroup]\npreset=\n", "t.job:4", "empty value"));
    CHECK(error_at("[group]\ntype=A1\n[subgroup]\npreset=diagonal\n", "t.job:4", ""));
    CHECK(error_at("[group]\ntype=A1\nno equals sign\n", "t.job:3", "key = value"));
}

TEST_CASE("job files load from disk and missing paths are reported") {
    const std::string path = "jobspec_roundtrip_tmp.job";
    {
        std::ofstream out(path);
        out << "[group]\ntype = U2\n\n[subgroup]\npreset = center\n";
    }
    JobSpec job = parse_job_file(path);
    CHECK(job.group.type_str == "U2");
    REQUIRE(job.subgroup.has_value());
    CHECK(job.subgroup->kind == SubgroupKind::CentralTorus);
    std::remove(path.c_str());

    CHECK_THROWS_AS(parse_job_file("definitely_not_here.job"), SpecError);
    std::string msg = parse_error("");  // empty text: missing [group]
    CHECK(msg.find("missing [group]") != std::string::npos);
}
