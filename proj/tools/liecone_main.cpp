// liecone — decide admissibility questions about restricted representations
// by exact cone computations.
//
//   liecone check <job>              verdict JSON/table, exit 0/1/2
//   liecone cone <job> --which ck|as requested cone with method tag
//   liecone support <job>            asymptotic support of the module
//   liecone examples [--list]        built-in golden suite
//
// Exit codes: 0 admissible, 1 not admissible, 2 provisional, 3 internal
// error, 4 input/validation error.  Output is deterministic: identical
// inputs produce byte-identical bytes (no timestamps, fixed ordering).

#include "liecone/decision.hpp"
#include "liecone/jobspec.hpp"
#include "liecone/kostant.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace liecone;

struct CliOverrides {
    std::optional<long long> bound;
    std::optional<unsigned> jobs;
    std::optional<std::string> format;
};

JobSpec load_job(const std::string& path, const CliOverrides& ov) {
    JobSpec job = parse_job_file(path);
    if (ov.bound) job.options.bound = *ov.bound;
    if (ov.jobs) job.options.jobs = *ov.jobs;
    if (ov.format) job.format = *ov.format;
    return job;
}

// ---------------------------------------------------------------------------
// Rendering

std::string json_vec_list(const std::vector<RatVec>& vs) {
    std::string out = "[";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ",";
        out += detail::json_rat_array(vs[i]);
    }
    return out + "]";
}

std::string cone_body_json(const Cone& raw) {
    Cone c = canonical(raw);
    return "{\"generators\":" + json_vec_list(c.generators) +
           ",\"facets\":" + json_vec_list(*c.facets) + "}";
}

void print_cone_block(std::ostream& os, const Cone& raw, const std::string& indent) {
    Cone c = canonical(raw);
    os << indent << "generators:" << (c.generators.empty() ? " (origin only)" : "") << "\n";
    for (const auto& g : c.generators) os << indent << "  " << rv_to_string(g) << "\n";
    os << indent << "facets:" << (c.facets->empty() ? " (none)" : "") << "\n";
    for (const auto& f : *c.facets) os << indent << "  " << rv_to_string(f) << "\n";
}

int emit_single_cone(const std::string& kind, const ConeResult& r, const std::string& format) {
    if (format == "json") {
        Cone c = canonical(r.cone);
        std::cout << "{\"kind\":\"" << kind << "\",\"method\":\"" << detail::json_escape(r.method)
                  << "\",\"exact\":" << (r.exact ? "true" : "false") << ",\"dim\":" << c.dim
                  << ",\"generators\":" << json_vec_list(c.generators)
                  << ",\"facets\":" << json_vec_list(*c.facets) << "}\n";
    } else {
        std::cout << "kind:   " << kind << "\n"
                  << "method: " << r.method << "\n"
                  << "exact:  " << (r.exact ? "yes" : "no") << "\n"
                  << "dim:    " << r.cone.dim << "\n";
        print_cone_block(std::cout, r.cone, "");
    }
    return 0;
}

int emit_support(const SupportResult& s, const std::string& format) {
    if (format == "json") {
        std::cout << "{\"kind\":\"as\",\"method\":\"" << detail::json_escape(s.method)
                  << "\",\"exact\":" << (s.exact ? "true" : "false") << ",\"dim\":" << s.support.dim
                  << ",\"components\":[";
        for (std::size_t i = 0; i < s.support.components.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << cone_body_json(s.support.components[i]);
        }
        std::cout << "]}\n";
    } else {
        std::cout << "kind:   as\n"
                  << "method: " << s.method << "\n"
                  << "exact:  " << (s.exact ? "yes" : "no") << "\n"
                  << "dim:    " << s.support.dim << "\n"
                  << "components: " << s.support.components.size() << "\n";
        for (std::size_t i = 0; i < s.support.components.size(); ++i) {
            std::cout << "component " << (i + 1) << ":\n";
            print_cone_block(std::cout, s.support.components[i], "  ");
        }
    }
    return 0;
}

void print_verdict_table(const Verdict& v) {
    const char* s = v.state == AdmissibleState::Admissible      ? "admissible"
                    : v.state == AdmissibleState::NotAdmissible ? "not admissible"
                                                                : "provisional";
    std::cout << "verdict: " << s << "\n"
              << "exact:   " << (v.exact ? "yes" : "no") << "\n";
    std::cout << "methods: ";
    for (std::size_t i = 0; i < v.method_tags.size(); ++i)
        std::cout << (i ? ", " : "") << v.method_tags[i];
    std::cout << "\ndigest:  " << v.inputs_digest << "\n";
    if (v.witness) std::cout << "witness: " << rv_to_string(*v.witness) << "\n";
    std::cout << "certificates:\n";
    for (std::size_t i = 0; i < v.certificates.size(); ++i) {
        const auto& c = v.certificates[i];
        std::cout << "  [" << (i + 1) << "] ";
        if (c.trivial)
            std::cout << "trivial (" << c.combined_facets.size() << " separating facets)\n";
        else
            std::cout << "nonzero point " << rv_to_string(c.witness) << "\n";
    }
}

// ---------------------------------------------------------------------------
// Subcommand bodies

int run_check(const std::string& path, const CliOverrides& ov) {
    JobSpec job = load_job(path, ov);
    if (!job.subgroup) throw SpecError(path + ": check needs a [subgroup] section");
    Verdict v;
    if (job.module)
        v = decide_module(job.group, *job.module, *job.subgroup, job.options);
    else if (job.qcapk)
        v = decide_q_series(job.group, *job.qcapk, *job.subgroup, job.options);
    else
        throw SpecError(path + ": check needs a [module] or a [qcapk] section");
    if (job.format == "json")
        std::cout << verdict_json(v) << "\n";
    else
        print_verdict_table(v);
    return verdict_exit_code(v);
}

int run_cone(const std::string& path, const std::string& which, const CliOverrides& ov) {
    JobSpec job = load_job(path, ov);
    if (which == "ck") {
        if (!job.subgroup) throw SpecError(path + ": cone --which ck needs a [subgroup] section");
        return emit_single_cone("ck", c_cone(job.group, *job.subgroup, job.options), job.format);
    }
    // which == "as": the module's support; a Q-series job's AS is the qcapk cone.
    if (job.module) return emit_support(as_support(job.group, *job.module, job.options), job.format);
    if (job.qcapk) {
        ConeResult r = c_cone(job.group, *job.qcapk, job.options);
        return emit_single_cone("as", r, job.format);
    }
    throw SpecError(path + ": cone --which as needs a [module] or a [qcapk] section");
}

int run_support(const std::string& path, const CliOverrides& ov) {
    JobSpec job = load_job(path, ov);
    if (!job.module) throw SpecError(path + ": support needs a [module] section");
    return emit_support(as_support(job.group, *job.module, job.options), job.format);
}

// ---------------------------------------------------------------------------
// Golden suite: worked examples with independently pinned expected output.

struct GoldenCase {
    std::string name;
    std::function<std::string(const ConeOptions&, bool)> run;  // "" = pass
};

Cone ray_cone(std::size_t dim, std::vector<std::vector<long long>> rays) {
    std::vector<RatVec> gens;
    for (const auto& r : rays) {
        RatVec v;
        for (long long x : r) v.push_back(Rat(x));
        gens.push_back(std::move(v));
    }
    return cone_from_generators(dim, std::move(gens));
}

std::string check_cone_equal(const Cone& got, const Cone& want) {
    if (cone_equal(got, want)) return "";
    return "cone mismatch: got " + cone_canonical_string(got) + " want " +
           cone_canonical_string(want);
}

// The order-three outer symmetry of the so(8) weight space used by the
// spin(7) twisted embedding, written on standard coordinates.
Mat triality_zeta() {
    Mat z;
    auto h = [](int a, int b, int c, int d) {
        return RatVec{Rat(a, 2), Rat(b, 2), Rat(c, 2), Rat(d, 2)};
    };
    z.rows = {h(1, 1, 1, 1), h(1, 1, -1, -1), h(1, -1, 1, -1), h(-1, 1, 1, -1)};
    return z;
}

Cone triality_expected_cone() {
    // Pairs (x, zeta(x1,x2,x3,-x4)) over the four chamber rays, scaled to
    // integer entries.
    Mat z = triality_zeta();
    std::vector<RatVec> xs = {{Rat(2), Rat(0), Rat(0), Rat(0)},
                              {Rat(1), Rat(1), Rat(0), Rat(0)},
                              {Rat(1), Rat(1), Rat(1), Rat(-1)},
                              {Rat(1), Rat(1), Rat(1), Rat(1)}};
    std::vector<RatVec> gens;
    for (const auto& x : xs) {
        RatVec flipped = x;
        flipped[3] = -flipped[3];
        RatVec y = z.apply(flipped);
        RatVec pair = x;
        pair.insert(pair.end(), y.begin(), y.end());
        gens.push_back(std::move(pair));
    }
    return cone_from_generators(8, std::move(gens));
}

std::string verify_zeta_is_outer_root_symmetry() {
    Mat z = triality_zeta();
    // Orthogonal: rows pairwise orthonormal.
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (rv_dot(z.rows[i], z.rows[j]) != Rat(i == j ? 1 : 0))
                return "zeta is not orthogonal";
    // Permutes the 24 roots of the even orthogonal system in rank 4.
    RootDatum d4 = make_root_datum("D4");
    std::vector<RatVec> roots;
    for (const auto& r : d4.pos_roots) {
        roots.push_back(d4.unscale(r));
        roots.push_back(rv_neg(roots.back()));
    }
    for (const auto& r : roots) {
        RatVec img = z.apply(r);
        bool found = false;
        for (const auto& s : roots)
            if (s == img) {
                found = true;
                break;
            }
        if (!found) return "zeta does not permute the roots";
    }
    // Outer: sends the first coordinate vector to a half-integer weight,
    // which no signed-permutation symmetry can do.
    RatVec e1{Rat(1), Rat(0), Rat(0), Rat(0)};
    if (z.apply(e1) != RatVec{Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(-1, 2)})
        return "zeta no longer matches its pinned first column";
    return "";
}

std::vector<GoldenCase> golden_cases() {
    std::vector<GoldenCase> cases;

    cases.push_back({"dominant-chamber-torus-d4", [](const ConeOptions& o, bool) {
                         RootDatum rd = make_root_datum("D4");
                         SubgroupSpec t;
                         t.kind = SubgroupKind::MaximalTorus;
                         ConeResult r = c_cone(rd, t, o);
                         return check_cone_equal(r.cone, dominant_chamber(rd));
                     }});

    cases.push_back({"torus-enumeration-a2", [](const ConeOptions& o, bool) {
                         RootDatum rd = make_root_datum("A2");
                         ConeOptions opts = o;
                         if (opts.bound <= 0) opts.bound = 6;
                         ConeResult r = c_cone_enumerated(rd, subgroup_preset(rd, "torus"), opts);
                         if (!r.exact) return std::string("enumeration did not saturate");
                         return check_cone_equal(r.cone, dominant_chamber(rd));
                     }});

    cases.push_back({"split-pair-cone-so44", [](const ConeOptions& o, bool) {
                         RootDatum rd = make_root_datum("D2xD2", LatticeKind::Integral);
                         ConeResult r = c_cone(rd, subgroup_preset(rd, "so(2n-1)-in-so(2n)"), o);
                         return check_cone_equal(r.cone,
                                                 ray_cone(4, {{1, 0, 0, 0}, {0, 0, 1, 0}}));
                     }});

    cases.push_back({"unitary-pair-cone-so44", [](const ConeOptions& o, bool) {
                         RootDatum rd = make_root_datum("D2xD2", LatticeKind::Integral);
                         ConeResult r = c_cone(rd, subgroup_preset(rd, "u(n)-in-so(2n)"), o);
                         return check_cone_equal(r.cone,
                                                 ray_cone(4, {{1, 1, 0, 0}, {0, 0, 1, 1}}));
                     }});

    cases.push_back({"q-series-so44", [](const ConeOptions& o, bool) {
                         RootDatum rd = make_root_datum("D2xD2", LatticeKind::Integral);
                         Verdict v = decide_q_series(rd, subgroup_preset(rd, "so(2n-1)-in-so(2n)"),
                                                     subgroup_preset(rd, "u(n)-in-so(2n)"), o);
                         if (v.state != AdmissibleState::Admissible)
                             return std::string("expected admissible");
                         if (!v.exact) return std::string("expected an exact verdict");
                         return std::string();
                     }});

    cases.push_back({"triality-cone-so88", [](const ConeOptions& o, bool) {
                         std::string bad = verify_zeta_is_outer_root_symmetry();
                         if (!bad.empty()) return bad;
                         RootDatum rd = make_root_datum("D4xD4");
                         ConeOptions opts = o;
                         if (opts.bound <= 0) opts.bound = 4;
                         ConeResult r =
                             c_cone(rd, subgroup_preset(rd, "spin7-triality-in-so8"), opts);
                         if (!r.exact) return std::string("enumeration did not saturate");
                         return check_cone_equal(r.cone, triality_expected_cone());
                     }});

    cases.push_back({"q-series-so88", [](const ConeOptions& o, bool) {
                         RootDatum rd = make_root_datum("D4xD4");
                         ConeOptions opts = o;
                         if (opts.bound <= 0) opts.bound = 4;
                         KModuleSpec m;
                         m.kind = ModuleKind::MonoidSupport;
                         m.weights = {RatVec{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0),
                                             Rat(0), Rat(0)},
                                      RatVec{Rat(0), Rat(0), Rat(0), Rat(0), Rat(1), Rat(0),
                                             Rat(0), Rat(0)}};
                         Verdict v = decide_module(
                             rd, m, subgroup_preset(rd, "spin7-triality-in-so8"), opts);
                         if (v.state != AdmissibleState::Admissible)
                             return std::string("expected admissible");
                         return std::string();
                     }});

    cases.push_back({"hermitian-center-u2", [](const ConeOptions&, bool) {
                         return hermitian_center_check(make_root_datum("U2"))
                                    ? std::string()
                                    : std::string("expected matching center cones");
                     }});

    cases.push_back({"hermitian-center-u3", [](const ConeOptions&, bool) {
                         return hermitian_center_check(make_root_datum("U3"))
                                    ? std::string()
                                    : std::string("expected matching center cones");
                     }});

    cases.push_back({"catalog-finite-dimensional", [](const ConeOptions& o, bool corrupt) {
                         RootDatum rd = make_root_datum("A2");
                         for (const auto& entry : module_catalog(rd, corrupt))
                             if (entry.name == "finite-dimensional") {
                                 Verdict v = decide_module(rd, entry.module,
                                                           subgroup_preset(rd, "derived-torus"), o);
                                 if (v.state != AdmissibleState::Admissible)
                                     return std::string("expected admissible for a module with "
                                                        "bounded weight support");
                                 return std::string();
                             }
                         return std::string("catalog entry missing");
                     }});

    cases.push_back({"full-support-refused-a2", [](const ConeOptions& o, bool) {
                         RootDatum rd = make_root_datum("A2");
                         for (const auto& entry : module_catalog(rd))
                             if (entry.name == "full-support") {
                                 Verdict v = decide_module(rd, entry.module,
                                                           subgroup_preset(rd, "derived-torus"), o);
                                 if (v.state != AdmissibleState::NotAdmissible)
                                     return std::string("expected not admissible");
                                 if (!v.witness) return std::string("missing witness");
                                 return std::string();
                             }
                         return std::string("catalog entry missing");
                     }});

    cases.push_back({"symmetric-pair-coherence-d2u", [](const ConeOptions& o, bool) {
                         RootDatum rd = make_root_datum("D2", LatticeKind::Integral);
                         SubgroupSpec s = subgroup_preset(rd, "u(n)-in-so(2n)");
                         ConeOptions opts = o;
                         if (opts.bound <= 0) opts.bound = 6;
                         ConeResult fast = c_cone(rd, s, opts);
                         ConeResult slow = c_cone_enumerated(rd, s, opts);
                         if (!slow.exact) return std::string("enumeration did not saturate");
                         return check_cone_equal(fast.cone, slow.cone);
                     }});

    return cases;
}

int run_examples(bool list, bool corrupt, const CliOverrides& ov) {
    ConeOptions opts;
    opts.bound = ov.bound.value_or(0);  // 0: every case uses its pinned bound
    opts.jobs = ov.jobs.value_or(2);
    std::vector<GoldenCase> cases = golden_cases();
    if (list) {
        for (const auto& c : cases) std::cout << c.name << "\n";
        return 0;
    }
    std::size_t width = 0;
    for (const auto& c : cases) width = std::max(width, c.name.size());
    std::size_t failed = 0;
    for (const auto& c : cases) {
        std::string msg = c.run(opts, corrupt);
        std::cout << c.name << std::string(width - c.name.size() + 2, ' ')
                  << (msg.empty() ? "pass" : "FAIL") << "\n";
        if (!msg.empty()) {
            std::cout << "  " << msg << "\n";
            ++failed;
        }
    }
    std::cout << cases.size() << " cases, " << (cases.size() - failed) << " passed, " << failed
              << " failed\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cone computations for admissibility of restricted representations"};
    app.require_subcommand(1);

    CliOverrides ov;
    std::string file, which = "ck";
    bool list = false, corrupt = false;

    auto add_common = [&](CLI::App* cmd, bool with_format) {
        cmd->add_option("--bound", ov.bound, "monoid enumeration degree bound")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--jobs", ov.jobs, "worker threads for enumeration")
            ->check(CLI::PositiveNumber);
        if (with_format)
            cmd->add_option("--format", ov.format, "output format")
                ->check(CLI::IsMember({"json", "table"}));
    };

    CLI::App* check = app.add_subcommand("check", "decide admissibility for a job file");
    check->add_option("file", file, "job file")->required();
    add_common(check, true);

    CLI::App* cone = app.add_subcommand("cone", "print one of the two cones for a job file");
    cone->add_option("file", file, "job file")->required();
    cone->add_option("--which", which, "which cone")
        ->required()
        ->check(CLI::IsMember({"ck", "as"}));
    add_common(cone, true);

    CLI::App* support = app.add_subcommand("support", "print the module's asymptotic support");
    support->add_option("file", file, "job file")->required();
    add_common(support, true);

    CLI::App* examples = app.add_subcommand("examples", "run the built-in golden suite");
    examples->add_flag("--list", list, "list case names without running");
    examples->add_flag("--corrupt-catalog", corrupt,
                       "negative control: corrupt the module catalog and expect a failure");
    add_common(examples, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return run_check(file, ov);
        if (cone->parsed()) return run_cone(file, which, ov);
        if (support->parsed()) return run_support(file, ov);
        return run_examples(list, corrupt, ov);
    } catch (const liecone::SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
