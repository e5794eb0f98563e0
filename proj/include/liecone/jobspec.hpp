#pragma once

// Hand-writable job files: an INI-style format describing a group, a
// subgroup, optionally a module and a second subgroup section, plus options.
// Parsing is strict — unknown sections or keys, duplicate keys, and malformed
// values are rejected with file:line positions.
//
//   [group]
//   type = D2xD2            # Cartan type string, e.g. A2, B3, D4xD4, U3
//   lattice = integral      # weight | root | integral (default weight)
//
//   [subgroup]
//   preset = u(n)-in-so(2n) # or kind= with the fields below
//   # kind = maximal-torus | derived-torus | central-torus
//   #      | symmetric-pair (+ sigma=)
//   #      | general        (+ target=, target_lattice=, matrix=)
//   # sigma  = (1,0),(0,-1)
//   # matrix = (1,0,1,0),(0,1,0,1)
//
//   [module]                # omit for Q-series jobs (use [qcapk] instead)
//   kind = finite           # finite | monoid | orbits | parabolic | catalog
//   # weights   = (1,0),(1,1)   (monoid)
//   # component = (1,0)         (orbits; repeat the key per component)
//   # name      = full-support  (catalog)
//
//   [qcapk]                 # subgroup spec: parabolic module's Levi part,
//   preset = torus          # or the Q-series cone when [module] is absent
//
//   [options]
//   bound = 6
//   jobs = 1
//   format = table          # json (default) | table

#include "liecone/conecalc.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace liecone {

struct JobSpec {
    RootDatum group;
    std::optional<SubgroupSpec> subgroup;
    std::optional<KModuleSpec> module;
    std::optional<SubgroupSpec> qcapk;
    ConeOptions options;
    std::string format = "json";
};

namespace detail {

struct JobLine {
    std::size_t line = 0;
    std::string key, value;
    bool used = false;
};

struct JobSection {
    std::size_t line = 0;
    bool present = false;
    std::vector<JobLine> entries;
};

inline std::string job_trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] inline void job_fail(const std::string& file, std::size_t line,
                                  const std::string& msg) {
    throw SpecError(file + ":" + std::to_string(line) + ": " + msg);
}

inline Rat job_rat(const std::string& file, std::size_t line, const std::string& tok) {
    std::string t = job_trim(tok);
    std::size_t i = 0;
    bool neg = false;
    if (i < t.size() && (t[i] == '+' || t[i] == '-')) neg = t[i++] == '-';
    std::string num, den;
    while (i < t.size() && t[i] >= '0' && t[i] <= '9') num.push_back(t[i++]);
    if (num.empty()) job_fail(file, line, "expected a rational number, got '" + t + "'");
    if (i < t.size() && t[i] == '/') {
        ++i;
        while (i < t.size() && t[i] >= '0' && t[i] <= '9') den.push_back(t[i++]);
        if (den.empty()) job_fail(file, line, "missing denominator in '" + t + "'");
    }
    if (i != t.size()) job_fail(file, line, "trailing characters in rational '" + t + "'");
    Rat r{Int(num), den.empty() ? Int(1) : Int(den)};
    return neg ? -r : r;
}

// "(a,b,...),(c,d,...)" -> list of rational tuples.
inline std::vector<RatVec> job_tuples(const std::string& file, std::size_t line,
                                      const std::string& value) {
    std::vector<RatVec> out;
    std::size_t i = 0;
    const std::string s = value;
    auto skip_ws = [&] {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    };
    skip_ws();
    while (i < s.size()) {
        if (s[i] != '(') job_fail(file, line, "expected '(' in vector list");
        std::size_t close = s.find(')', i);
        if (close == std::string::npos) job_fail(file, line, "missing ')' in vector list");
        std::string body = s.substr(i + 1, close - i - 1);
        RatVec v;
        std::size_t start = 0;
        while (true) {
            std::size_t comma = body.find(',', start);
            std::string tok = body.substr(start, comma == std::string::npos ? std::string::npos
                                                                            : comma - start);
            v.push_back(job_rat(file, line, tok));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        out.push_back(std::move(v));
        i = close + 1;
        skip_ws();
        if (i < s.size()) {
            if (s[i] != ',') job_fail(file, line, "expected ',' between vectors");
            ++i;
            skip_ws();
            if (i == s.size()) job_fail(file, line, "trailing ',' in vector list");
        }
    }
    if (out.empty()) job_fail(file, line, "empty vector list");
    return out;
}

inline long long job_int(const std::string& file, std::size_t line, const std::string& tok) {
    std::string t = job_trim(tok);
    if (t.empty()) job_fail(file, line, "expected an integer");
    std::size_t i = t[0] == '-' || t[0] == '+' ? 1 : 0;
    if (i == t.size()) job_fail(file, line, "expected an integer, got '" + t + "'");
    for (; i < t.size(); ++i)
        if (t[i] < '0' || t[i] > '9') job_fail(file, line, "expected an integer, got '" + t + "'");
    return std::stoll(t);
}

// Single lookup of an optional unique key; marks it used.
inline const JobLine* job_find(const std::string& file, JobSection& sec, const std::string& key) {
    const JobLine* found = nullptr;
    for (auto& e : sec.entries)
        if (e.key == key) {
            if (found) job_fail(file, e.line, "duplicate key '" + key + "'");
            e.used = true;
            found = &e;
        }
    return found;
}

inline void job_reject_unused(const std::string& file, const JobSection& sec,
                              const std::string& section_name) {
    for (const auto& e : sec.entries)
        if (!e.used)
            job_fail(file, e.line, "unknown key '" + e.key + "' in [" + section_name + "]");
}

inline SubgroupSpec job_subgroup(const std::string& file, const RootDatum& rd, JobSection& sec,
                                 const std::string& section_name) {
    const JobLine* preset = job_find(file, sec, "preset");
    const JobLine* kind = job_find(file, sec, "kind");
    if (preset && kind)
        job_fail(file, kind->line, "give either preset= or kind=, not both");
    if (preset) {
        job_reject_unused(file, sec, section_name);
        try {
            return subgroup_preset(rd, job_trim(preset->value));
        } catch (const SpecError& e) {
            job_fail(file, preset->line, e.what());
        }
    }
    if (!kind) job_fail(file, sec.line, "section [" + section_name + "] needs preset= or kind=");
    std::string k = job_trim(kind->value);
    SubgroupSpec out;
    if (k == "maximal-torus") {
        out.kind = SubgroupKind::MaximalTorus;
    } else if (k == "derived-torus") {
        out.kind = SubgroupKind::DerivedMaximalTorus;
    } else if (k == "central-torus") {
        out.kind = SubgroupKind::CentralTorus;
    } else if (k == "symmetric-pair") {
        out.kind = SubgroupKind::SymmetricPair;
        const JobLine* sig = job_find(file, sec, "sigma");
        if (!sig) job_fail(file, kind->line, "symmetric-pair needs sigma=");
        Mat m;
        m.rows = job_tuples(file, sig->line, sig->value);
        try {
            make_involution(rd, m);  // reject malformed input at parse time
        } catch (const SpecError& e) {
            job_fail(file, sig->line, e.what());
        }
        out.sigma = std::move(m);
    } else if (k == "general") {
        out.kind = SubgroupKind::General;
        const JobLine* tgt = job_find(file, sec, "target");
        const JobLine* tlk = job_find(file, sec, "target_lattice");
        const JobLine* mat = job_find(file, sec, "matrix");
        if (!tgt || !mat) job_fail(file, kind->line, "general needs target= and matrix=");
        LatticeKind lk = LatticeKind::Weight;
        if (tlk) {
            try {
                lk = lattice_kind_from_string(job_trim(tlk->value));
            } catch (const SpecError& e) {
                job_fail(file, tlk->line, e.what());
            }
        }
        try {
            RootDatum target = make_root_datum(job_trim(tgt->value), lk);
            Mat m;
            m.rows = job_tuples(file, mat->line, mat->value);
            out.embedding = make_embedding(rd, std::move(target), std::move(m));
        } catch (const SpecError& e) {
            job_fail(file, mat->line, e.what());
        }
    } else {
        job_fail(file, kind->line, "unknown subgroup kind '" + k + "'");
    }
    job_reject_unused(file, sec, section_name);
    return out;
}

inline KModuleSpec job_module(const std::string& file, const RootDatum& rd, JobSection& sec,
                              std::optional<SubgroupSpec>&& qcapk) {
    const JobLine* kind = job_find(file, sec, "kind");
    if (!kind) job_fail(file, sec.line, "section [module] needs kind=");
    std::string k = job_trim(kind->value);
    KModuleSpec out;
    if (k == "finite") {
        out.kind = ModuleKind::FiniteDimensional;
    } else if (k == "monoid") {
        out.kind = ModuleKind::MonoidSupport;
        const JobLine* w = job_find(file, sec, "weights");
        if (!w) job_fail(file, kind->line, "monoid module needs weights=");
        out.weights = job_tuples(file, w->line, w->value);
    } else if (k == "orbits") {
        out.kind = ModuleKind::OrbitComponents;
        for (auto& e : sec.entries)
            if (e.key == "component") {
                e.used = true;
                out.components.push_back(job_tuples(file, e.line, e.value));
            }
        if (out.components.empty()) job_fail(file, kind->line, "orbits module needs component=");
    } else if (k == "parabolic") {
        out.kind = ModuleKind::ParabolicInduced;
        if (!qcapk) job_fail(file, kind->line, "parabolic module needs a [qcapk] section");
        out.qcapk = std::move(*qcapk);
        qcapk.reset();
    } else if (k == "catalog") {
        const JobLine* name = job_find(file, sec, "name");
        if (!name) job_fail(file, kind->line, "catalog module needs name=");
        std::string n = job_trim(name->value);
        bool found = false;
        for (const auto& entry : module_catalog(rd))
            if (entry.name == n) {
                out = entry.module;
                found = true;
                break;
            }
        if (!found) job_fail(file, name->line, "no catalog module named '" + n + "'");
    } else {
        job_fail(file, kind->line, "unknown module kind '" + k + "'");
    }
    job_reject_unused(file, sec, "module");
    return out;
}

}  // namespace detail

inline JobSpec parse_job_text(const std::string& text, const std::string& file = "job") {
    using detail::JobSection;
    std::map<std::string, JobSection> sections;
    for (const char* name : {"group", "subgroup", "module", "qcapk", "options"})
        sections[name];

    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    JobSection* current = nullptr;
    std::string current_name;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = detail::job_trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                detail::job_fail(file, lineno, "malformed section header '" + line + "'");
            std::string name = detail::job_trim(line.substr(1, line.size() - 2));
            auto it = sections.find(name);
            if (it == sections.end())
                detail::job_fail(file, lineno, "unknown section [" + name + "]");
            if (it->second.present)
                detail::job_fail(file, lineno, "section [" + name + "] appears twice");
            it->second.present = true;
            it->second.line = lineno;
            current = &it->second;
            current_name = name;
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            detail::job_fail(file, lineno, "expected 'key = value', got '" + line + "'");
        if (!current) detail::job_fail(file, lineno, "key outside of any [section]");
        detail::JobLine e;
        e.line = lineno;
        e.key = detail::job_trim(line.substr(0, eq));
        e.value = detail::job_trim(line.substr(eq + 1));
        if (e.key.empty()) detail::job_fail(file, lineno, "empty key");
        if (e.value.empty()) detail::job_fail(file, lineno, "empty value for '" + e.key + "'");
        current->entries.push_back(std::move(e));
    }

    JobSpec job;

    JobSection& g = sections["group"];
    if (!g.present) detail::job_fail(file, 1, "missing [group] section");
    const detail::JobLine* type = detail::job_find(file, g, "type");
    const detail::JobLine* lat = detail::job_find(file, g, "lattice");
    if (!type) detail::job_fail(file, g.line, "section [group] needs type=");
    LatticeKind lk = LatticeKind::Weight;
    if (lat) {
        try {
            lk = lattice_kind_from_string(detail::job_trim(lat->value));
        } catch (const SpecError& e) {
            detail::job_fail(file, lat->line, e.what());
        }
    }
    try {
        job.group = make_root_datum(detail::job_trim(type->value), lk);
    } catch (const SpecError& e) {
        detail::job_fail(file, type->line, e.what());
    }
    detail::job_reject_unused(file, g, "group");

    if (sections["subgroup"].present)
        job.subgroup = detail::job_subgroup(file, job.group, sections["subgroup"], "subgroup");

    std::optional<SubgroupSpec> qcapk;
    if (sections["qcapk"].present)
        qcapk = detail::job_subgroup(file, job.group, sections["qcapk"], "qcapk");

    if (sections["module"].present)
        job.module = detail::job_module(file, job.group, sections["module"], std::move(qcapk));
    else
        job.qcapk = std::move(qcapk);

    if (job.module && job.module->kind != ModuleKind::ParabolicInduced && sections["qcapk"].present)
        detail::job_fail(file, sections["qcapk"].line,
                         "[qcapk] is only used by parabolic modules or Q-series jobs");

    JobSection& o = sections["options"];
    if (o.present) {
        if (const auto* b = detail::job_find(file, o, "bound")) {
            long long v = detail::job_int(file, b->line, b->value);
            if (v < 1) detail::job_fail(file, b->line, "bound must be >= 1");
            job.options.bound = v;
        }
        if (const auto* jb = detail::job_find(file, o, "jobs")) {
            long long v = detail::job_int(file, jb->line, jb->value);
            if (v < 1) detail::job_fail(file, jb->line, "jobs must be >= 1");
            job.options.jobs = static_cast<unsigned>(v);
        }
        if (const auto* f = detail::job_find(file, o, "format")) {
            std::string v = detail::job_trim(f->value);
            if (v != "json" && v != "table")
                detail::job_fail(file, f->line, "format must be json or table");
            job.format = v;
        }
        detail::job_reject_unused(file, o, "options");
    }
    return job;
}

inline JobSpec parse_job_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open job file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_job_text(ss.str(), path);
}

}  // namespace liecone
