#pragma once

// Property suite: the catalog plus randomized line arrangements, every
// per-curve verdict tallied by group, and a few checks that compare curves.

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "curvesat/analysis.hpp"
#include "curvesat/catalog.hpp"
#include "curvesat/classify.hpp"
#include "curvesat/parallel.hpp"
#include "curvesat/parser.hpp"

namespace curvesat {

struct SuiteOptions {
    std::size_t random = 0;
    std::uint64_t seed = 1;
    std::optional<std::string> only;  // restrict output and exit status to one group
    bool catalog = true;
};

struct GroupTally {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t notApplicable = 0;
    std::vector<std::string> failures;

    void add(const std::string& curve, const Verdict& v) {
        switch (v.status) {
        case Status::Pass: ++pass; break;
        case Status::NotApplicable: ++notApplicable; break;
        case Status::Fail:
            ++fail;
            failures.push_back(curve + ": " + v.name + " expected " + v.expected + ", computed " + v.computed +
                               (v.note.empty() ? "" : " (" + v.note + ")"));
            break;
        }
    }
};

struct SuiteCurve {
    std::string label;
    std::optional<CatalogEntry> entry;
    CurveInput input;
    std::optional<Analysis> analysis;
    std::string error;
};

struct SuiteSummary {
    std::vector<std::string> order;
    std::map<std::string, GroupTally> groups;
    std::vector<SuiteCurve> curves;
    double seconds = 0;

    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& [_, g] : groups) n += g.fail;
        return n;
    }
    bool ok() const { return failures() == 0; }
};

/// Group of each per-curve verdict; anything unlisted lands in "other".
inline const std::vector<std::pair<std::string, std::vector<std::string>>>& suite_groups() {
    static const std::vector<std::pair<std::string, std::vector<std::string>>> g = {
        {"lefschetz", {"lefschetz"}},
        {"duality", {"duality"}},
        {"lem2", {"lem2-b-ge-a+1", "lem2-sum", "lem2-squares"}},
        {"formula", {"n-formula"}},
        {"corAR", {"corAR"}},
        {"arrangement-tau", {"arrangement-tau", "pair-count"}},
        {"rkHS2", {"rkHS2", "rkHS2-arrangement"}},
        {"thmHS", {"thmHS-i", "thmHS-i-count", "thmHS-ii"}},
        {"thmA", {"thmA", "corB", "rkB", "corA1"}},
    };
    return g;
}

inline std::string group_of(const std::string& verdict) {
    for (const auto& [group, names] : suite_groups())
        if (std::find(names.begin(), names.end(), verdict) != names.end()) return group;
    return "other";
}

inline std::vector<std::string> suite_group_names() {
    std::vector<std::string> out{"analysis", "fixtures"};
    for (const auto& [g, _] : suite_groups()) out.push_back(g);
    out.insert(out.end(), {"other", "corA", "ziegler"});
    return out;
}

/// A random arrangement of d distinct lines with coefficients in [-3, 3].
inline ArrangementSpec random_arrangement(std::mt19937_64& rng, int d) {
    std::uniform_int_distribution<int> coef(-3, 3);
    for (;;) {
        std::vector<std::string> forms;
        for (int i = 0; i < d; ++i) {
            const int a = coef(rng), b = coef(rng), c = coef(rng);
            forms.push_back(std::to_string(a) + "*x + " + std::to_string(b) + "*y + " + std::to_string(c) + "*z");
        }
        try {
            return parse_arrangement(forms);
        } catch (const ZeroPolynomial&) {
        } catch (const ProportionalLines&) {
        }
    }
}

inline std::vector<CurveInput> random_arrangements(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> deg(4, 9);
    std::vector<CurveInput> out;
    for (std::size_t i = 0; i < n; ++i) {
        const int d = deg(rng);
        out.push_back(input_from_arrangement(random_arrangement(rng, d), "random-" + std::to_string(i + 1)));
    }
    return out;
}

/// The closed-form values recorded for a catalog entry, against the analysis.
inline std::vector<Verdict> fixture_checks(const CatalogEntry& e, const Analysis& a) {
    using detail::compare;
    std::vector<Verdict> out;
    const auto& x = e.expect;
    if (x.kind) out.push_back(compare("kind", to_string(*x.kind), to_string(a.cls.kind)));
    if (x.exponents) {
        const auto show = [](const std::optional<std::pair<int, int>>& p) {
            return p ? "(" + std::to_string(p->first) + "," + std::to_string(p->second) + ")" : std::string("none");
        };
        out.push_back(compare("exponents", show(x.exponents), show(a.cls.exponents)));
    }
    if (x.tau) out.push_back(compare("tau", std::to_string(*x.tau), std::to_string(a.inv.tau)));
    if (x.mdr) out.push_back(compare("mdr", std::to_string(*x.mdr), std::to_string(a.inv.mdr)));
    if (x.bettiI) out.push_back(compare("betti-I", to_string(*x.bettiI), to_string(a.rs.table)));
    if (x.bettiJ) out.push_back(compare("betti-J", to_string(*x.bettiJ), to_string(a.rj.table)));
    if (x.nTable) out.push_back(compare("n-table", to_string(*x.nTable), to_string(a.sd.nTable)));
    if (x.combinatorics) {
        const auto show = [](const std::map<std::size_t, std::size_t>& m) {
            std::string s;
            for (const auto& [k, v] : m) s += (s.empty() ? "" : ",") + std::to_string(k) + ":" + std::to_string(v);
            return s;
        };
        out.push_back(compare("combinatorics", show(*x.combinatorics), a.comb ? show(a.comb->nTable) : "none"));
    }
    return out;
}

/// Nearly free curves sharing d and tau have the same resolution of S/I_f.
inline std::vector<Verdict> cross_check_nearly_free(const std::vector<SuiteCurve>& curves) {
    std::map<std::pair<int, std::size_t>, std::vector<const SuiteCurve*>> byKey;
    for (const auto& c : curves)
        if (c.analysis && c.analysis->cls.kind == CurveKind::NearlyFree && c.analysis->inv.d >= 3)
            byKey[{c.analysis->inv.d, c.analysis->inv.tau}].push_back(&c);
    std::vector<Verdict> out;
    for (const auto& [key, group] : byKey) {
        const auto& first = group.front()->analysis->rs.table;
        const auto exps = [](const Analysis& a) {
            return "(" + std::to_string(a.cls.exponents->first) + "," + std::to_string(a.cls.exponents->second) + ")";
        };
        for (std::size_t i = 1; i < group.size(); ++i)
            out.push_back(detail::compare("corA " + group.front()->label + " vs " + group[i]->label, to_string(first),
                                          to_string(group[i]->analysis->rs.table),
                                          "exponents " + exps(*group.front()->analysis) + " and " +
                                              exps(*group[i]->analysis)));
    }
    return out;
}

/// The two Ziegler arrangements share their intersection lattice but not
/// their resolutions.
inline std::vector<Verdict> ziegler_pair_check(const std::vector<SuiteCurve>& curves) {
    const SuiteCurve* a = nullptr;
    const SuiteCurve* b = nullptr;
    for (const auto& c : curves) {
        if (c.label == "ziegler-A") a = &c;
        if (c.label == "ziegler-Aprime") b = &c;
    }
    if (!a || !b || !a->analysis || !b->analysis || !a->analysis->comb || !b->analysis->comb) return {};
    const auto& x = *a->analysis;
    const auto& y = *b->analysis;
    const auto lattice = [](const Analysis& an) { return to_string(an.comb->pointMultiplicities); };
    std::vector<Verdict> out;
    out.push_back(detail::compare("same-combinatorics", lattice(x), lattice(y)));
    out.push_back(detail::holds("distinct-betti-I", !(x.rs.table == y.rs.table), "different",
                                to_string(x.rs.table) + " vs " + to_string(y.rs.table)));
    out.push_back(detail::holds("distinct-betti-J", !(x.rj.table == y.rj.table), "different",
                                to_string(x.rj.table) + " vs " + to_string(y.rj.table)));
    return out;
}

inline SuiteSummary run_suite(const SuiteOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    SuiteSummary s;
    s.order = suite_group_names();
    for (const auto& g : s.order) s.groups[g];
    if (opt.catalog)
        for (const auto& e : catalog()) s.curves.push_back({e.name, e, e.input(), std::nullopt, {}});
    for (auto& in : random_arrangements(opt.random, opt.seed)) {
        std::string label = in.name;
        s.curves.push_back({label, std::nullopt, std::move(in), std::nullopt, {}});
    }
    parallel_for(s.curves.size(), [&](std::size_t i) {
        auto& c = s.curves[i];
        try {
            c.analysis = analyze(c.input);
        } catch (const std::exception& ex) {
            c.error = ex.what();
        }
    });
    for (const auto& c : s.curves) {
        Verdict ran{"analysis", c.analysis ? Status::Pass : Status::Fail, "completed", c.analysis ? "completed" : c.error,
                    {}};
        s.groups["analysis"].add(c.label, ran);
        if (!c.analysis) continue;
        if (c.entry)
            for (const auto& v : fixture_checks(*c.entry, *c.analysis)) s.groups["fixtures"].add(c.label, v);
        for (const auto& v : c.analysis->cls.checks) s.groups[group_of(v.name)].add(c.label, v);
    }
    for (const auto& v : cross_check_nearly_free(s.curves)) s.groups["corA"].add("suite", v);
    for (const auto& v : ziegler_pair_check(s.curves)) s.groups["ziegler"].add("suite", v);
    if (opt.only) {
        if (!s.groups.count(*opt.only)) throw std::invalid_argument("suite: unknown group " + *opt.only);
        const GroupTally keep = s.groups.at(*opt.only);
        s.groups = {{*opt.only, keep}};
        s.order = {*opt.only};
    }
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return s;
}

inline std::string to_text(const SuiteSummary& s) {
    std::string out = "curves: " + std::to_string(s.curves.size()) + "\n";
    for (const auto& g : s.order) {
        const auto& t = s.groups.at(g);
        std::string line = "  " + g;
        line.resize(std::max<std::size_t>(line.size() + 1, 20), ' ');
        out += line + "pass " + std::to_string(t.pass) + "  fail " + std::to_string(t.fail) + "  n/a " +
               std::to_string(t.notApplicable) + "\n";
        for (const auto& f : t.failures) out += "    FAIL " + f + "\n";
    }
    out += s.ok() ? "suite: all checks passed\n" : "suite: " + std::to_string(s.failures()) + " failures\n";
    return out;
}

}  // namespace curvesat
