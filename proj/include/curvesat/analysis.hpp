#pragma once

// The full pipeline for one curve: parse -> jacobian -> saturation ->
// resolution -> classify.

#include <chrono>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "curvesat/classify.hpp"
#include "curvesat/jacobian.hpp"
#include "curvesat/parser.hpp"
#include "curvesat/resolution.hpp"
#include "curvesat/saturation.hpp"

namespace curvesat {

struct CurveInput {
    std::string origin;  // "poly", "arrangement" or "catalog"
    std::string name;    // catalog name or file name, if any
    std::string text;    // the polynomial, or the forms one per line
    HomogeneousPoly f;
    std::optional<ArrangementSpec> arrangement;
    bool knownIrreducible = false;
};

inline CurveInput input_from_poly(const std::string& text) {
    CurveInput in;
    in.origin = "poly";
    in.text = text;
    in.f = parse_poly(text);
    return in;
}

inline CurveInput input_from_arrangement(ArrangementSpec spec, std::string name = {}) {
    CurveInput in;
    in.origin = "arrangement";
    in.name = std::move(name);
    in.text = spec.sourceText;
    in.f = spec.product();
    in.arrangement = std::move(spec);
    return in;
}

struct Analysis {
    CurveInput input;
    int kmax = 0;
    std::shared_ptr<const JacobianData> jd;
    CurveInvariants inv;
    SaturationData sd;
    SaturatedResolution rs;
    JacobianResolution rj;
    std::vector<int> arDegrees;
    std::optional<Combinatorics> comb;
    Classification cls;
    double seconds = 0;
};

inline Analysis analyze(CurveInput input, std::optional<int> kmax = std::nullopt) {
    const auto start = std::chrono::steady_clock::now();
    Analysis a;
    a.input = std::move(input);
    const int d = a.input.f.degree();
    a.kmax = kmax.value_or(default_kmax(d));
    a.jd = std::make_shared<const JacobianData>(a.input.f, a.kmax);
    const JacobianData& jd = *a.jd;
    a.inv = curve_invariants(jd);
    a.sd = saturation_data(jd);
    a.rs = resolve_saturated(jd, a.sd);
    a.rj = resolve_jacobian(jd);
    if (a.rj.partials.size() == 3) {
        for (const auto& g : a.rj.arGenerators) a.arDegrees.push_back(g.degree);
    } else {
        a.arDegrees = ar_min_generators(jd);
    }
    if (a.input.arrangement) a.comb = combinatorics(*a.input.arrangement);
    a.cls = classify(d, a.inv.tau, a.inv.mdr, a.sd.nu, a.sd.sigma);
    std::optional<std::vector<std::size_t>> mult;
    if (a.comb) mult = a.comb->pointMultiplicities;
    a.cls.checks = verify_corollaries({jd, a.inv, a.sd, a.rs, a.rj, a.arDegrees, mult, a.input.knownIrreducible}, a.cls);
    a.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return a;
}

inline Classification classify(const HomogeneousPoly& f) {
    CurveInput in;
    in.origin = "poly";
    in.text = f.to_string();
    in.f = f;
    return analyze(std::move(in)).cls;
}

inline std::vector<Verdict> verify_corollaries(const Analysis& a) { return a.cls.checks; }

/// The bound check on the number of generators of I_f on its own.
inline Verdict mu_If_bound_check(const Analysis& a) {
    for (const auto& v : a.cls.checks)
        if (v.name == "rkREF") return v;
    throw std::logic_error("mu_If_bound_check: verdict missing");
}

}  // namespace curvesat
