#pragma once

// Serializable summary of an analysis. Not-applicable values are null in
// JSON; Betti multisets are sorted ascending.

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "curvesat/analysis.hpp"
#include "curvesat/classify.hpp"
#include "curvesat/resolution.hpp"

namespace curvesat {

constexpr int report_schema_version = 1;

struct CurveReport {
    int schemaVersion = report_schema_version;
    std::string origin;
    std::string name;
    std::string text;
    std::string polynomial;
    int d = 0;
    int T = 0;
    int kmax = 0;
    int mdr = 0;
    std::size_t tau = 0;
    std::optional<int> sigma;
    std::size_t nu = 0;
    std::optional<int> ct;
    std::vector<std::size_t> nTable;
    std::vector<std::size_t> milnorDims;
    std::vector<std::size_t> smoothDims;
    std::vector<int> arGeneratorDegrees;
    std::vector<int> nGeneratorDegrees;
    std::optional<std::map<std::size_t, std::size_t>> combinatorics;
    BettiTable bettiJ;
    BettiTable bettiI;
    std::optional<int> regI;
    int regJ = 0;
    Classification classification;
    std::optional<double> seconds;

    friend bool operator==(const CurveReport&, const CurveReport&) = default;
};

inline CurveReport make_report(const Analysis& a, bool timing = false) {
    CurveReport r;
    r.origin = a.input.origin;
    r.name = a.input.name;
    r.text = a.input.text;
    r.polynomial = a.input.f.to_string();
    r.d = a.inv.d;
    r.T = a.inv.T;
    r.kmax = a.kmax;
    r.mdr = a.inv.mdr;
    r.tau = a.inv.tau;
    r.sigma = a.sd.sigma;
    r.nu = a.sd.nu;
    r.ct = a.inv.ct;
    r.nTable = a.sd.nTable;
    r.milnorDims = a.inv.mDims;
    r.smoothDims = a.inv.smoothDims;
    r.arGeneratorDegrees = a.arDegrees;
    r.nGeneratorDegrees = a.sd.nGenDegrees;
    if (a.comb) r.combinatorics = a.comb->nTable;
    r.bettiJ = a.rj.table;
    r.bettiI = a.rs.table;
    if (a.rs.table.pd() == 2) r.regI = regularity(a.rs.table);
    r.regJ = cm_regularity(a.rj.table);
    r.classification = a.cls;
    if (timing) r.seconds = a.seconds;
    return r;
}

namespace detail {

template <class T>
nlohmann::json optional_json(const std::optional<T>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <class T>
std::optional<T> json_optional(const nlohmann::json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<T>();
}

}  // namespace detail

inline void to_json(nlohmann::json& j, const BettiTable& bt) { j = bt.columns; }
inline void from_json(const nlohmann::json& j, BettiTable& bt) { bt = BettiTable(j.get<std::vector<std::vector<int>>>()); }

inline void to_json(nlohmann::json& j, const Verdict& v) {
    j = {{"name", v.name}, {"status", to_string(v.status)}, {"expected", v.expected}, {"computed", v.computed}, {"note", v.note}};
}

inline void from_json(const nlohmann::json& j, Verdict& v) {
    v.name = j.at("name").get<std::string>();
    const auto s = status_from_string(j.at("status").get<std::string>());
    if (!s) throw Error("report: unknown verdict status");
    v.status = *s;
    v.expected = j.at("expected").get<std::string>();
    v.computed = j.at("computed").get<std::string>();
    v.note = j.at("note").get<std::string>();
}

inline void to_json(nlohmann::json& j, const CurveReport& r) {
    using detail::optional_json;
    nlohmann::json comb = nullptr;
    if (r.combinatorics) {
        comb = nlohmann::json::object();
        for (const auto& [m, n] : *r.combinatorics) comb[std::to_string(m)] = n;
    }
    nlohmann::json exps = nullptr;
    if (r.classification.exponents) exps = {r.classification.exponents->first, r.classification.exponents->second};
    j = nlohmann::json{
        {"schemaVersion", r.schemaVersion},
        {"input", {{"origin", r.origin}, {"name", r.name}, {"text", r.text}}},
        {"polynomial", r.polynomial},
        {"d", r.d},
        {"T", r.T},
        {"kmax", r.kmax},
        {"invariants",
         {{"mdr", r.mdr}, {"tau", r.tau}, {"sigma", optional_json(r.sigma)}, {"nu", r.nu}, {"ct", optional_json(r.ct)}}},
        {"nTable", r.nTable},
        {"milnorDims", r.milnorDims},
        {"smoothDims", r.smoothDims},
        {"arGeneratorDegrees", r.arGeneratorDegrees},
        {"nGeneratorDegrees", r.nGeneratorDegrees},
        {"combinatorics", comb},
        {"betti", {{"jacobian", r.bettiJ}, {"saturated", r.bettiI}}},
        {"regularity", {{"saturated", optional_json(r.regI)}, {"jacobian", r.regJ}}},
        {"classification",
         {{"kind", to_string(r.classification.kind)}, {"exponents", exps}, {"s", optional_json(r.classification.s)}}},
        {"verdicts", r.classification.checks},
    };
    if (r.seconds) j["timingSeconds"] = *r.seconds;
}

inline void from_json(const nlohmann::json& j, CurveReport& r) {
    using detail::json_optional;
    r.schemaVersion = j.at("schemaVersion").get<int>();
    if (r.schemaVersion != report_schema_version)
        throw Error("report: unsupported schemaVersion " + std::to_string(r.schemaVersion));
    const auto& in = j.at("input");
    r.origin = in.at("origin").get<std::string>();
    r.name = in.at("name").get<std::string>();
    r.text = in.at("text").get<std::string>();
    r.polynomial = j.at("polynomial").get<std::string>();
    r.d = j.at("d").get<int>();
    r.T = j.at("T").get<int>();
    r.kmax = j.at("kmax").get<int>();
    const auto& inv = j.at("invariants");
    r.mdr = inv.at("mdr").get<int>();
    r.tau = inv.at("tau").get<std::size_t>();
    r.sigma = json_optional<int>(inv.at("sigma"));
    r.nu = inv.at("nu").get<std::size_t>();
    r.ct = json_optional<int>(inv.at("ct"));
    r.nTable = j.at("nTable").get<std::vector<std::size_t>>();
    r.milnorDims = j.at("milnorDims").get<std::vector<std::size_t>>();
    r.smoothDims = j.at("smoothDims").get<std::vector<std::size_t>>();
    r.arGeneratorDegrees = j.at("arGeneratorDegrees").get<std::vector<int>>();
    r.nGeneratorDegrees = j.at("nGeneratorDegrees").get<std::vector<int>>();
    r.combinatorics.reset();
    if (!j.at("combinatorics").is_null()) {
        std::map<std::size_t, std::size_t> m;
        for (const auto& [k, v] : j.at("combinatorics").items()) m[std::stoul(k)] = v.get<std::size_t>();
        r.combinatorics = m;
    }
    r.bettiJ = j.at("betti").at("jacobian").get<BettiTable>();
    r.bettiI = j.at("betti").at("saturated").get<BettiTable>();
    r.regI = json_optional<int>(j.at("regularity").at("saturated"));
    r.regJ = j.at("regularity").at("jacobian").get<int>();
    const auto& cls = j.at("classification");
    const auto kind = curve_kind_from_string(cls.at("kind").get<std::string>());
    if (!kind) throw Error("report: unknown curve kind");
    r.classification.kind = *kind;
    r.classification.exponents.reset();
    if (!cls.at("exponents").is_null()) {
        const auto e = cls.at("exponents").get<std::vector<int>>();
        if (e.size() != 2) throw Error("report: exponents must be a pair");
        r.classification.exponents = std::pair{e[0], e[1]};
    }
    r.classification.s = json_optional<int>(cls.at("s"));
    r.classification.checks = j.at("verdicts").get<std::vector<Verdict>>();
    r.seconds = j.contains("timingSeconds") ? std::optional<double>(j.at("timingSeconds").get<double>()) : std::nullopt;
}

inline std::string to_json_text(const CurveReport& r) { return nlohmann::json(r).dump(2) + "\n"; }

inline CurveReport report_from_json_text(const std::string& text) { return nlohmann::json::parse(text).get<CurveReport>(); }

inline std::string to_text(const CurveReport& r) {
    std::ostringstream os;
    auto opt = [](const auto& v) { return v ? std::to_string(*v) : std::string("n/a"); };
    os << "curve        " << r.polynomial << "\n";
    if (!r.name.empty()) os << "name         " << r.name << "\n";
    os << "degree       d = " << r.d << ", T = " << r.T << ", kmax = " << r.kmax << "\n";
    os << "invariants   mdr = " << r.mdr << ", tau = " << r.tau << ", sigma = " << opt(r.sigma) << ", nu = " << r.nu
       << ", ct = " << opt(r.ct) << "\n";
    os << "n(f)         " << to_string(r.nTable) << "\n";
    os << "AR gens      " << to_string(r.arGeneratorDegrees) << "\n";
    os << "N gens       " << to_string(r.nGeneratorDegrees) << "\n";
    if (r.combinatorics) {
        os << "points      ";
        for (const auto& [m, n] : *r.combinatorics) os << " n_" << m << " = " << n;
        os << "\n";
    }
    os << "S/J_f        " << to_string(r.bettiJ) << "   (reg " << r.regJ << ")\n";
    os << "S/I_f        " << to_string(r.bettiI) << "   (reg " << opt(r.regI) << ")\n";
    os << "kind         " << to_string(r.classification.kind);
    if (r.classification.exponents)
        os << ", exponents (" << r.classification.exponents->first << ", " << r.classification.exponents->second << ")";
    if (r.classification.s) os << ", s = " << *r.classification.s;
    os << "\n";
    os << "verdicts\n";
    for (const auto& v : r.classification.checks) {
        os << "  " << to_string(v.status);
        for (std::size_t pad = std::string(to_string(v.status)).size(); pad < 15; ++pad) os << ' ';
        os << v.name;
        if (v.status != Status::NotApplicable) os << ": expected " << v.expected << ", computed " << v.computed;
        if (!v.note.empty()) os << " (" << v.note << ")";
        os << "\n";
    }
    if (r.seconds) os << "time         " << *r.seconds << " s\n";
    return os.str();
}

}  // namespace curvesat
