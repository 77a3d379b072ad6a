#pragma once

// Free / nearly free classification, the resolution of S/I_f predicted for
// nearly free curves, and named verdicts comparing computed data with the
// identities they must satisfy.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "curvesat/errors.hpp"
#include "curvesat/jacobian.hpp"
#include "curvesat/resolution.hpp"
#include "curvesat/saturation.hpp"

namespace curvesat {

enum class CurveKind { Smooth, Free, NearlyFree, Other, ConcurrentLines };

inline const char* to_string(CurveKind k) {
    switch (k) {
        case CurveKind::Smooth: return "SMOOTH";
        case CurveKind::Free: return "FREE";
        case CurveKind::NearlyFree: return "NEARLY_FREE";
        case CurveKind::Other: return "OTHER";
        case CurveKind::ConcurrentLines: return "CONCURRENT_LINES";
    }
    return "?";
}

inline std::optional<CurveKind> curve_kind_from_string(const std::string& s) {
    for (auto k : {CurveKind::Smooth, CurveKind::Free, CurveKind::NearlyFree, CurveKind::Other,
                   CurveKind::ConcurrentLines})
        if (s == to_string(k)) return k;
    return std::nullopt;
}

enum class Status { Pass, Fail, NotApplicable };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::NotApplicable: return "NOT_APPLICABLE";
    }
    return "?";
}

inline std::optional<Status> status_from_string(const std::string& s) {
    for (auto v : {Status::Pass, Status::Fail, Status::NotApplicable})
        if (s == to_string(v)) return v;
    return std::nullopt;
}

/// One named check: two independently obtained sides and their comparison.
struct Verdict {
    std::string name;
    Status status = Status::NotApplicable;
    std::string expected;
    std::string computed;
    std::string note;

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct Classification {
    CurveKind kind = CurveKind::Other;
    std::optional<std::pair<int, int>> exponents;  // (d_1, d_2)
    std::optional<int> s;                          // sigma - (d - 2)
    std::vector<Verdict> checks;

    friend bool operator==(const Classification&, const Classification&) = default;
};

/// Kind and exponents from tau and r = mdr(f), cross-checked against nu:
/// free iff tau = (d-1)^2 - r(d-r-1) iff nu = 0; nearly free iff tau is one
/// less iff nu = 1.
inline Classification classify(int d, std::size_t tau, int r, std::size_t nu, std::optional<int> sigma) {
    Classification c;
    const long long t = static_cast<long long>(tau);
    const long long free_tau = static_cast<long long>(d - 1) * (d - 1) - static_cast<long long>(r) * (d - r - 1);
    auto inconsistent = [&](const char* kind) {
        std::ostringstream os;
        os << "tau criterion says " << kind << " but nu = " << nu << " (d = " << d << ", tau = " << tau
           << ", mdr = " << r << ")";
        throw InconsistentClassification(os.str());
    };
    if (tau == 0 && d >= 3) {
        c.kind = CurveKind::Smooth;
    } else if (r == 0) {
        c.kind = CurveKind::ConcurrentLines;
        c.exponents = std::pair{0, d - 1};
        if (nu != 0) inconsistent("CONCURRENT_LINES");
    } else if (t == free_tau) {
        c.kind = CurveKind::Free;
        c.exponents = std::pair{r, d - 1 - r};
        if (nu != 0) inconsistent("FREE");
    } else if (t == free_tau - 1) {
        c.kind = CurveKind::NearlyFree;
        c.exponents = std::pair{r, d - r};
        if (nu != 1) inconsistent("NEARLY_FREE");
    } else {
        c.kind = CurveKind::Other;
        if (nu <= 1) inconsistent("OTHER");
    }
    if (sigma) c.s = *sigma - (d - 2);
    return c;
}

/// Resolution of S/I_f for a nearly free curve of degree d >= 3 with
/// 1 <= d_1 <= d/2: with s = d_1 - 1 and sigma = d + d_1 - 3,
/// s = 0 gives a = {d-2, d-1}, b = {2d-3}; s >= 1 gives
/// a = {d-1, d-1, d-1, sigma}, b = {sigma+1, sigma+1, T+1-sigma}.
inline BettiTable predicted_resolution_nearly_free(int d, int d1) {
    if (d < 3) throw BadExponent("predicted_resolution_nearly_free: degree must be at least 3");
    if (d1 < 1 || 2 * d1 > d)
        throw BadExponent("exponent d_1 = " + std::to_string(d1) + " outside [1, " + std::to_string(d / 2) + "]");
    if (d1 == 1) return BettiTable({{d - 1, d - 2}, {2 * d - 3}});
    const int sigma = d + d1 - 3;
    const int T = 3 * d - 6;
    return BettiTable({{d - 1, d - 1, d - 1, sigma}, {sigma + 1, sigma + 1, T + 1 - sigma}});
}

inline std::string to_string(const BettiTable& bt) {
    std::string out;
    for (std::size_t p = 0; p < bt.columns.size(); ++p) {
        if (p) out += " | ";
        for (std::size_t i = 0; i < bt.columns[p].size(); ++i) {
            if (i) out += ",";
            out += std::to_string(bt.columns[p][i]);
        }
    }
    return out.empty() ? "0" : out;
}

inline std::string to_string(const std::vector<int>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + "}";
}

inline std::string to_string(const std::vector<std::size_t>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + "]";
}

/// Everything the verdicts look at.
struct VerdictInputs {
    const JacobianData& jd;
    const CurveInvariants& inv;
    const SaturationData& sd;
    const SaturatedResolution& rs;
    const JacobianResolution& rj;
    const std::vector<int>& arDegrees;                    // minimal generator degrees of AR(f)
    const std::optional<std::vector<std::size_t>>& arrangementMultiplicities;
    bool knownIrreducible = false;
};

namespace detail {

inline Verdict compare(std::string name, const std::string& expected, const std::string& computed,
                       std::string note = {}) {
    return {std::move(name), expected == computed ? Status::Pass : Status::Fail, expected, computed, std::move(note)};
}

inline Verdict not_applicable(std::string name, std::string note) {
    return {std::move(name), Status::NotApplicable, {}, {}, std::move(note)};
}

inline Verdict holds(std::string name, bool ok, std::string expected, std::string computed) {
    return {std::move(name), ok ? Status::Pass : Status::Fail, std::move(expected), std::move(computed), {}};
}

}  // namespace detail

/// n_k from the Hilbert functions of M(f) and M(f_s) alone:
/// n_k = dim M(f)_k + dim M(f)_{T-k} - dim M(f_s)_k - tau.
inline std::vector<long long> n_table_from_milnor(const JacobianData& jd) {
    const int T = jd.T();
    const auto ref = smooth_reference_dims(jd.d(), std::max(T, 0));
    const long long tau = static_cast<long long>(tjurina(jd));
    std::vector<long long> out;
    for (int k = 0; k <= T; ++k)
        out.push_back(static_cast<long long>(jd.m_dim(k)) + static_cast<long long>(jd.m_dim(T - k)) -
                      static_cast<long long>(ref[static_cast<std::size_t>(k)]) - tau);
    return out;
}

/// Named verdicts for one curve. Checks whose hypotheses fail are reported
/// as not applicable, with the reason.
inline std::vector<Verdict> verify_corollaries(const VerdictInputs& in, const Classification& cls) {
    using detail::compare;
    using detail::holds;
    using detail::not_applicable;
    std::vector<Verdict> out;
    const int d = in.inv.d;
    const int T = in.inv.T;
    const std::size_t tau = in.inv.tau;
    const auto& sd = in.sd;
    const BettiTable& bi = in.rs.table;
    const BettiTable& bj = in.rj.table;
    const bool singular = tau > 0;
    const bool nf = cls.kind == CurveKind::NearlyFree;
    const bool fr = cls.kind == CurveKind::Free;
    const int d1 = cls.exponents ? cls.exponents->first : 0;
    const int d2 = cls.exponents ? cls.exponents->second : 0;
    const bool partials_independent = in.rj.partials.size() == 3;

    // Self-duality and unimodality of n(f).
    {
        bool dual = true;
        for (int k = 0; k <= T; ++k) dual = dual && sd.n(k) == sd.n(T - k);
        out.push_back(holds("duality", dual, "n_k = n_{T-k}", to_string(sd.nTable)));
        bool uni = true;
        for (int k = 1; k <= T / 2; ++k) uni = uni && sd.n(k - 1) <= sd.n(k);
        for (int k = T / 2 + 1; k <= T; ++k) uni = uni && sd.n(k - 1) >= sd.n(k);
        out.push_back(holds("unimodality", uni, "non-decreasing up to floor(T/2), then non-increasing",
                            to_string(sd.nTable)));
        if (sd.sigma) {
            bool support = true;
            for (int k = 0; k <= T; ++k) support = support && ((sd.n(k) != 0) == (*sd.sigma <= k && k <= T - *sd.sigma));
            out.push_back(holds("support", support, "n_k != 0 exactly on [sigma, T - sigma]",
                                "sigma = " + std::to_string(*sd.sigma)));
        } else {
            out.push_back(not_applicable("support", "N(f) = 0"));
        }
    }

    // Closed formula for n(f)_k from the Milnor algebra, against the descent.
    {
        const auto formula = n_table_from_milnor(in.jd);
        std::vector<std::size_t> as_counts;
        bool ok = true;
        for (long long v : formula) {
            if (v < 0) ok = false;
            as_counts.push_back(v < 0 ? 0 : static_cast<std::size_t>(v));
        }
        auto v = compare("n-formula", to_string(as_counts), to_string(sd.nTable));
        if (!ok) v.status = Status::Fail;
        out.push_back(v);
    }

    // Lefschetz property of N(f) for small random linear forms.
    if (sd.nu > 0) {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<int> coeff(-5, 5);
        std::string tried;
        bool ok = false;
        for (int attempt = 0; attempt < 5 && !ok; ++attempt) {
            int a, b, c;
            do {
                a = coeff(rng), b = coeff(rng), c = coeff(rng);
            } while (a == 0 && b == 0 && c == 0);
            const auto l = HomogeneousPoly::linear(a, b, c);
            const auto rep = lefschetz_check(sd, l);
            tried += (tried.empty() ? "" : "; ") + l.to_string() + ": ranks " + to_string(rep.ranks);
            ok = rep.holds();
        }
        Verdict v{"lefschetz", ok ? Status::Pass : Status::Fail, "injective below T/2, surjective from floor(T/2)",
                  tried, ok ? "" : "no generic form found in 5 samples"};
        out.push_back(v);
    } else {
        out.push_back(not_applicable("lefschetz", "N(f) = 0"));
    }

    // Lemma: pd S/I_f = 2, and the numerical identities of its resolution.
    if (singular) {
        out.push_back(compare("pd-saturated", "2", std::to_string(bi.pd())));
        if (bi.pd() == 2) {
            auto a = bi.columns[0];
            auto b = bi.columns[1];
            std::sort(a.rbegin(), a.rend());
            std::sort(b.rbegin(), b.rend());
            bool step = b.size() + 1 == a.size();
            for (std::size_t i = 0; step && i < b.size(); ++i) step = b[i] >= a[i] + 1;
            out.push_back(holds("lem2-b-ge-a+1", step, "b_(i) >= a_(i) + 1, t + 1 generators", to_string(bi)));
            const long long sa = std::accumulate(a.begin(), a.end(), 0LL);
            const long long sb = std::accumulate(b.begin(), b.end(), 0LL);
            out.push_back(compare("lem2-sum", std::to_string(sa), std::to_string(sb)));
            long long qa = 0, qb = 0;
            for (int x : a) qa += 1LL * x * x;
            for (int x : b) qb += 1LL * x * x;
            out.push_back(compare("lem2-squares", std::to_string(2 * tau), std::to_string(qb - qa),
                                  "sum b^2 - sum a^2 against 2 tau"));
        }
    } else {
        out.push_back(not_applicable("pd-saturated", "smooth curve, I_f = S"));
    }
    out.push_back(holds("lem1-jacobian-pd", (bj.pd() == 3) == (sd.nu > 0), "position 3 nonempty iff nu > 0",
                        "pd = " + std::to_string(bj.pd()) + ", nu = " + std::to_string(sd.nu)));

    // Theorem A and its consequences for nearly free curves.
    if (nf && d >= 3) {
        out.push_back(compare("thmA", to_string(predicted_resolution_nearly_free(d, d1)), to_string(bi)));
        out.push_back(compare("sigma-formula", std::to_string(d + d1 - 3), sd.sigma ? std::to_string(*sd.sigma) : "none"));
        out.push_back(compare("corB", std::to_string(2 * d - 4 - d1), std::to_string(regularity(bi))));
        out.push_back(compare("reg-milnor", std::to_string(2 * d - 3 - d1), std::to_string(cm_regularity(bj))));
        out.push_back(compare("r2", to_string(BettiTable({{d - 1, d - 1, d - 1}, {d + d1 - 1, d + d2 - 1, d + d2 - 1}, {d + d2}})),
                              to_string(bj)));
        const int amin = *std::min_element(bi.columns[0].begin(), bi.columns[0].end());
        out.push_back(holds("prop1-min-degree", amin == d - 2 || amin == d - 1, "min a in {d-2, d-1}",
                            std::to_string(amin)));
        if (amin == d - 1) {
            const int s = *cls.s;
            out.push_back(holds("thm2-range", 1 <= s && s <= d / 2 - 1, "1 <= s <= floor(d/2) - 1",
                                "s = " + std::to_string(s)));
        } else {
            out.push_back(not_applicable("thm2-range", "minimal generator degree is d-2"));
        }
    } else {
        for (const char* n : {"thmA", "sigma-formula", "corB", "reg-milnor", "r2", "prop1-min-degree", "thm2-range"})
            out.push_back(not_applicable(n, "curve is not nearly free of degree >= 3"));
    }
    if (fr) {
        out.push_back(compare("r1", to_string(BettiTable({{d - 1, d - 1, d - 1}, {d + d1 - 1, d + d2 - 1}})), to_string(bj)));
    } else {
        out.push_back(not_applicable("r1", "curve is not free"));
    }

    // reg S/I_f = T - ct(f).
    if (singular && bi.pd() == 2 && in.inv.ct) {
        out.push_back(compare("rkB", std::to_string(T - *in.inv.ct), std::to_string(regularity(bi))));
    } else {
        out.push_back(not_applicable("rkB", singular ? "S/I_f does not have projective dimension 2" : "smooth curve"));
    }

    // n(f)_{d-2} = 0 iff dim M(f)_{2d-4} = tau.
    if (d >= 2) {
        const bool lhs = sd.n(d - 2) == 0;
        const bool rhs = in.jd.m_dim(2 * d - 4) == tau;
        out.push_back(holds("rkHS2", lhs == rhs, "n_{d-2} = 0 iff dim M(f)_{2d-4} = tau",
                            "n_{d-2} = " + std::to_string(sd.n(d - 2)) + ", dim M(f)_{2d-4} = " +
                                std::to_string(in.jd.m_dim(2 * d - 4)) + ", tau = " + std::to_string(tau)));
    }

    // Generators and resolution of N(f) and S/I_f from the resolution of S/J_f.
    if (partials_independent && d >= 2) {
        std::vector<int> expected;
        if (bj.pd() == 3)
            for (int beta : bj.position(3)) expected.push_back(3 * d - 3 - beta);
        std::sort(expected.begin(), expected.end());
        auto got = sd.nGenDegrees;
        std::sort(got.begin(), got.end());
        out.push_back(compare("thmHS-i", to_string(expected), to_string(got), "{3d-3-beta_i} against N(f) generators"));
        out.push_back(compare("thmHS-i-count", std::to_string(in.arDegrees.size() - 2), std::to_string(got.size()),
                              "r - 2 against mu(N(f))"));
        if (sd.n(d - 2) == 0 && singular) {
            std::vector<int> a(3, d - 1), b;
            for (int beta : expected) a.push_back(beta);
            for (int alpha : bj.position(2)) b.push_back(3 * d - 3 - alpha);
            out.push_back(compare("thmHS-ii", to_string(BettiTable({a, b})), to_string(bi)));
        } else {
            out.push_back(not_applicable("thmHS-ii", singular ? "n_{d-2} != 0" : "smooth curve"));
        }
        if (sd.n(d - 2) == 0 && sd.sigma) {
            out.push_back(compare("reg-indeg", std::to_string(3 * d - 6 - *sd.sigma), std::to_string(cm_regularity(bj)),
                                  "reg S/J_f against 3(d-1) - 3 - indeg N(f)"));
        } else {
            out.push_back(not_applicable("reg-indeg", sd.sigma ? "n_{d-2} != 0" : "N(f) = 0"));
        }
        if (sd.n(d - 2) == 0) {
            out.push_back(holds("reg2", static_cast<int>(in.arDegrees.size()) <= d - 1, "mu(AR(f)) <= d - 1",
                                std::to_string(in.arDegrees.size())));
        } else {
            out.push_back(not_applicable("reg2", "n_{d-2} != 0"));
        }
    } else {
        for (const char* n : {"thmHS-i", "thmHS-i-count", "thmHS-ii", "reg-indeg", "reg2"})
            out.push_back(not_applicable(n, "partial derivatives are linearly dependent"));
    }

    // Bound on the number of generators of I_f.
    if (singular && partials_independent) {
        const std::size_t mu = in.rs.generators.size();
        const std::size_t bound = in.rs.e2prime + in.arDegrees.size() - 2;
        out.push_back(holds("rkREF", 2 <= mu && mu <= bound, "2 <= mu(I_f) <= dim E2' + mu(AR(f)) - 2",
                            "mu(I_f) = " + std::to_string(mu) + ", dim E2' = " + std::to_string(in.rs.e2prime) +
                                ", mu(AR(f)) = " + std::to_string(in.arDegrees.size())));
    } else {
        out.push_back(not_applicable("rkREF", singular ? "partial derivatives are linearly dependent" : "smooth curve"));
    }

    // Generator counts of I_f.
    if ((fr || nf) && in.inv.mdr >= 1 && d >= 3) {
        const std::size_t expected = fr ? 3 : (in.inv.mdr == 1 ? 2 : 4);
        out.push_back(compare("corA1", std::to_string(expected), std::to_string(in.rs.generators.size())));
    } else {
        out.push_back(not_applicable("corA1", "curve is neither free nor nearly free"));
    }

    // Irreducible curves with mdr = 1.
    if (in.knownIrreducible && in.inv.mdr == 1 && d >= 3) {
        const std::string expected = std::string("NEARLY_FREE ") + to_string(BettiTable({{d - 1, d - 2}, {2 * d - 3}}));
        out.push_back(compare("corC", expected, std::string(to_string(cls.kind)) + " " + to_string(bi)));
    } else {
        out.push_back(not_applicable("corC", in.knownIrreducible ? "mdr(f) != 1" : "curve not known to be irreducible"));
    }

    // Line arrangements.
    if (in.arrangementMultiplicities) {
        std::size_t sum = 0;
        for (std::size_t m : *in.arrangementMultiplicities) sum += (m - 1) * (m - 1);
        out.push_back(compare("arrangement-tau", std::to_string(sum), std::to_string(tau), "sum (m_p - 1)^2 against tau"));
        std::size_t pairs = 0;
        for (std::size_t m : *in.arrangementMultiplicities) pairs += m * (m - 1) / 2;
        out.push_back(compare("pair-count", std::to_string(static_cast<std::size_t>(d) * (d - 1) / 2), std::to_string(pairs)));
        if (d >= 3)
            out.push_back(holds("corAR", static_cast<int>(in.arDegrees.size()) <= d - 1, "mu(AR(f)) <= d - 1",
                                std::to_string(in.arDegrees.size())));
        else
            out.push_back(not_applicable("corAR", "fewer than 3 lines"));
        if (d >= 4)
            out.push_back(compare("rkHS2-arrangement", std::to_string(tau), std::to_string(in.jd.m_dim(2 * d - 4)),
                                  "dim M(f)_{2d-4} against tau"));
        else
            out.push_back(not_applicable("rkHS2-arrangement", "fewer than 4 lines"));
    } else {
        for (const char* n : {"arrangement-tau", "pair-count", "corAR", "rkHS2-arrangement"})
            out.push_back(not_applicable(n, "not a line arrangement"));
    }
    return out;
}

}  // namespace curvesat
