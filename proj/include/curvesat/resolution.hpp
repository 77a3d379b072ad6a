#pragma once

// Minimal graded free resolutions of S/J_f and S/I_f.
//
// Generators come from Nakayama counts with explicit complements. Syzygy
// modules that are free for structural reasons (the last module of a
// resolution of length <= 3 over S, and the relation module of the saturated
// ideal I_f, whose quotient has depth 1) are resolved from their Hilbert
// functions: a minimal generating set of a free graded module is a basis, so
// the generators in degree k number dim Z_k minus the dimension spanned by
// the generators found in lower degrees.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "curvesat/errors.hpp"
#include "curvesat/exactla.hpp"
#include "curvesat/graded.hpp"
#include "curvesat/jacobian.hpp"
#include "curvesat/module.hpp"
#include "curvesat/poly.hpp"
#include "curvesat/saturation.hpp"

namespace curvesat {

/// Twists of a minimal graded free resolution of S/I, column 0 (a single S)
/// left implicit. columns[p-1] holds the twists in homological position p,
/// sorted ascending.
struct BettiTable {
    std::vector<std::vector<int>> columns;

    BettiTable() = default;
    explicit BettiTable(std::vector<std::vector<int>> cols) : columns(std::move(cols)) {
        for (auto& c : columns) std::sort(c.begin(), c.end());
        while (!columns.empty() && columns.back().empty()) columns.pop_back();
    }

    int pd() const noexcept { return static_cast<int>(columns.size()); }
    const std::vector<int>& position(int p) const { return columns.at(static_cast<std::size_t>(p - 1)); }

    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// reg S/I = max{a_i - 1, b_j - 2} for a table of projective dimension 2.
inline int regularity(const BettiTable& bt) {
    if (bt.pd() != 2)
        throw WrongShape("regularity: expected projective dimension 2, got " + std::to_string(bt.pd()));
    int r = *std::max_element(bt.columns[0].begin(), bt.columns[0].end()) - 1;
    for (int b : bt.columns[1]) r = std::max(r, b - 2);
    return r;
}

/// Castelnuovo-Mumford regularity of any nonzero table: max over p of twist - p.
inline int cm_regularity(const BettiTable& bt) {
    int r = 0;  // position 0 contributes S(0)
    for (int p = 1; p <= bt.pd(); ++p)
        for (int t : bt.position(p)) r = std::max(r, t - p);
    return r;
}

/// dim (S/I)_k as the alternating sum over the table.
inline long long hilbert_from_betti(const BettiTable& bt, int k) {
    long long h = static_cast<long long>(dim_S(k));
    for (int p = 1; p <= bt.pd(); ++p)
        for (int t : bt.position(p)) h += (p % 2 ? -1 : 1) * static_cast<long long>(dim_S(k - t));
    return h;
}

struct GeneratorSet {
    std::vector<int> degrees;
    std::vector<HomogeneousPoly> gens;
};

inline GeneratorSet to_generator_set(const std::vector<ModuleElement>& elems) {
    GeneratorSet g;
    for (const auto& e : elems) {
        g.degrees.push_back(e.degree);
        g.gens.push_back(from_integers(e.degree, e.coords));
    }
    return g;
}

/// Minimal generators of an ideal given slice by slice (slices absent from
/// the map are zero).
inline GeneratorSet min_generators(const GradedSubspace& ideal) {
    if (ideal.ambientRank != 1) throw std::invalid_argument("min_generators: expected an ideal of S");
    if (ideal.slices.empty()) return {};
    const int kmax = ideal.slices.rbegin()->first;
    const auto gens = minimal_generators(
        FreeModule{{0}}, 0, kmax, [&](int k) { return ideal.dim(k); },
        [&](int k) {
            std::vector<IntVec> out;
            for (const auto& v : ideal.slices.at(k)) out.push_back(to_primitive(v));
            return out;
        });
    return to_generator_set(gens);
}

struct SyzygyDegrees {
    std::vector<int> degrees;
    bool freenessVerified = false;
};

/// Minimal syzygies of the given forms by explicit kernels in every degree up
/// to kmax (default: three times the largest degree). Throws
/// FreenessCheckFailed when the relation module is not free.
inline SyzygyDegrees syzygies(const std::vector<HomogeneousPoly>& gens, std::optional<int> kmax = std::nullopt) {
    std::vector<ModuleElement> elems;
    int top = 0;
    for (const auto& g : gens) {
        elems.push_back({g.degree(), to_primitive(g.coefficients())});
        top = std::max(top, g.degree());
    }
    const auto res = minimal_syzygies(FreeModule{{0}}, elems, kmax.value_or(3 * top));
    if (!res.free) throw FreenessCheckFailed("syzygies: the relation module is not free");
    SyzygyDegrees out;
    for (const auto& s : res.syzygies) out.degrees.push_back(s.degree);
    std::sort(out.degrees.begin(), out.degrees.end());
    out.freenessVerified = true;
    return out;
}

/// Generators and Betti table of S/I_f.
struct SaturatedResolution {
    std::vector<ModuleElement> generators;  // minimal generators of I_f, ascending degree
    std::size_t e2prime = 0;                // generators of degree d-1 coming from J_f
    BettiTable table;
};

inline SaturatedResolution resolve_saturated(const JacobianData& jd, const SaturationData& sd) {
    SaturatedResolution out;
    const int d = jd.d();
    if (sd.sat_dim(0) == 1) {  // I_f = S, S/I_f = 0
        out.generators.push_back({0, IntVec{1}});
        return out;
    }
    // In degree d-1: complete S_1 I_{d-2} by partials, then by the N generators.
    {
        const int k = d - 1;
        SpanBuilder seen(dim_S(k));
        if (k >= 1)
            for (const auto& v : sd.sat.at(static_cast<std::size_t>(k - 1)).subspace_basis())
                for (int var = 0; var < 3; ++var) seen.insert(std::span<const Rat>(shift_vector(v, k - 1, var)));
        for (const auto& g : jd.gradient()) {
            if (is_zero(std::span<const Integer>(g.coords))) continue;
            if (seen.insert(g.coords)) {
                out.generators.push_back(g);
                ++out.e2prime;
            }
        }
        for (const auto& g : sd.nGenerators)
            if (g.degree == k && !seen.insert(g.coords))
                throw std::logic_error("resolve_saturated: N generator dependent in degree d-1");
    }
    out.generators.insert(out.generators.end(), sd.nGenerators.begin(), sd.nGenerators.end());
    std::stable_sort(out.generators.begin(), out.generators.end(),
                     [](const ModuleElement& a, const ModuleElement& b) { return a.degree < b.degree; });
    std::vector<int> a;
    for (const auto& g : out.generators) a.push_back(g.degree);
    const int kmax = jd.kmax();
    const auto b = free_module_degrees(*std::min_element(a.begin(), a.end()) + 1, kmax, [&](int k) {
        std::size_t n = 0;
        for (int ai : a) n += dim_S(k - ai);
        const std::size_t i = sd.sat_dim(k);
        if (n < i) throw std::logic_error("resolve_saturated: generators do not span I_f");
        return n - i;
    });
    if (!b) throw FreenessCheckFailed("relation module of I_f is not free up to degree " + std::to_string(kmax));
    if (b->size() + 1 != a.size())
        throw KmaxExhausted("found " + std::to_string(b->size()) + " relations among " + std::to_string(a.size()) +
                            " generators of I_f up to degree " + std::to_string(kmax) + "; rerun with a larger kmax");
    out.table = BettiTable({a, *b});
    return out;
}

/// Generators of J_f (a basis of J_{f,d-1} among the partials), their
/// relation module, and the Betti table of S/J_f. When the partials are
/// independent (mdr >= 1) the relation module is AR(f).
struct JacobianResolution {
    std::vector<ModuleElement> partials;     // chosen minimal generators of J_f
    std::vector<ModuleElement> arGenerators; // in (S_m)^r, r = partials.size()
    BettiTable table;
};

inline JacobianResolution resolve_jacobian(const JacobianData& jd) {
    JacobianResolution out;
    const int d = jd.d();
    {
        SpanBuilder seen(dim_S(d - 1));
        for (const auto& g : jd.gradient())
            if (!is_zero(std::span<const Integer>(g.coords)) && seen.insert(g.coords)) out.partials.push_back(g);
    }
    const std::size_t r = out.partials.size();
    const FreeModule F = FreeModule::copies(r);
    const int mmax = jd.kmax() - (d - 1);
    const auto rel_dim = [&](int m) { return r * dim_S(m) - jd.j_dim(m + d - 1); };
    if (r == 3) {
        out.arGenerators = ar_generators(jd);
    } else {
        out.arGenerators = minimal_generators(F, 0, mmax, rel_dim, [&](int m) {
            return detail::column_span(multiples(FreeModule{{0}}, out.partials, m + d - 1), dim_S(m + d - 1)).kernel;
        });
    }
    std::vector<int> alpha;
    for (const auto& g : out.arGenerators) alpha.push_back(g.degree);
    std::vector<int> beta;
    if (!alpha.empty()) {
        const auto syz = free_module_degrees(*std::min_element(alpha.begin(), alpha.end()) + 1, mmax, [&](int m) {
            std::size_t n = 0;
            for (int a : alpha) n += dim_S(m - a);
            const std::size_t rel = rel_dim(m);
            if (n < rel) throw std::logic_error("resolve_jacobian: generators do not span the relation module");
            return n - rel;
        });
        if (!syz) throw FreenessCheckFailed("second syzygies of J_f are not free up to degree " + std::to_string(jd.kmax()));
        beta = *syz;
    }
    for (auto& a : alpha) a += d - 1;
    for (auto& b : beta) b += d - 1;
    out.table = BettiTable({std::vector<int>(r, d - 1), alpha, beta});
    // The Hilbert polynomial of the table must be the constant tau.
    const long long tau = static_cast<long long>(tjurina(jd));
    for (int k = 10 * jd.kmax() + 10; k < 10 * jd.kmax() + 13; ++k)
        if (hilbert_from_betti(out.table, k) != tau)
            throw KmaxExhausted("Betti table of S/J_f is incomplete up to degree " + std::to_string(jd.kmax()) +
                                "; rerun with a larger kmax");
    return out;
}

inline BettiTable betti_saturated(const HomogeneousPoly& f) {
    const JacobianData jd(f, default_kmax(f.degree()));
    return resolve_saturated(jd, saturation_data(jd)).table;
}

inline BettiTable betti_jacobian(const HomogeneousPoly& f) {
    return resolve_jacobian(JacobianData(f, default_kmax(f.degree()))).table;
}

}  // namespace curvesat
