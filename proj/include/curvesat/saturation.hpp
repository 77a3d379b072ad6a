#pragma once

// Saturation of graded ideals with respect to m = (x, y, z), by descending
// recursion: once I_k^sat is known, I_{k-1}^sat = {g : x g, y g, z g in I_k^sat}.
// For a Jacobian ideal the recursion starts at T + 1 = 3d - 5, above which
// J_f is saturated. N = I^sat / I is handled in the coordinates of S/I.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "curvesat/errors.hpp"
#include "curvesat/exactla.hpp"
#include "curvesat/graded.hpp"
#include "curvesat/jacobian.hpp"
#include "curvesat/module.hpp"
#include "curvesat/parallel.hpp"
#include "curvesat/poly.hpp"

namespace curvesat {

struct SaturationData {
    int seed = 0;                       // I^sat_k = I_k assumed for k >= seed
    std::vector<QuotientMap> ideal;     // S_k -> S_k / I_k, k = 0..top
    std::vector<QuotientMap> sat;       // S_k -> S_k / I^sat_k, k = 0..top
    std::vector<std::size_t> nTable;    // n_k = dim N_k, k = 0..T
    std::optional<int> sigma;           // least k with n_k != 0
    std::size_t nu = 0;                 // max n_k
    std::vector<std::vector<RatVec>> nBasis;  // bases of N_k in S_k/I_k coordinates, k = 0..T
    std::vector<ModuleElement> nGenerators;   // minimal generators of N, lifted to S
    std::vector<int> nGenDegrees;

    int top() const noexcept { return static_cast<int>(ideal.size()) - 1; }
    int T() const noexcept { return static_cast<int>(nTable.size()) - 1; }
    std::size_t sat_dim(int k) const { return k < 0 ? 0 : dim_S(k) - sat.at(static_cast<std::size_t>(k)).codim(); }
    std::size_t n(int k) const {
        return k < 0 || k >= static_cast<int>(nTable.size()) ? 0 : nTable[static_cast<std::size_t>(k)];
    }
};

/// The polynomial in S_k represented by coordinates v of S_k / I_k.
inline RatVec lift(const QuotientMap& q, const RatVec& v) {
    RatVec out(q.ambient);
    for (std::size_t i = 0; i < q.basis.size(); ++i) out[q.basis[i]] = v[i];
    return out;
}

/// S_k -> S_k / I_k for an ideal generated by the given elements, k = 0..top.
inline std::vector<QuotientMap> ideal_quotient_maps(const std::vector<ModuleElement>& gens, int top) {
    std::vector<QuotientMap> out(static_cast<std::size_t>(top + 1));
    parallel_for(out.size(), [&](std::size_t i) {
        const int k = static_cast<int>(i);
        auto span = multiples(FreeModule{{0}}, gens, k);
        std::erase_if(span, [](const IntVec& v) { return is_zero(std::span<const Integer>(v)); });
        out[i] = span.empty() ? QuotientMap::full(dim_S(k)) : QuotientMap::modulo_span(std::move(span), dim_S(k));
    });
    return out;
}

/// One step of the recursion: the quotient for {g in S_k : S_1 g in V_{k+1}}.
inline QuotientMap saturation_step(const QuotientMap& above, int k) {
    const std::size_t n = dim_S(k);
    if (above.codim() == 0) return QuotientMap::zero(n);
    std::vector<IntVec> functionals;
    for (int var = 0; var < 3; ++var) {
        const auto table = shift_table(k, var);
        for (const auto& row : above.rows) {
            RatVec phi(n);
            for (std::size_t j = 0; j < n; ++j) phi[j] = row[table[j]];
            if (!is_zero(std::span<const Rat>(phi))) functionals.push_back(to_primitive(phi));
        }
    }
    if (functionals.empty()) return QuotientMap::zero(n);
    return QuotientMap::from_functionals(std::move(functionals), n);
}

namespace detail {

/// Fills the N data of `sd` for degrees 0..range, given ideal and sat.
inline void fill_module_data(SaturationData& sd, int range) {
    sd.nTable.assign(static_cast<std::size_t>(std::max(range + 1, 0)), 0);
    sd.nBasis.assign(sd.nTable.size(), {});
    for (int k = 0; k <= range; ++k) {
        const auto& qi = sd.ideal[static_cast<std::size_t>(k)];
        const auto& qs = sd.sat[static_cast<std::size_t>(k)];
        if (qs.codim() > qi.codim()) throw std::logic_error("saturation: saturation smaller than the ideal");
        const std::size_t nk = qi.codim() - qs.codim();
        sd.nTable[static_cast<std::size_t>(k)] = nk;
        if (nk == 0) continue;
        // N_k = kernel of S_k/I_k -> S_k/I^sat_k.
        QMatrix p(qs.codim(), qi.codim());
        for (std::size_t i = 0; i < qs.codim(); ++i)
            for (std::size_t j = 0; j < qi.codim(); ++j) p(i, j) = qs.rows[i][qi.basis[j]];
        auto basis = kernel_basis(p);
        if (basis.size() != nk) throw std::logic_error("saturation: inconsistent module dimension");
        sd.nBasis[static_cast<std::size_t>(k)] = std::move(basis);
    }
    sd.sigma.reset();
    sd.nu = 0;
    for (std::size_t k = 0; k < sd.nTable.size(); ++k) {
        if (sd.nTable[k] != 0 && !sd.sigma) sd.sigma = static_cast<int>(k);
        sd.nu = std::max(sd.nu, sd.nTable[k]);
    }
    // Nakayama counts on N.
    sd.nGenerators.clear();
    sd.nGenDegrees.clear();
    for (int k = 0; k <= range; ++k) {
        const std::size_t nk = sd.nTable[static_cast<std::size_t>(k)];
        if (nk == 0) continue;
        const auto& qi = sd.ideal[static_cast<std::size_t>(k)];
        SpanBuilder seen(qi.codim());
        if (k > 0) {
            const auto& below = sd.ideal[static_cast<std::size_t>(k - 1)];
            for (const auto& v : sd.nBasis[static_cast<std::size_t>(k - 1)]) {
                const RatVec g = lift(below, v);
                for (int var = 0; var < 3; ++var) seen.insert(std::span<const Rat>(qi.apply(shift_vector(g, k - 1, var))));
            }
        }
        if (seen.dim() > nk) throw std::logic_error("saturation: S_1 N_{k-1} larger than N_k");
        std::vector<IntVec> candidates;
        for (const auto& v : sd.nBasis[static_cast<std::size_t>(k)]) candidates.push_back(to_primitive(v));
        const std::size_t fresh = nk - seen.dim();
        const auto picked = extend_span(seen, candidates, fresh);
        if (picked.size() != fresh) throw std::logic_error("saturation: N_k basis does not span");
        for (const auto& v : picked) {
            sd.nGenerators.push_back({k, to_primitive(lift(qi, to_rational(v)))});
            sd.nGenDegrees.push_back(k);
        }
    }
}

inline SaturationData descend(std::vector<QuotientMap> ideal, int seed, int range) {
    SaturationData sd;
    sd.seed = seed;
    sd.sat = ideal;
    for (int k = seed - 1; k >= 0; --k)
        sd.sat[static_cast<std::size_t>(k)] = saturation_step(sd.sat[static_cast<std::size_t>(k + 1)], k);
    sd.ideal = std::move(ideal);
    fill_module_data(sd, range);
    return sd;
}

}  // namespace detail

/// Saturation of J_f and the Jacobian module N(f) = I_f / J_f.
inline SaturationData saturation_data(const JacobianData& jd) {
    std::vector<QuotientMap> ideal;
    for (int k = 0; k <= jd.top(); ++k) ideal.push_back(jd.milnor_map(k));
    tjurina(jd);  // rejects non-reduced input before any further work
    const int T = jd.T();
    return detail::descend(std::move(ideal), std::max(T + 1, 0), T);
}

/// Bases of I_{f,k}, k = 0..kmax.
inline GradedSubspace saturated_slices(const SaturationData& sd, int kmax) {
    GradedSubspace g;
    for (int k = 0; k <= std::min(kmax, sd.top()); ++k) {
        auto b = sd.sat[static_cast<std::size_t>(k)].subspace_basis();
        if (!b.empty()) g.slices[k] = std::move(b);
    }
    return g;
}

inline GradedSubspace saturate(const HomogeneousPoly& f, int kmax) {
    const JacobianData jd(f, kmax);
    return saturated_slices(saturation_data(jd), kmax);
}

inline SaturationData n_table(const HomogeneousPoly& f) {
    return saturation_data(JacobianData(f, default_kmax(f.degree())));
}

inline std::vector<int> n_min_generators(const HomogeneousPoly& f) { return n_table(f).nGenDegrees; }

/// Saturation of an ideal generated by three linearly independent forms of a
/// common degree e. The recursion starts at kmax (default 3e); the result is
/// accepted only if N vanishes from 3e - 2 up to kmax. N is tabulated for
/// k = 0..3e - 3.
inline SaturationData saturate_three_forms(const HomogeneousPoly& g1, const HomogeneousPoly& g2,
                                           const HomogeneousPoly& g3, std::optional<int> kmax = std::nullopt) {
    const int e = g1.degree();
    if (g2.degree() != e || g3.degree() != e) throw std::invalid_argument("saturate_three_forms: degrees differ");
    if (span_rank({g1.coefficients(), g2.coefficients(), g3.coefficients()}, dim_S(e)) != 3)
        throw std::invalid_argument("saturate_three_forms: forms are linearly dependent");
    const int top = kmax.value_or(3 * e);
    const int base = 3 * e - 2;
    if (top < base + 1) throw std::invalid_argument("saturate_three_forms: kmax must be at least 3e - 1");
    std::vector<ModuleElement> gens;
    for (const auto* g : {&g1, &g2, &g3}) gens.push_back({e, to_primitive(g->coefficients())});
    auto ideal = ideal_quotient_maps(gens, top);
    const std::size_t h0 = ideal[static_cast<std::size_t>(base)].codim();
    const std::size_t h1 = ideal[static_cast<std::size_t>(base + 1)].codim();
    if (h0 != h1 || h0 == 0)
        throw NotCodimensionTwo("Hilbert function of S/I is " + std::to_string(h0) + ", " + std::to_string(h1) +
                                " in degrees " + std::to_string(base) + ", " + std::to_string(base + 1) +
                                "; expected a nonzero constant");
    SaturationData sd = detail::descend(std::move(ideal), top, 3 * e - 3);
    for (int k = base; k <= top; ++k)
        if (sd.ideal[static_cast<std::size_t>(k)].codim() != sd.sat[static_cast<std::size_t>(k)].codim())
            throw BaseWindowNotFound("N(I) is nonzero in degree " + std::to_string(k) + ", at or above 3e - 2 = " +
                                     std::to_string(base));
    return sd;
}

/// Ranks of multiplication by a linear form on N.
struct LefschetzReport {
    std::vector<std::size_t> ranks;  // rank of N_s -> N_{s+1}, s = 0..T-1
    bool injectiveLower = true;      // injective for s < T/2
    bool surjectiveUpper = true;     // surjective for s >= floor(T/2)

    bool holds() const noexcept { return injectiveLower && surjectiveUpper; }
};

inline LefschetzReport lefschetz_check(const SaturationData& sd, const HomogeneousPoly& l) {
    if (l.degree() != 1 || l.is_zero()) throw std::invalid_argument("lefschetz_check: expected a nonzero linear form");
    const auto& c = l.coefficients();
    LefschetzReport r;
    const int T = sd.T();
    for (int s = 0; s < T; ++s) {
        const auto& below = sd.ideal[static_cast<std::size_t>(s)];
        const auto& above = sd.ideal[static_cast<std::size_t>(s + 1)];
        SpanBuilder image(above.codim());
        for (const auto& v : sd.nBasis[static_cast<std::size_t>(s)])
            image.insert(std::span<const Rat>(above.apply(multiply_linear(lift(below, v), s, c[0], c[1], c[2]))));
        const std::size_t rk = image.dim();
        r.ranks.push_back(rk);
        if (2 * s < T && rk != sd.n(s)) r.injectiveLower = false;
        if (s >= T / 2 && rk != sd.n(s + 1)) r.surjectiveUpper = false;
    }
    return r;
}

inline LefschetzReport lefschetz_check(const HomogeneousPoly& f, const HomogeneousPoly& l) {
    return lefschetz_check(n_table(f), l);
}

}  // namespace curvesat
