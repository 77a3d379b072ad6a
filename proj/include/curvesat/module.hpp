#pragma once

// Graded submodules of free modules over S, handled one degree at a time.
//
// A free module F = (+)_i S(-shift_i) is stored by its shifts; an element of
// degree k is the concatenation of its components, component i being a
// coordinate vector in S_{k - shift_i}. Minimal generators are found by
// Nakayama counts (dim V_k - dim S_1 V_{k-1}), and syzygies as kernels of the
// map (+)_g S_{k - deg g} -> F_k given by the generators.

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "curvesat/errors.hpp"
#include "curvesat/exactla.hpp"
#include "curvesat/poly.hpp"

namespace curvesat {

struct FreeModule {
    std::vector<int> shifts;

    std::size_t rank() const noexcept { return shifts.size(); }

    std::size_t dim(int k) const {
        std::size_t n = 0;
        for (int s : shifts) n += dim_S(k - s);
        return n;
    }

    std::size_t offset(int k, std::size_t component) const {
        std::size_t n = 0;
        for (std::size_t i = 0; i < component; ++i) n += dim_S(k - shifts[i]);
        return n;
    }

    static FreeModule copies(std::size_t n, int shift = 0) { return {std::vector<int>(n, shift)}; }
};

struct ModuleElement {
    int degree = 0;
    IntVec coords;

    friend bool operator==(const ModuleElement&, const ModuleElement&) = default;
};

/// mu * e, where e has degree k in F and mu is a monomial.
inline IntVec multiply_monomial(const FreeModule& f, const ModuleElement& e, const Monomial& mu) {
    const int k = e.degree;
    const int kk = k + mu.degree();
    IntVec out(f.dim(kk));
    std::size_t src = 0;
    std::size_t dst = 0;
    for (int s : f.shifts) {
        const int deg = k - s;
        if (deg >= 0) {
            const auto basis = monomial_basis(deg);
            for (std::size_t j = 0; j < basis.size(); ++j)
                if (sgn(e.coords[src + j]) != 0) out[dst + monomial_index(basis[j] * mu)] = e.coords[src + j];
        }
        src += dim_S(deg);
        dst += dim_S(kk - s);
    }
    return out;
}

/// All products mu * g with deg(mu) = k - deg(g), ordered by generator, then by monomial.
inline std::vector<IntVec> multiples(const FreeModule& f, const std::vector<ModuleElement>& gens, int k) {
    std::vector<IntVec> out;
    for (const auto& g : gens) {
        if (g.degree > k) continue;
        for (const auto& mu : monomial_basis(k - g.degree)) out.push_back(multiply_monomial(f, g, mu));
    }
    return out;
}

/// Evaluate every component of e at a point.
inline RatVec evaluate_components(const FreeModule& f, const ModuleElement& e, const std::array<Rat, 3>& p) {
    RatVec out;
    std::size_t src = 0;
    for (int s : f.shifts) {
        const int deg = e.degree - s;
        Rat acc = 0;
        if (deg >= 0) {
            const auto basis = monomial_basis(deg);
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (sgn(e.coords[src + j]) == 0) continue;
                Rat t = e.coords[src + j];
                for (int i = 0; i < basis[j].ex; ++i) t *= p[0];
                for (int i = 0; i < basis[j].ey; ++i) t *= p[1];
                for (int i = 0; i < basis[j].ez; ++i) t *= p[2];
                acc += t;
            }
        }
        out.push_back(acc);
        src += dim_S(deg);
    }
    return out;
}

/// True when the elements are linearly independent over S, certified by a
/// point where the evaluated matrix has full column rank.
inline bool independent_over_S(const FreeModule& f, const std::vector<ModuleElement>& elems) {
    if (elems.empty()) return true;
    if (elems.size() > f.rank()) return false;
    static const std::array<std::array<int, 3>, 6> points{
        {{1, 2, 3}, {2, -1, 5}, {-3, 7, 2}, {5, 3, -4}, {11, -6, 1}, {-2, 9, 13}}};
    for (const auto& p : points) {
        const std::array<Rat, 3> pt{Rat(p[0]), Rat(p[1]), Rat(p[2])};
        QMatrix m(f.rank(), elems.size());
        for (std::size_t j = 0; j < elems.size(); ++j) {
            const RatVec v = evaluate_components(f, elems[j], pt);
            for (std::size_t i = 0; i < v.size(); ++i) m(i, j) = v[i];
        }
        if (rank(m) == elems.size()) return true;
    }
    return false;
}

namespace detail {

/// Rank of the map given by `columns` and a basis of its kernel.
struct ColumnSpan {
    std::size_t rank = 0;
    std::vector<IntVec> kernel;
};

inline ColumnSpan column_span(const std::vector<IntVec>& columns, std::size_t n) {
    ColumnSpan out;
    if (columns.empty()) return out;
    std::vector<IntVec> rows(n, IntVec(columns.size()));
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (sgn(columns[j][i]) != 0) rows[i][j] = columns[j][i];
    std::erase_if(rows, [](const IntVec& r) { return is_zero(std::span<const Integer>(r)); });
    const Echelon e = echelon_form(std::move(rows), columns.size(), true);
    out.rank = e.rank();
    out.kernel = kernel_from_rref(e);
    return out;
}

/// Picks vectors from `candidates` that extend span(seed); stops after `want`.
inline std::vector<IntVec> extend_span(SpanBuilder& span, const std::vector<IntVec>& candidates, std::size_t want) {
    std::vector<IntVec> picked;
    for (const auto& c : candidates) {
        if (picked.size() == want) break;
        if (span.insert(c)) {
            IntVec v = c;
            make_primitive(v);
            picked.push_back(std::move(v));
        }
    }
    return picked;
}

}  // namespace detail

/// Minimal syzygies among given generators, degree by degree up to kmax.
///
/// With `image_dim` (the dimension in degree k of the module the generators
/// span) and once the syzygies found are S-independent, a degree k is settled
/// without elimination when dim Syz_k = sum_j dim S_{k - s_j}.
struct SyzygyResult {
    FreeModule source;                      // (+) S(-deg g_i)
    std::vector<ModuleElement> syzygies;   // elements of `source`
    bool free = true;                       // found syzygies are S-independent
    std::vector<int> explicit_degrees;      // degrees settled by elimination
};

inline SyzygyResult minimal_syzygies(const FreeModule& f, const std::vector<ModuleElement>& gens, int kmax,
                                     const std::function<std::optional<std::size_t>(int)>& image_dim = {},
                                     std::optional<std::size_t> expected_rank = std::nullopt) {
    SyzygyResult res;
    for (const auto& g : gens) res.source.shifts.push_back(g.degree);
    if (gens.empty()) return res;
    const int kmin = *std::min_element(res.source.shifts.begin(), res.source.shifts.end()) + 1;
    bool certified_free = false;
    for (int k = kmin; k <= kmax; ++k) {
        const std::size_t found_dim = [&] {
            std::size_t n = 0;
            for (const auto& s : res.syzygies) n += dim_S(k - s.degree);
            return n;
        }();
        if (image_dim && expected_rank && res.syzygies.size() == *expected_rank) {
            if (!certified_free) certified_free = independent_over_S(res.source, res.syzygies);
            if (certified_free) {
                if (auto im = image_dim(k)) {
                    const std::size_t syz_dim = res.source.dim(k) - *im;
                    if (syz_dim == found_dim) continue;
                }
            }
        }
        res.explicit_degrees.push_back(k);
        const auto span = detail::column_span(multiples(f, gens, k), f.dim(k));
        SpanBuilder seen(res.source.dim(k));
        for (auto& v : multiples(res.source, res.syzygies, k)) seen.insert(std::move(v));
        if (seen.dim() != found_dim) res.free = false;
        const std::size_t fresh = span.kernel.size() - seen.dim();
        for (auto& v : detail::extend_span(seen, span.kernel, fresh)) res.syzygies.push_back({k, std::move(v)});
    }
    if (res.free && !res.syzygies.empty()) res.free = independent_over_S(res.source, res.syzygies);
    return res;
}

/// Minimal generators of a graded submodule V of F, found degree by degree in
/// [kmin, kmax]. `dim_of(k)` gives dim V_k; `basis_of(k)` an explicit basis,
/// requested only in degrees where new generators appear. A degree where the
/// multiples of the generators found so far already have rank dim V_k modulo
/// a prime needs no exact elimination.
inline std::vector<ModuleElement> minimal_generators(const FreeModule& f, int kmin, int kmax,
                                                     const std::function<std::size_t(int)>& dim_of,
                                                     const std::function<std::vector<IntVec>(int)>& basis_of) {
    std::vector<ModuleElement> gens;
    for (int k = kmin; k <= kmax; ++k) {
        const std::size_t target = dim_of(k);
        if (target == 0) continue;
        const std::size_t n = f.dim(k);
        auto mult = multiples(f, gens, k);
        if (rank_mod_p(mult, n) == target) continue;
        SpanBuilder seen(n);
        for (auto& v : mult) seen.insert(std::move(v));
        if (seen.dim() > target) throw std::logic_error("minimal_generators: generators leave the submodule");
        const std::size_t fresh = target - seen.dim();
        if (fresh == 0) continue;
        const auto picked = detail::extend_span(seen, basis_of(k), fresh);
        if (picked.size() != fresh) throw std::logic_error("minimal_generators: basis does not span the submodule");
        for (const auto& v : picked) gens.push_back({k, v});
    }
    return gens;
}

/// Degrees of the minimal generators of a module Z that is known to be free,
/// from its Hilbert function alone: minimal generators of a free graded
/// module form a basis, so the new generators in degree k number
/// dim Z_k - sum_{j found} dim S_{k - s_j}. Returns nullopt when that count
/// is ever negative (Z is not free).
inline std::optional<std::vector<int>> free_module_degrees(int kmin, int kmax,
                                                           const std::function<std::size_t(int)>& dim_of) {
    std::vector<int> degrees;
    for (int k = kmin; k <= kmax; ++k) {
        std::size_t found = 0;
        for (int s : degrees) found += dim_S(k - s);
        const std::size_t have = dim_of(k);
        if (have < found) return std::nullopt;
        degrees.insert(degrees.end(), have - found, k);
    }
    return degrees;
}

}  // namespace curvesat
