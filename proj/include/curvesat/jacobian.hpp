#pragma once

// Graded data of the Jacobian ideal J_f = (f_x, f_y, f_z): the pieces J_k,
// the Milnor algebra M(f) = S/J_f, the syzygy module
// AR(f) = {(a,b,c) : a f_x + b f_y + c f_z = 0}, and the invariants read off
// from them (tau, mdr, ct).

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "curvesat/errors.hpp"
#include "curvesat/exactla.hpp"
#include "curvesat/graded.hpp"
#include "curvesat/module.hpp"
#include "curvesat/parallel.hpp"
#include "curvesat/poly.hpp"

namespace curvesat {

/// Scan bound used when none is given.
constexpr int default_kmax(int d) noexcept { return std::max(3 * d - 3, 0); }

/// Coefficients of ((1 - t^{d-1}) / (1 - t))^3 for k = 0..kmax, the Hilbert
/// function of M(f_s) for any smooth curve f_s = 0 of degree d.
inline std::vector<std::size_t> smooth_reference_dims(int d, int kmax) {
    if (d < 1) throw std::invalid_argument("smooth_reference_dims: degree must be at least 1");
    std::vector<std::size_t> out(static_cast<std::size_t>(std::max(kmax, -1) + 1));
    const int e = d - 2;  // each factor is 1 + t + ... + t^e
    for (int k = 0; k <= kmax; ++k) {
        std::size_t n = 0;
        for (int i = 0; i <= e && i <= k; ++i)
            for (int j = 0; j <= e && i + j <= k; ++j)
                if (k - i - j <= e) ++n;
        out[static_cast<std::size_t>(k)] = n;
    }
    return out;
}

/// The pieces J_k, as quotient maps S_k -> M(f)_k, for k = 0..top.
class JacobianData {
public:
    JacobianData(const HomogeneousPoly& f, int kmax) : f_(f), d_(f.degree()) {
        if (d_ < 1) throw std::invalid_argument("JacobianData: degree must be at least 1");
        if (f.is_zero()) throw ZeroPolynomial();
        kmax_ = kmax;
        if (kmax_ < d_ - 1) throw std::invalid_argument("JacobianData: kmax must be at least d-1");
        top_ = std::max({kmax_, 3 * d_ - 4, 2 * d_ - 2, d_});
        const HomogeneousPoly g = from_integers(d_, integral_coefficients(f));
        const auto p = partials(g);
        for (int v = 0; v < 3; ++v) grad_[v] = to_primitive_keep_scale(p[v].coefficients());
        milnor_.resize(static_cast<std::size_t>(top_ + 1));
        parallel_for(milnor_.size(), [&](std::size_t i) {
            const int k = static_cast<int>(i);
            if (k < d_ - 1) {
                milnor_[i] = QuotientMap::full(dim_S(k));
                return;
            }
            auto span = multiples(FreeModule{{0}}, gradient(), k);
            std::erase_if(span, [](const IntVec& v) { return is_zero(std::span<const Integer>(v)); });
            milnor_[i] = QuotientMap::modulo_span(std::move(span), dim_S(k));
        });
    }

    const HomogeneousPoly& f() const noexcept { return f_; }
    int d() const noexcept { return d_; }
    int T() const noexcept { return 3 * d_ - 6; }
    int kmax() const noexcept { return kmax_; }
    /// Last degree with computed data: max(kmax, 3d-4, 2d-2).
    int top() const noexcept { return top_; }

    /// Partial derivatives of the primitive integral multiple of f, each
    /// as an element of degree d-1 (possibly zero).
    std::vector<ModuleElement> gradient() const {
        return {{d_ - 1, grad_[0]}, {d_ - 1, grad_[1]}, {d_ - 1, grad_[2]}};
    }

    const QuotientMap& milnor_map(int k) const { return milnor_.at(checked(k)); }
    std::size_t m_dim(int k) const { return k < 0 ? 0 : milnor_.at(checked(k)).codim(); }
    std::size_t j_dim(int k) const { return dim_S(k) - m_dim(k); }
    /// dim AR(f)_m by rank-nullity.
    std::size_t ar_dim(int m) const { return m < 0 ? 0 : 3 * dim_S(m) - j_dim(m + d_ - 1); }

    /// Explicit basis of AR(f)_m, in (S_m)^3 with blocks a, b, c.
    std::vector<IntVec> ar_basis(int m) const {
        checked(m + d_ - 1);
        return detail::column_span(multiples(FreeModule{{0}}, gradient(), m + d_ - 1), dim_S(m + d_ - 1)).kernel;
    }

private:
    static IntVec to_primitive_keep_scale(const RatVec& v) {
        IntVec out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i].get_den() != 1) throw std::logic_error("JacobianData: non-integral partial");
            out[i] = v[i].get_num();
        }
        return out;
    }

    std::size_t checked(int k) const {
        if (k < 0 || k > top_) throw std::out_of_range("JacobianData: degree " + std::to_string(k) + " out of range");
        return static_cast<std::size_t>(k);
    }

    HomogeneousPoly f_;
    int d_;
    int kmax_ = 0;
    int top_ = 0;
    std::array<IntVec, 3> grad_;
    std::vector<QuotientMap> milnor_;
};

struct CurveInvariants {
    int d = 0;
    int T = 0;
    int mdr = 0;
    std::size_t tau = 0;
    std::vector<std::size_t> mDims;       // k = 0..kmax
    std::vector<std::size_t> smoothDims;  // k = 0..kmax
    std::optional<int> ct;                // absent for smooth curves
};

/// Global Tjurina number: the common value of dim M(f)_k at k = 3d-5, 3d-4.
inline std::size_t tjurina(const JacobianData& jd) {
    const int k = std::max(3 * jd.d() - 5, 0);
    const std::size_t a = jd.m_dim(k);
    const std::size_t b = jd.m_dim(k + 1);
    if (a != b) throw NonReducedInput(k, a, b);
    return a;
}

/// Least m with AR(f)_m != 0.
inline int mdr(const JacobianData& jd) {
    for (int m = 0; m <= jd.d() - 1; ++m)
        if (jd.ar_dim(m) > 0) return m;
    throw std::logic_error("mdr: no relation up to degree d-1");
}

/// Coincidence threshold: the largest q with dim M(f)_k = dim M(f_s)_k for all k <= q.
inline int ct(const JacobianData& jd) {
    if (tjurina(jd) == 0) throw SmoothCurve();
    const auto ref = smooth_reference_dims(jd.d(), jd.top());
    for (int k = 0; k <= jd.top(); ++k)
        if (jd.m_dim(k) != ref[static_cast<std::size_t>(k)]) return k - 1;
    throw KmaxExhausted("ct: Milnor algebra agrees with the smooth reference up to the scan bound");
}

inline std::vector<std::size_t> milnor_dims(const JacobianData& jd) {
    std::vector<std::size_t> out;
    for (int k = 0; k <= jd.kmax(); ++k) out.push_back(jd.m_dim(k));
    return out;
}

inline CurveInvariants curve_invariants(const JacobianData& jd) {
    CurveInvariants inv;
    inv.d = jd.d();
    inv.T = jd.T();
    inv.tau = tjurina(jd);
    inv.mdr = mdr(jd);
    inv.mDims = milnor_dims(jd);
    inv.smoothDims = smooth_reference_dims(jd.d(), jd.kmax());
    if (inv.tau > 0) inv.ct = ct(jd);
    return inv;
}

/// Bases of J_{f,k}, k = 0..kmax.
inline GradedSubspace jacobian_slices(const JacobianData& jd) {
    GradedSubspace g;
    g.ambientRank = 1;
    for (int k = 0; k <= jd.kmax(); ++k) {
        auto b = jd.milnor_map(k).subspace_basis();
        if (!b.empty()) g.slices[k] = std::move(b);
    }
    return g;
}

/// Bases of AR(f)_m for m + d - 1 <= kmax.
inline GradedSubspace ar_slices(const JacobianData& jd) {
    GradedSubspace g;
    g.ambientRank = 3;
    for (int m = 0; m + jd.d() - 1 <= jd.kmax(); ++m) {
        auto b = jd.ar_basis(m);
        if (b.empty()) continue;
        auto& slice = g.slices[m];
        for (const auto& v : b) slice.push_back(to_rational(v));
    }
    return g;
}

/// Minimal generators of AR(f), scanning m up to kmax - (d-1).
inline std::vector<ModuleElement> ar_generators(const JacobianData& jd) {
    return minimal_generators(
        FreeModule::copies(3), 0, jd.kmax() - jd.d() + 1, [&](int m) { return jd.ar_dim(m); },
        [&](int m) { return jd.ar_basis(m); });
}

inline std::vector<int> ar_min_generators(const JacobianData& jd) {
    std::vector<int> out;
    for (const auto& g : ar_generators(jd)) out.push_back(g.degree);
    return out;
}

// Convenience forms taking the polynomial directly.

inline GradedSubspace jacobian_slices(const HomogeneousPoly& f, int kmax) { return jacobian_slices(JacobianData(f, kmax)); }

inline std::vector<std::size_t> milnor_dims(const HomogeneousPoly& f, int kmax) {
    return milnor_dims(JacobianData(f, kmax));
}

inline std::size_t tjurina(const HomogeneousPoly& f) { return tjurina(JacobianData(f, default_kmax(f.degree()))); }

inline int mdr(const HomogeneousPoly& f) { return mdr(JacobianData(f, default_kmax(f.degree()))); }

inline GradedSubspace ar_slices(const HomogeneousPoly& f, int kmax) { return ar_slices(JacobianData(f, kmax)); }

inline std::vector<int> ar_min_generators(const HomogeneousPoly& f) {
    return ar_min_generators(JacobianData(f, default_kmax(f.degree())));
}

inline int ct(const HomogeneousPoly& f) { return ct(JacobianData(f, default_kmax(f.degree()))); }

}  // namespace curvesat
