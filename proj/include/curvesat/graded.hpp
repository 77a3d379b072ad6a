#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "curvesat/exactla.hpp"
#include "curvesat/poly.hpp"

namespace curvesat {

/// Coordinates on a quotient A/V of a coordinate space A = Q^n.
///
/// `rows` is a c x n matrix that maps A onto Q^c with kernel exactly V, and
/// restricts to the identity on the columns listed in `basis`: the unit
/// vectors at those positions (monomials, for a graded piece) project to a
/// basis of A/V.
struct QuotientMap {
    std::size_t ambient = 0;
    std::vector<std::size_t> basis;
    std::vector<RatVec> rows;

    std::size_t codim() const noexcept { return rows.size(); }
    std::size_t subspace_dim() const noexcept { return ambient - rows.size(); }

    /// The quotient of A by the span of the given vectors.
    static QuotientMap modulo_span(std::vector<IntVec> spanning, std::size_t n) {
        QuotientMap q;
        q.ambient = n;
        const Echelon e = echelon_form(std::move(spanning), n, true);
        q.basis = e.free_columns();
        std::vector<std::size_t> slot(n, n);
        for (std::size_t i = 0; i < q.basis.size(); ++i) slot[q.basis[i]] = i;
        q.rows.assign(q.basis.size(), RatVec(n));
        for (std::size_t i = 0; i < q.basis.size(); ++i) q.rows[i][q.basis[i]] = 1;
        // e_{p} is congruent to -sum_f (R[f]/R[p]) e_f modulo V.
        for (std::size_t r = 0; r < e.rows.size(); ++r) {
            const auto& row = e.rows[r];
            const std::size_t p = e.pivots[r];
            for (std::size_t f : q.basis)
                if (sgn(row[f]) != 0) q.rows[slot[f]][p] = -Rat(row[f], row[p]);
        }
        for (auto& row : q.rows)
            for (auto& x : row) x.canonicalize();
        return q;
    }

    /// The quotient of A by the common kernel of the given functionals.
    static QuotientMap from_functionals(std::vector<IntVec> functionals, std::size_t n) {
        QuotientMap q;
        q.ambient = n;
        const Echelon e = echelon_form(std::move(functionals), n, true);
        q.basis = e.pivots;
        for (std::size_t r = 0; r < e.rows.size(); ++r) {
            RatVec row(n);
            const Integer& p = e.rows[r][e.pivots[r]];
            for (std::size_t j = 0; j < n; ++j)
                if (sgn(e.rows[r][j]) != 0) row[j] = Rat(e.rows[r][j], p);
            for (auto& x : row) x.canonicalize();
            q.rows.push_back(std::move(row));
        }
        return q;
    }

    /// Identity quotient (V = 0).
    static QuotientMap full(std::size_t n) {
        QuotientMap q;
        q.ambient = n;
        for (std::size_t i = 0; i < n; ++i) {
            q.basis.push_back(i);
            RatVec row(n);
            row[i] = 1;
            q.rows.push_back(std::move(row));
        }
        return q;
    }

    /// Zero quotient (V = A).
    static QuotientMap zero(std::size_t n) {
        QuotientMap q;
        q.ambient = n;
        return q;
    }

    template <class Vec>
    RatVec apply(const Vec& v) const {
        RatVec out(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < ambient; ++j)
                if (sgn(v[j]) != 0 && sgn(rows[i][j]) != 0) out[i] += rows[i][j] * v[j];
        return out;
    }

    template <class Vec>
    bool contains(const Vec& v) const {
        return is_zero(std::span<const Rat>(apply(v)));
    }

    /// Explicit basis of V: e_j - sum_i rows[i][j] e_{basis[i]} for every j
    /// outside `basis`, in increasing j.
    std::vector<RatVec> subspace_basis() const {
        std::vector<bool> is_basis(ambient, false);
        for (std::size_t b : basis) is_basis[b] = true;
        std::vector<RatVec> out;
        for (std::size_t j = 0; j < ambient; ++j) {
            if (is_basis[j]) continue;
            RatVec v(ambient);
            v[j] = 1;
            for (std::size_t i = 0; i < rows.size(); ++i) v[basis[i]] = -rows[i][j];
            out.push_back(std::move(v));
        }
        return out;
    }

    /// Column j of the coordinate matrix (the class of e_j).
    RatVec column(std::size_t j) const {
        RatVec out(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) out[i] = rows[i][j];
        return out;
    }
};

/// Per-degree bases of a graded subspace of S (ambientRank 1) or S^3
/// (ambientRank 3). Coordinates in (S_k)^3 are three consecutive blocks.
struct GradedSubspace {
    int ambientRank = 1;
    std::map<int, std::vector<RatVec>> slices;

    std::size_t dim(int k) const {
        auto it = slices.find(k);
        return it == slices.end() ? 0 : it->second.size();
    }
    std::size_t ambient_dim(int k) const { return static_cast<std::size_t>(ambientRank) * dim_S(k); }
};

/// Multiplication by the variable `var` from (A_k)^e into (A_{k+1})^e, on
/// coordinate vectors (block structure preserved).
template <class Vec>
Vec shift_vector(const Vec& v, int k, int var, int blocks = 1) {
    const std::size_t from = dim_S(k);
    const std::size_t to = dim_S(k + 1);
    const auto table = shift_table(k, var);
    Vec out(to * static_cast<std::size_t>(blocks));
    for (int b = 0; b < blocks; ++b)
        for (std::size_t i = 0; i < from; ++i) out[b * to + table[i]] = v[b * from + i];
    return out;
}

/// Multiplication by a linear form l = (l0, l1, l2) on coordinate vectors.
template <class Vec, class Scalar>
Vec multiply_linear(const Vec& v, int k, const Scalar& l0, const Scalar& l1, const Scalar& l2, int blocks = 1) {
    const std::size_t to = dim_S(k + 1);
    Vec out(to * static_cast<std::size_t>(blocks));
    const Scalar* ls[3] = {&l0, &l1, &l2};
    for (int var = 0; var < 3; ++var) {
        if (sgn(*ls[var]) == 0) continue;
        Vec s = shift_vector(v, k, var, blocks);
        for (std::size_t i = 0; i < s.size(); ++i)
            if (sgn(s[i]) != 0) out[i] += *ls[var] * s[i];
    }
    return out;
}

}  // namespace curvesat
