#pragma once

// Exact linear algebra over the rationals.
//
// Scalars are GMP rationals. Matrices handed to the elimination routines are
// first scaled row by row to primitive integer vectors; elimination is then
// fraction free: a row update is  r_i <- (p/g) r_i - (c/g) r_p  followed by
// division of r_i by its content. Among the candidate rows for a pivot
// column, the one whose pivot entry has the fewest bits is chosen (ties go to
// the lowest row). Pivot columns are always taken left to right, so the
// reduced echelon form, and everything derived from it, does not depend on
// which row supplied a pivot.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "curvesat/errors.hpp"

namespace curvesat {

using Integer = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rat>;

/// Dense row-major matrix of rationals.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    QMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_)
            throw std::invalid_argument("QMatrix: entry count does not match shape");
    }

    static QMatrix identity(std::size_t n) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static QMatrix from_rows(const std::vector<RatVec>& rows, std::size_t cols) {
        QMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i].at(j);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::span<const Rat> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }
    const std::vector<Rat>& entries() const noexcept { return entries_; }

    QMatrix transpose() const {
        QMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    RatVec operator*(std::span<const Rat> v) const {
        if (v.size() != cols_) throw std::invalid_argument("QMatrix: dimension mismatch");
        RatVec out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (sgn(v[j]) != 0) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> entries_;
};

// ---------------------------------------------------------------------------
// Integer vector helpers

inline bool is_zero(std::span<const Integer> v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; });
}

inline bool is_zero(std::span<const Rat> v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return sgn(x) == 0; });
}

/// Divide by the gcd of the entries; make the first nonzero entry positive.
inline void make_primitive(IntVec& v) {
    Integer g = 0;
    std::size_t first = v.size();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) == 0) continue;
        if (first == v.size()) first = i;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[i].get_mpz_t());
        if (g == 1) break;
    }
    if (first == v.size()) return;
    if (sgn(v[first]) < 0) g = -g;
    if (g == 1) return;
    for (auto& x : v)
        if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

/// Content removal without touching the sign.
inline void remove_content(IntVec& v) {
    Integer g = 0;
    for (const auto& x : v) {
        if (sgn(x) == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) return;
    }
    if (g <= 1) return;
    for (auto& x : v)
        if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

/// The primitive integer vector proportional to v (zero stays zero).
inline IntVec to_primitive(std::span<const Rat> v) {
    Integer l = 1;
    for (const auto& x : v)
        if (sgn(x) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) == 0) continue;
        mpz_divexact(out[i].get_mpz_t(), l.get_mpz_t(), v[i].get_den_mpz_t());
        out[i] *= v[i].get_num();
    }
    make_primitive(out);
    return out;
}

inline RatVec to_rational(std::span<const Integer> v) {
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
    return out;
}

inline std::size_t first_nonzero(std::span<const Integer> v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) return i;
    return v.size();
}

namespace detail {

// target <- (pivot/g) target - (target[col]/g) source, then content removal.
// `source` must vanish before `col`; entries of `target` before `col` are untouched.
inline void eliminate(IntVec& target, const IntVec& source, std::size_t col, Integer& g,
                      Integer& a, Integer& b) {
    mpz_gcd(g.get_mpz_t(), source[col].get_mpz_t(), target[col].get_mpz_t());
    mpz_divexact(a.get_mpz_t(), source[col].get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), target[col].get_mpz_t(), g.get_mpz_t());
    const bool scale = a != 1;
    for (std::size_t j = col + 1; j < target.size(); ++j) {
        if (sgn(source[j]) == 0) {
            if (scale && sgn(target[j]) != 0) mpz_mul(target[j].get_mpz_t(), target[j].get_mpz_t(), a.get_mpz_t());
            continue;
        }
        if (scale) mpz_mul(target[j].get_mpz_t(), target[j].get_mpz_t(), a.get_mpz_t());
        mpz_submul(target[j].get_mpz_t(), b.get_mpz_t(), source[j].get_mpz_t());
    }
    target[col] = 0;
    remove_content(target);
}

}  // namespace detail

/// Row echelon form of a list of integer rows. `rows` holds the nonzero rows,
/// primitive with positive pivot, ordered by strictly increasing pivot column.
struct Echelon {
    std::size_t cols = 0;
    std::vector<IntVec> rows;
    std::vector<std::size_t> pivots;
    bool reduced = false;

    std::size_t rank() const noexcept { return rows.size(); }

    /// Columns that carry no pivot, in increasing order.
    std::vector<std::size_t> free_columns() const {
        std::vector<std::size_t> out;
        std::size_t p = 0;
        for (std::size_t c = 0; c < cols; ++c) {
            if (p < pivots.size() && pivots[p] == c) {
                ++p;
                continue;
            }
            out.push_back(c);
        }
        return out;
    }
};

/// Fraction-free Gaussian elimination. With `reduce`, clears above the pivots
/// too (reduced echelon form, each row primitive with positive pivot).
inline Echelon echelon_form(std::vector<IntVec> m, std::size_t cols, bool reduce = false) {
    for (auto& r : m) {
        if (r.size() != cols) throw std::invalid_argument("echelon_form: ragged rows");
        remove_content(r);
    }
    Echelon e;
    e.cols = cols;
    e.reduced = reduce;
    std::size_t n = m.size();
    std::size_t rank = 0;
    Integer g, a, b;
    for (std::size_t c = 0; c < cols && rank < n; ++c) {
        std::size_t best = n;
        std::size_t best_bits = 0;
        for (std::size_t i = rank; i < n; ++i) {
            if (sgn(m[i][c]) == 0) continue;
            std::size_t bits = mpz_sizeinbase(m[i][c].get_mpz_t(), 2);
            if (best == n || bits < best_bits) {
                best = i;
                best_bits = bits;
            }
        }
        if (best == n) continue;
        std::swap(m[best], m[rank]);
        for (std::size_t i = rank + 1; i < n; ++i)
            if (sgn(m[i][c]) != 0) detail::eliminate(m[i], m[rank], c, g, a, b);
        e.pivots.push_back(c);
        ++rank;
    }
    m.resize(rank);
    if (reduce) {
        for (std::size_t q = rank; q-- > 0;) {
            const std::size_t c = e.pivots[q];
            for (std::size_t i = 0; i < q; ++i)
                if (sgn(m[i][c]) != 0) {
                    // Row i is nonzero before c, so eliminate over the whole row.
                    mpz_gcd(g.get_mpz_t(), m[q][c].get_mpz_t(), m[i][c].get_mpz_t());
                    mpz_divexact(a.get_mpz_t(), m[q][c].get_mpz_t(), g.get_mpz_t());
                    mpz_divexact(b.get_mpz_t(), m[i][c].get_mpz_t(), g.get_mpz_t());
                    for (std::size_t j = e.pivots[i]; j < cols; ++j) {
                        if (a != 1) mpz_mul(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), a.get_mpz_t());
                        if (sgn(m[q][j]) != 0)
                            mpz_submul(m[i][j].get_mpz_t(), b.get_mpz_t(), m[q][j].get_mpz_t());
                    }
                    remove_content(m[i]);
                }
        }
    }
    for (auto& r : m) make_primitive(r);
    e.rows = std::move(m);
    return e;
}

inline std::vector<IntVec> integer_rows(const QMatrix& m) {
    std::vector<IntVec> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_primitive(m.row(i)));
    return rows;
}

/// Kernel of the matrix whose reduced echelon form is `e`: one primitive vector
/// per free column, with a positive entry in that column.
inline std::vector<IntVec> kernel_from_rref(const Echelon& e) {
    if (!e.reduced) throw std::logic_error("kernel_from_rref: echelon form is not reduced");
    std::vector<IntVec> out;
    for (std::size_t f : e.free_columns()) {
        // v_f = L, v_{p_i} = -R_i[f] * L / R_i[p_i]
        Integer l = 1;
        for (std::size_t i = 0; i < e.rows.size(); ++i)
            if (sgn(e.rows[i][f]) != 0)
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.rows[i][e.pivots[i]].get_mpz_t());
        IntVec v(e.cols);
        v[f] = l;
        for (std::size_t i = 0; i < e.rows.size(); ++i) {
            if (sgn(e.rows[i][f]) == 0) continue;
            Integer q;
            mpz_divexact(q.get_mpz_t(), l.get_mpz_t(), e.rows[i][e.pivots[i]].get_mpz_t());
            v[e.pivots[i]] = -(q * e.rows[i][f]);
        }
        remove_content(v);
        out.push_back(std::move(v));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Public matrix operations

inline std::size_t rank(const QMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    // Eliminating along the shorter dimension is cheaper.
    if (m.rows() > m.cols()) return echelon_form(integer_rows(m.transpose()), m.rows()).rank();
    return echelon_form(integer_rows(m), m.cols()).rank();
}

/// Basis of {v : m v = 0}; deterministic, one vector per non-pivot column of
/// the reduced echelon form, scaled to a primitive integer vector.
inline std::vector<RatVec> kernel_basis(const QMatrix& m) {
    if (m.cols() == 0) return {};
    std::vector<RatVec> out;
    for (auto& v : kernel_from_rref(echelon_form(integer_rows(m), m.cols(), true)))
        out.push_back(to_rational(v));
    return out;
}

inline std::size_t span_rank(const std::vector<RatVec>& vectors, std::size_t n) {
    std::vector<IntVec> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.size() != n) throw std::invalid_argument("span_rank: vector length mismatch");
        rows.push_back(to_primitive(v));
    }
    return echelon_form(std::move(rows), n).rank();
}

/// Rank of an integer matrix modulo the prime 2^61 - 1. Never larger than
/// the rank over Q, so it certifies full rank but never rank deficiency.
inline std::size_t rank_mod_p(const std::vector<IntVec>& m, std::size_t cols) {
    using u64 = std::uint64_t;
    using u128 = unsigned __int128;
    constexpr u64 p = (u64{1} << 61) - 1;
    const auto mul = [](u64 a, u64 b) {
        const u128 t = static_cast<u128>(a) * b;
        u64 r = static_cast<u64>(t & p) + static_cast<u64>(t >> 61);
        return r >= p ? r - p : r;
    };
    const auto inv = [&](u64 a) {
        u64 r = 1;
        for (u64 e = p - 2; e != 0; e >>= 1, a = mul(a, a))
            if (e & 1) r = mul(r, a);
        return r;
    };
    Integer mod(p), t;
    std::vector<std::vector<u64>> a;
    a.reserve(m.size());
    for (const auto& row : m) {
        if (row.size() != cols) throw std::invalid_argument("rank_mod_p: ragged rows");
        std::vector<u64> r(cols);
        for (std::size_t j = 0; j < cols; ++j) {
            if (sgn(row[j]) == 0) continue;
            mpz_fdiv_r(t.get_mpz_t(), row[j].get_mpz_t(), mod.get_mpz_t());
            r[j] = mpz_get_ui(t.get_mpz_t());
        }
        a.push_back(std::move(r));
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
        std::size_t piv = rank;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[rank]);
        const u64 s = inv(a[rank][c]);
        for (std::size_t j = c; j < cols; ++j) a[rank][j] = mul(a[rank][j], s);
        for (std::size_t i = rank + 1; i < a.size(); ++i) {
            const u64 f = a[i][c];
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j)
                if (a[rank][j] != 0) {
                    const u64 sub = mul(f, a[rank][j]);
                    a[i][j] = a[i][j] >= sub ? a[i][j] - sub : a[i][j] + p - sub;
                }
        }
        ++rank;
    }
    return rank;
}

/// dim span(ambient) - dim span(sub); throws SubspaceNotContained unless
/// span(sub) lies inside span(ambient).
inline std::size_t quotient_dim(const std::vector<RatVec>& ambient, const std::vector<RatVec>& sub) {
    std::size_t n = 0;
    if (!ambient.empty())
        n = ambient.front().size();
    else if (!sub.empty())
        n = sub.front().size();
    const std::size_t ra = span_rank(ambient, n);
    std::vector<RatVec> both = ambient;
    both.insert(both.end(), sub.begin(), sub.end());
    if (span_rank(both, n) != ra) throw SubspaceNotContained();
    return ra - span_rank(sub, n);
}

// ---------------------------------------------------------------------------

/// A subspace grown one vector at a time; rows are kept in echelon form keyed
/// by pivot column.
class SpanBuilder {
public:
    explicit SpanBuilder(std::size_t n) : n_(n) {}

    std::size_t ambient() const noexcept { return n_; }
    std::size_t dim() const noexcept { return rows_.size(); }

    /// Reduce v against the current rows (v is overwritten by a primitive
    /// multiple of its residue).
    void reduce(IntVec& v) const {
        Integer g, a, b;
        for (const auto& [p, row] : rows_)
            if (sgn(v[p]) != 0) detail::eliminate(v, row, p, g, a, b);
    }

    bool contains(IntVec v) const {
        check(v);
        reduce(v);
        return is_zero(v);
    }

    /// Adds v; returns true when the dimension grows.
    bool insert(IntVec v) {
        check(v);
        reduce(v);
        std::size_t p = first_nonzero(v);
        if (p == v.size()) return false;
        make_primitive(v);
        rows_.emplace(p, std::move(v));
        return true;
    }

    bool insert(std::span<const Rat> v) { return insert(to_primitive(v)); }

    std::vector<IntVec> basis() const {
        std::vector<IntVec> out;
        for (const auto& [p, row] : rows_) out.push_back(row);
        return out;
    }

private:
    void check(const IntVec& v) const {
        if (v.size() != n_) throw std::invalid_argument("SpanBuilder: vector length mismatch");
    }

    std::size_t n_;
    std::map<std::size_t, IntVec> rows_;
};

}  // namespace curvesat
