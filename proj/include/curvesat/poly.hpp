#pragma once

// Homogeneous polynomials in S = Q[x,y,z].
//
// The monomials of degree k are indexed in graded-lexicographic order with
// x > y > z:  x^k, x^{k-1}y, x^{k-1}z, x^{k-2}y^2, ...,  z^k.
// Every coordinate vector in the library (polynomials, matrix rows and
// columns, subspace bases) uses this order.

#include <array>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "curvesat/exactla.hpp"

namespace curvesat {

struct Monomial {
    int ex = 0;
    int ey = 0;
    int ez = 0;

    int degree() const noexcept { return ex + ey + ez; }

    /// Graded-lex with x > y > z: higher degree first, then larger x, then larger y.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        if (auto c = a.ex <=> b.ex; c != 0) return c;
        return a.ey <=> b.ey;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;

    Monomial operator*(const Monomial& o) const { return {ex + o.ex, ey + o.ey, ez + o.ez}; }
};

/// dim S_k = (k+1)(k+2)/2, zero for negative k.
constexpr std::size_t dim_S(int k) noexcept {
    return k < 0 ? 0 : static_cast<std::size_t>(k + 1) * static_cast<std::size_t>(k + 2) / 2;
}

/// Position of a monomial among the monomials of its degree.
constexpr std::size_t monomial_index(int ex, int ey, int ez) noexcept {
    const auto r = static_cast<std::size_t>(ey + ez);
    return r * (r + 1) / 2 + (r - static_cast<std::size_t>(ey));
}

constexpr std::size_t monomial_index(const Monomial& m) noexcept { return monomial_index(m.ex, m.ey, m.ez); }

/// Monomials of S_k, largest first.
inline std::vector<Monomial> monomial_basis(int k) {
    if (k < 0) throw std::invalid_argument("monomial_basis: negative degree");
    std::vector<Monomial> out;
    out.reserve(dim_S(k));
    for (int ex = k; ex >= 0; --ex)
        for (int ey = k - ex; ey >= 0; --ey) out.push_back({ex, ey, k - ex - ey});
    return out;
}

/// Index of var * m in degree deg(m)+1 for every m of degree k; var in {0,1,2}.
inline std::vector<std::size_t> shift_table(int k, int var) {
    std::vector<std::size_t> out;
    out.reserve(dim_S(k));
    for (const auto& m : monomial_basis(k)) {
        Monomial s = m;
        (var == 0 ? s.ex : var == 1 ? s.ey : s.ez) += 1;
        out.push_back(monomial_index(s));
    }
    return out;
}

class HomogeneousPoly {
public:
    /// The zero polynomial of the given degree.
    explicit HomogeneousPoly(int degree = 0) : degree_(degree), coeffs_(dim_S(degree)) {
        if (degree < 0) throw std::invalid_argument("HomogeneousPoly: negative degree");
    }

    HomogeneousPoly(int degree, RatVec coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
        if (degree < 0 || coeffs_.size() != dim_S(degree))
            throw std::invalid_argument("HomogeneousPoly: coefficient count does not match degree");
    }

    static HomogeneousPoly monomial(const Monomial& m, const Rat& c = 1) {
        HomogeneousPoly p(m.degree());
        p.coeffs_[monomial_index(m)] = c;
        return p;
    }

    static HomogeneousPoly linear(const Rat& a, const Rat& b, const Rat& c) {
        return HomogeneousPoly(1, RatVec{a, b, c});
    }

    int degree() const noexcept { return degree_; }
    const RatVec& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const { return curvesat::is_zero(std::span<const Rat>(coeffs_)); }

    const Rat& coefficient(const Monomial& m) const {
        if (m.degree() != degree_) throw std::invalid_argument("coefficient: monomial of wrong degree");
        return coeffs_[monomial_index(m)];
    }

    /// Nonzero terms, largest monomial first.
    std::vector<std::pair<Monomial, Rat>> terms() const {
        std::vector<std::pair<Monomial, Rat>> out;
        const auto basis = monomial_basis(degree_);
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (sgn(coeffs_[i]) != 0) out.emplace_back(basis[i], coeffs_[i]);
        return out;
    }

    HomogeneousPoly& operator+=(const HomogeneousPoly& o) {
        same_degree(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    HomogeneousPoly& operator-=(const HomogeneousPoly& o) {
        same_degree(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    HomogeneousPoly& operator*=(const Rat& c) {
        for (auto& x : coeffs_) x *= c;
        return *this;
    }

    friend HomogeneousPoly operator+(HomogeneousPoly a, const HomogeneousPoly& b) { return a += b; }
    friend HomogeneousPoly operator-(HomogeneousPoly a, const HomogeneousPoly& b) { return a -= b; }
    friend HomogeneousPoly operator*(HomogeneousPoly a, const Rat& c) { return a *= c; }
    friend HomogeneousPoly operator*(const Rat& c, HomogeneousPoly a) { return a *= c; }
    friend HomogeneousPoly operator-(HomogeneousPoly a) { return a *= Rat(-1); }

    friend HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b) {
        HomogeneousPoly r(a.degree_ + b.degree_);
        const auto ma = monomial_basis(a.degree_);
        const auto mb = monomial_basis(b.degree_);
        for (std::size_t i = 0; i < ma.size(); ++i) {
            if (sgn(a.coeffs_[i]) == 0) continue;
            for (std::size_t j = 0; j < mb.size(); ++j)
                if (sgn(b.coeffs_[j]) != 0) r.coeffs_[monomial_index(ma[i] * mb[j])] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }

    /// Formal partial derivative; var 0, 1, 2 stands for x, y, z.
    HomogeneousPoly derivative(int var) const {
        if (degree_ == 0) return HomogeneousPoly(0);
        HomogeneousPoly r(degree_ - 1);
        const auto basis = monomial_basis(degree_);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (sgn(coeffs_[i]) == 0) continue;
            Monomial m = basis[i];
            int& e = var == 0 ? m.ex : var == 1 ? m.ey : m.ez;
            if (e == 0) continue;
            const int n = e--;
            r.coeffs_[monomial_index(m)] += coeffs_[i] * n;
        }
        return r;
    }

    Rat evaluate(const Rat& x, const Rat& y, const Rat& z) const {
        Rat acc = 0;
        for (const auto& [m, c] : terms()) {
            Rat t = c;
            for (int i = 0; i < m.ex; ++i) t *= x;
            for (int i = 0; i < m.ey; ++i) t *= y;
            for (int i = 0; i < m.ez; ++i) t *= z;
            acc += t;
        }
        return acc;
    }

    friend bool operator==(const HomogeneousPoly&, const HomogeneousPoly&) = default;

    /// Text in the input grammar, e.g. "y^4 + x*z^3" or "-3/2*x*y".
    std::string to_string() const {
        const auto ts = terms();
        if (ts.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : ts) {
            Rat a = abs(c);
            if (first) {
                if (sgn(c) < 0) out += "-";
            } else {
                out += sgn(c) < 0 ? " - " : " + ";
            }
            first = false;
            std::string mono;
            auto put = [&](char v, int e) {
                if (e == 0) return;
                if (!mono.empty()) mono += "*";
                mono += v;
                if (e > 1) mono += "^" + std::to_string(e);
            };
            put('x', m.ex);
            put('y', m.ey);
            put('z', m.ez);
            if (mono.empty())
                out += a.get_str();
            else if (a == 1)
                out += mono;
            else
                out += a.get_str() + "*" + mono;
        }
        return out;
    }

private:
    void same_degree(const HomogeneousPoly& o) const {
        if (o.degree_ != degree_) throw std::invalid_argument("HomogeneousPoly: degree mismatch");
    }

    int degree_;
    RatVec coeffs_;
};

inline std::array<HomogeneousPoly, 3> partials(const HomogeneousPoly& f) {
    if (f.degree() < 1) throw std::invalid_argument("partials: degree must be at least 1");
    return {f.derivative(0), f.derivative(1), f.derivative(2)};
}

/// Product of polynomials given by coefficient vectors of degrees da, db.
template <class T>
std::vector<T> multiply_coeffs(const std::vector<T>& a, int da, const std::vector<T>& b, int db) {
    std::vector<T> r(dim_S(da + db));
    const auto ma = monomial_basis(da);
    const auto mb = monomial_basis(db);
    for (std::size_t i = 0; i < ma.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < mb.size(); ++j)
            if (sgn(b[j]) != 0) r[monomial_index(ma[i] * mb[j])] += a[i] * b[j];
    }
    return r;
}

/// Matrix of  . g : S_k -> S_{k + deg g}.
inline QMatrix mult_map_matrix(const HomogeneousPoly& g, int k) {
    if (k < 0) throw std::invalid_argument("mult_map_matrix: negative degree");
    const int e = g.degree();
    QMatrix m(dim_S(k + e), dim_S(k));
    const auto src = monomial_basis(k);
    const auto gt = g.terms();
    for (std::size_t j = 0; j < src.size(); ++j)
        for (const auto& [mono, c] : gt) m(monomial_index(src[j] * mono), j) = c;
    return m;
}

/// Matrix of (a,b,c) -> a f_x + b f_y + c f_z from (S_m)^3 to S_{m+d-1};
/// columns are the a-block, then the b-block, then the c-block.
inline QMatrix jacobian_map_matrix(const HomogeneousPoly& f, int m) {
    if (m < 0) throw std::invalid_argument("jacobian_map_matrix: negative degree");
    const auto grad = partials(f);
    const std::size_t block = dim_S(m);
    QMatrix out(dim_S(m + f.degree() - 1), 3 * block);
    for (int v = 0; v < 3; ++v) {
        const QMatrix part = mult_map_matrix(grad[v], m);
        for (std::size_t i = 0; i < part.rows(); ++i)
            for (std::size_t j = 0; j < block; ++j) out(i, v * block + j) = part(i, j);
    }
    return out;
}

/// The primitive integer multiple of f (same curve, integral coefficients).
inline IntVec integral_coefficients(const HomogeneousPoly& f) { return to_primitive(f.coefficients()); }

inline HomogeneousPoly from_integers(int degree, const IntVec& c) { return HomogeneousPoly(degree, to_rational(c)); }

}  // namespace curvesat
