#include <catch_amalgamated.hpp>

#include <random>

#include "curvesat/exactla.hpp"
#include "curvesat/poly.hpp"

using namespace curvesat;

namespace {

QMatrix from_ints(std::size_t r, std::size_t c, std::initializer_list<int> xs) {
    std::vector<Rat> e;
    for (int x : xs) e.emplace_back(x);
    return QMatrix(r, c, e);
}

// Textbook Gauss-Jordan over Q with first-nonzero pivoting, no scaling tricks.
std::size_t naive_rank(QMatrix m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rat f = m(i, c) / m(r, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

QMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    QMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
    return m;
}

QMatrix product(const QMatrix& a, const QMatrix& b) {
    QMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            for (std::size_t k = 0; k < a.cols(); ++k) out(i, j) += a(i, k) * b(k, j);
    return out;
}

bool annihilates(const QMatrix& m, const RatVec& v) {
    const RatVec mv = m * std::span<const Rat>(v);
    return is_zero(std::span<const Rat>(mv));
}

}  // namespace

TEST_CASE("rank of small matrices") {
    CHECK(rank(QMatrix::identity(3)) == 3);
    CHECK(rank(QMatrix(2, 2)) == 0);
    CHECK(rank(from_ints(3, 2, {1, 2, 2, 4, 3, 6})) == 1);
    CHECK(rank(QMatrix(0, 4)) == 0);
    CHECK(rank(QMatrix(4, 0)) == 0);
}

TEST_CASE("kernel basis examples") {
    CHECK(kernel_basis(QMatrix::identity(4)).empty());

    const auto k = kernel_basis(from_ints(1, 2, {1, -1}));
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == k[0][1]);
    CHECK(k[0][0] != 0);

    // (a, b, c) -> a*y + b*x + c*0 for f = xy in degree 0, rows indexed by x, y, z.
    const auto ar = kernel_basis(from_ints(3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 0}));
    REQUIRE(ar.size() == 1);
    CHECK(ar[0][0] == 0);
    CHECK(ar[0][1] == 0);
    CHECK(ar[0][2] != 0);
}

TEST_CASE("quotient_dim") {
    const RatVec e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
    CHECK(quotient_dim({e1, e2}, {e1}) == 1);
    CHECK(quotient_dim({e1, e2}, {e1, e2}) == 0);
    CHECK(quotient_dim({e1, e2, e3}, {RatVec{1, 1, 0}, RatVec{1, -1, 0}}) == 1);
    CHECK_THROWS_AS(quotient_dim({e1}, {e2}), SubspaceNotContained);
}

TEST_CASE("rank plus nullity equals column count, rank of transpose") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<int> shape(1, 7);
        const std::size_t r = shape(rng), c = shape(rng);
        QMatrix m = random_matrix(rng, r, c, -3, 3);
        if (trial % 3 == 0 && r > 1)  // force a dependent row
            for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = 2 * m(0, j);
        const auto ker = kernel_basis(m);
        CHECK(rank(m) + ker.size() == c);
        CHECK(rank(m) == rank(m.transpose()));
        for (const auto& v : ker) CHECK(annihilates(m, v));
        CHECK(span_rank(ker, c) == ker.size());
    }
}

TEST_CASE("fraction-free rank agrees with naive rational elimination on 10x10") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        QMatrix m;
        if (trial % 2 == 0) {
            m = random_matrix(rng, 10, 10, -9, 9);
        } else {
            std::uniform_int_distribution<int> inner(1, 9);
            const std::size_t k = inner(rng);
            m = product(random_matrix(rng, 10, k, -9, 9), random_matrix(rng, k, 10, -9, 9));
        }
        CHECK(rank(m) == naive_rank(m));
    }
}

TEST_CASE("modular rank never exceeds the rational rank") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        QMatrix m = random_matrix(rng, 8, 8, -9, 9);
        if (trial % 2) m = product(m, random_matrix(rng, 8, 8, -1, 1));
        const auto rows = integer_rows(m);
        CHECK(rank_mod_p(rows, 8) <= rank(m));
        CHECK(rank_mod_p(rows, 8) == naive_rank(m));  // small entries: no accidental reduction
    }
}

TEST_CASE("kernel basis is deterministic") {
    std::mt19937 rng(5);
    const QMatrix m = random_matrix(rng, 4, 9, -5, 5);
    CHECK(kernel_basis(m) == kernel_basis(m));
    // The reduced echelon form does not depend on row order.
    QMatrix swapped(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) swapped(i, j) = m(m.rows() - 1 - i, j);
    CHECK(kernel_basis(m) == kernel_basis(swapped));
}

TEST_CASE("span builder") {
    SpanBuilder s(3);
    CHECK(s.insert(IntVec{1, 2, 3}));
    CHECK_FALSE(s.insert(IntVec{2, 4, 6}));
    CHECK(s.insert(IntVec{0, 1, 0}));
    CHECK(s.contains(IntVec{1, 0, 3}));
    CHECK_FALSE(s.contains(IntVec{0, 0, 1}));
    CHECK(s.dim() == 2);
}
