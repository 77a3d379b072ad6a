#include <catch_amalgamated.hpp>

#include <random>

#include "curvesat/parser.hpp"
#include "curvesat/poly.hpp"

using namespace curvesat;

namespace {

HomogeneousPoly random_poly(std::mt19937& rng, int d) {
    std::uniform_int_distribution<int> coef(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    RatVec c(dim_S(d));
    for (auto& x : c) {
        x = Rat(coef(rng), den(rng));
        x.canonicalize();
    }
    return HomogeneousPoly(d, c);
}

const HomogeneousPoly X = HomogeneousPoly::linear(1, 0, 0);
const HomogeneousPoly Y = HomogeneousPoly::linear(0, 1, 0);
const HomogeneousPoly Z = HomogeneousPoly::linear(0, 0, 1);

}  // namespace

TEST_CASE("monomial bases in graded lex order") {
    const auto b0 = monomial_basis(0);
    REQUIRE(b0.size() == 1);
    CHECK(b0[0].degree() == 0);

    const auto b1 = monomial_basis(1);
    REQUIRE(b1.size() == 3);
    CHECK((b1[0].ex == 1 && b1[1].ey == 1 && b1[2].ez == 1));

    CHECK(monomial_basis(4).size() == 15);
    for (int k = 0; k <= 20; ++k) {
        CHECK(dim_S(k) == static_cast<std::size_t>((k + 1) * (k + 2) / 2));
        const auto b = monomial_basis(k);
        REQUIRE(b.size() == dim_S(k));
        for (std::size_t i = 0; i < b.size(); ++i) CHECK(monomial_index(b[i]) == i);
    }
    // x > y > z: x^2, xy, xz, y^2, yz, z^2
    const auto b2 = monomial_basis(2);
    CHECK((b2[1].ex == 1 && b2[1].ey == 1));
    CHECK(b2[3].ey == 2);
    CHECK(b2[5].ez == 2);
}

TEST_CASE("partial derivatives") {
    auto [fx, fy, fz] = partials(parse_poly("y^4 + x*z^3"));
    CHECK(fx == parse_poly("z^3"));
    CHECK(fy == parse_poly("4*y^3"));
    CHECK(fz == parse_poly("3*x*z^2"));

    auto g = partials(parse_poly("x*y"));
    CHECK(g[0] == Y);
    CHECK(g[1] == X);
    CHECK(g[2].is_zero());
    CHECK(g[2].degree() == 1);

    auto h = partials(parse_poly("x^3 + y^3 + z^3"));
    CHECK(h[0] == parse_poly("3*x^2"));
    CHECK(h[1] == parse_poly("3*y^2"));
    CHECK(h[2] == parse_poly("3*z^2"));
}

TEST_CASE("Euler relation on random polynomials") {
    std::mt19937 rng(11);
    for (int d = 1; d <= 7; ++d)
        for (int trial = 0; trial < 5; ++trial) {
            const auto f = random_poly(rng, d);
            const auto g = partials(f);
            CHECK(X * g[0] + Y * g[1] + Z * g[2] == Rat(d) * f);
        }
}

TEST_CASE("jacobian map matrices") {
    const auto k = kernel_basis(jacobian_map_matrix(parse_poly("x*y"), 0));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == RatVec{0, 0, 1});

    CHECK(rank(jacobian_map_matrix(parse_poly("x^3 + y^3 + z^3"), 0)) == 3);
    CHECK(kernel_basis(jacobian_map_matrix(parse_poly("y^4 + x*z^3"), 1)).size() == 1);
}

TEST_CASE("jacobian map is three multiplication maps side by side") {
    std::mt19937 rng(3);
    for (int d = 2; d <= 5; ++d)
        for (int m = 0; m <= 3; ++m) {
            const auto f = random_poly(rng, d);
            const auto g = partials(f);
            const QMatrix J = jacobian_map_matrix(f, m);
            const std::size_t block = dim_S(m);
            for (int v = 0; v < 3; ++v) {
                const QMatrix M = mult_map_matrix(g[v], m);
                REQUIRE(M.rows() == J.rows());
                for (std::size_t i = 0; i < M.rows(); ++i)
                    for (std::size_t j = 0; j < block; ++j) CHECK(J(i, v * block + j) == M(i, j));
            }
        }
}

TEST_CASE("multiplication maps") {
    for (int k = 0; k <= 4; ++k) {
        const QMatrix one = mult_map_matrix(HomogeneousPoly::monomial({0, 0, 0}), k);
        CHECK(one.entries() == QMatrix::identity(dim_S(k)).entries());
    }
    const QMatrix mx = mult_map_matrix(X, 1);
    CHECK(mx.rows() == 6);
    CHECK(mx.cols() == 3);
    CHECK(rank(mx) == 3);
    CHECK(rank(mult_map_matrix(parse_poly("x + y + z"), 2)) == 6);
}

TEST_CASE("multiplication matches the matrix") {
    std::mt19937 rng(8);
    const auto g = random_poly(rng, 2);
    const auto h = random_poly(rng, 3);
    const RatVec viaMatrix = mult_map_matrix(g, 3) * std::span<const Rat>(h.coefficients());
    CHECK(viaMatrix == (g * h).coefficients());
}

TEST_CASE("evaluation") {
    const auto f = parse_poly("y^4 + x*z^3");
    CHECK(f.evaluate(1, 2, 3) == Rat(16 + 27));
}
