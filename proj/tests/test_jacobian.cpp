#include <catch_amalgamated.hpp>

#include <random>

#include "curvesat/catalog.hpp"
#include "curvesat/jacobian.hpp"
#include "curvesat/parser.hpp"
#include "curvesat/resolution.hpp"
#include "curvesat/suite.hpp"

using namespace curvesat;

namespace {

// Coefficients of (1 + t + ... + t^(d-2))^3 by direct convolution.
std::vector<std::size_t> cube_of_geometric(int d, int kmax) {
    std::vector<std::size_t> g(static_cast<std::size_t>(kmax + 1), 0);
    for (int i = 0; i <= d - 2 && i <= kmax; ++i) g[static_cast<std::size_t>(i)] = 1;
    auto conv = [&](const std::vector<std::size_t>& a) {
        std::vector<std::size_t> out(a.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * g[j];
        return out;
    };
    return conv(conv(g));
}

std::size_t tau_from_points(const ArrangementSpec& spec) {
    std::size_t t = 0;
    for (auto m : combinatorics(spec).pointMultiplicities) t += (m - 1) * (m - 1);
    return t;
}

}  // namespace

TEST_CASE("jacobian slices") {
    const auto xy = jacobian_slices(parse_poly("x*y"), 3);
    CHECK(xy.dim(0) == 0);
    CHECK(xy.dim(1) == 2);
    CHECK(span_rank(xy.slices.at(1), 3) == 2);

    CHECK(jacobian_slices(parse_poly("x^3 + y^3 + z^3"), 4).dim(2) == 3);

    const auto ex1 = jacobian_slices(parse_poly("y^4 + x*z^3"), 6);
    CHECK(ex1.dim(3) == 3);
    CHECK(ex1.dim(4) == 8);
}

TEST_CASE("milnor algebra dimensions") {
    CHECK(milnor_dims(parse_poly("x^3 + y^3 + z^3"), 5) == std::vector<std::size_t>{1, 3, 3, 1, 0, 0});
    CHECK(milnor_dims(parse_poly("x*y"), 5) == std::vector<std::size_t>{1, 1, 1, 1, 1, 1});
    CHECK(milnor_dims(parse_poly("y^4 + x*z^3"), 9)[4] == 7);
}

TEST_CASE("Tjurina numbers") {
    CHECK(tjurina(parse_poly("y^4 + x*z^3")) == 6);
    CHECK(tjurina(parse_poly("x^3 + y^3 + z^3")) == 0);
    for (const char* name : {"ziegler-A", "braid-6", "generic-4", "pencil-4"}) {
        const auto spec = parse_arrangement(catalog_entry(name).forms);
        CHECK(tjurina(spec.product()) == tau_from_points(spec));
    }
    CHECK(tau_from_points(parse_arrangement(catalog_entry("ziegler-A").forms)) == 42);
}

TEST_CASE("non-reduced input is detected") {
    CHECK_THROWS_AS(tjurina(parse_poly("x^2*y")), NonReducedInput);
    CHECK_THROWS_AS(tjurina(parse_poly("(x+y)^2*z^2")), NonReducedInput);
    CHECK_THROWS_AS(tjurina(parse_poly("x^3")), NonReducedInput);
}

TEST_CASE("minimal degree of a Jacobian relation") {
    CHECK(mdr(parse_poly("x*y")) == 0);
    for (int d = 3; d <= 7; ++d)
        for (int k = 1; k < d; ++k)
            CHECK(mdr(parse_poly("y^" + std::to_string(d) + " + x^" + std::to_string(k) + "*z^" +
                                 std::to_string(d - k))) == 1);
}

TEST_CASE("AR(f) generator degrees") {
    CHECK(ar_min_generators(parse_poly("y^4 + x*z^3")) == std::vector<int>{1, 3, 3});
    const auto braid = parse_arrangement(catalog_entry("braid-6").forms).product();
    CHECK(ar_min_generators(braid) == std::vector<int>{2, 3});
}

TEST_CASE("AR(f) generator degrees for the Ziegler pair") {
    const auto a = parse_arrangement(catalog_entry("ziegler-A").forms).product();
    const auto b = parse_arrangement(catalog_entry("ziegler-Aprime").forms).product();
    CHECK(mdr(a) == 5);
    CHECK(mdr(b) == 6);
    CHECK(ar_min_generators(a) == std::vector<int>{5, 6, 6, 6});
    CHECK(ar_min_generators(b) == std::vector<int>{6, 6, 6, 6, 6, 6});
}

TEST_CASE("smooth reference Hilbert function") {
    CHECK(smooth_reference_dims(3, 6) == std::vector<std::size_t>{1, 3, 3, 1, 0, 0, 0});
    CHECK(smooth_reference_dims(2, 3) == std::vector<std::size_t>{1, 0, 0, 0});
    for (int d = 2; d <= 12; ++d) {
        const int T = 3 * d - 6;
        const auto s = smooth_reference_dims(d, T + 3);
        CHECK(s == cube_of_geometric(d, T + 3));
        CHECK(s[0] == 1);
        CHECK(s[static_cast<std::size_t>(T)] == 1);
    }
    // Any smooth curve has the reference Hilbert function.
    CHECK(milnor_dims(parse_poly("x^4 + y^4 + z^4 + x*y*z^2"), 9) == smooth_reference_dims(4, 9));
}

TEST_CASE("ct(f)") {
    CHECK(ct(parse_poly("y^4 + x*z^3")) == 3);
    CHECK(ct(parse_poly("y^6 + x*z^5")) == 5);
    CHECK_THROWS_AS(ct(parse_poly("x^3 + y^3 + z^3")), SmoothCurve);
    const auto a = parse_arrangement(catalog_entry("ziegler-A").forms).product();
    CHECK(regularity(betti_saturated(a)) == 3 * 9 - 6 - ct(a));
}

TEST_CASE("rank-nullity between J_f and AR(f)") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 6; ++trial) {
        const auto spec = random_arrangement(rng, 4 + trial % 3);
        const JacobianData jd(spec.product(), default_kmax(spec.degree()));
        const int d = jd.d();
        for (int k = d - 1; k <= jd.kmax(); ++k) {
            const int m = k - d + 1;
            CHECK(jd.j_dim(k) == 3 * dim_S(m) - kernel_basis(jacobian_map_matrix(spec.product(), m)).size());
        }
        CHECK(tjurina(jd) == tau_from_points(spec));
    }
}
