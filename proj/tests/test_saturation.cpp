#include <catch_amalgamated.hpp>

#include <random>

#include "curvesat/catalog.hpp"
#include "curvesat/classify.hpp"
#include "curvesat/parser.hpp"
#include "curvesat/saturation.hpp"

using namespace curvesat;

namespace {

// dim {g in S_k : g * S_N lies in J_f} with k + N > T, straight from the
// definition of the saturation (N(f) vanishes above T).
std::size_t colon_by_power(const JacobianData& jd, int k) {
    const int N = std::max(jd.T() + 1 - k, 1);
    const auto& q = jd.milnor_map(k + N);
    std::vector<RatVec> rows;
    const auto mons = monomial_basis(N);
    std::vector<std::vector<RatVec>> images(dim_S(k));
    for (std::size_t j = 0; j < dim_S(k); ++j) {
        RatVec e(dim_S(k));
        e[j] = 1;
        for (const auto& mu : mons) {
            const auto prod = multiply_coeffs(e, k, HomogeneousPoly::monomial(mu).coefficients(), N);
            images[j].push_back(q.apply(prod));
        }
    }
    QMatrix m(mons.size() * q.codim(), dim_S(k));
    for (std::size_t j = 0; j < dim_S(k); ++j)
        for (std::size_t a = 0; a < mons.size(); ++a)
            for (std::size_t r = 0; r < q.codim(); ++r) m(a * q.codim() + r, j) = images[j][a][r];
    return dim_S(k) - rank(m);
}

HomogeneousPoly curve(const std::string& name) {
    const auto& e = catalog_entry(name);
    return e.forms.empty() ? parse_poly(e.poly) : parse_arrangement(e.forms).product();
}

}  // namespace

TEST_CASE("saturation of small examples") {
    CHECK(saturate(parse_poly("x*y"), 3).dim(1) == 2);

    const auto f = parse_poly("y^4 + x*z^3");
    const auto sat = saturate(f, 9);
    const auto jac = jacobian_slices(f, 9);
    REQUIRE(sat.dim(2) == 1);
    CHECK(sat.dim(2) == jac.dim(2) + 1);
    CHECK(span_rank({sat.slices.at(2)[0], parse_poly("z^2").coefficients()}, 6) == 1);

    CHECK(saturate(parse_poly("x^3 + y^3 + z^3"), 6).dim(0) == 1);
}

TEST_CASE("saturation agrees with the colon by a power of m") {
    for (const char* name : {"ex0-lines", "nodal-d4", "ex1-d5-k2", "fermat-4", "generic-4", "braid-6", "pencil-4"}) {
        const auto f = curve(name);
        const JacobianData jd(f, default_kmax(f.degree()));
        const auto sd = saturation_data(jd);
        for (int k = 0; k <= std::max(jd.T(), 0); ++k) {
            INFO(name << " k=" << k);
            CHECK(sd.sat_dim(k) == colon_by_power(jd, k));
        }
    }
}

TEST_CASE("N(f) tables") {
    const auto ex1 = n_table(parse_poly("y^4 + x*z^3"));
    CHECK(ex1.nTable == std::vector<std::size_t>{0, 0, 1, 1, 1, 0, 0});
    CHECK(ex1.sigma == 2);
    CHECK(ex1.nu == 1);

    const auto xy = n_table(parse_poly("x*y"));
    CHECK(xy.nu == 0);
    CHECK(!xy.sigma);

    CHECK(n_table(parse_poly("x^3 + y^3 + z^3")).nTable == std::vector<std::size_t>{1, 3, 3, 1});
}

TEST_CASE("N(f) agrees with the Milnor-algebra formula") {
    for (const auto& e : catalog()) {
        if (e.forms.size() == 9) continue;  // covered by the suite
        if (e.poly == "x") continue;
        const auto f = curve(e.name);
        const JacobianData jd(f, default_kmax(f.degree()));
        const auto sd = saturation_data(jd);
        const auto formula = n_table_from_milnor(jd);
        REQUIRE(formula.size() == sd.nTable.size());
        for (std::size_t k = 0; k < formula.size(); ++k) CHECK(formula[k] == static_cast<long long>(sd.nTable[k]));
    }
}

TEST_CASE("minimal generators of N(f)") {
    CHECK(n_min_generators(parse_poly("y^4 + x*z^3")) == std::vector<int>{2});
    CHECK(n_min_generators(curve("ziegler-A")) == std::vector<int>{8, 9});
    CHECK(n_min_generators(curve("ziegler-Aprime")) == std::vector<int>{9, 9, 9, 9});
}

TEST_CASE("three-form saturation") {
    for (const char* name : {"ex1-d4-k1", "nodal-d5", "generic-4", "braid-6"}) {
        const auto f = curve(name);
        const auto g = partials(f);
        const auto three = saturate_three_forms(g[0], g[1], g[2]);
        const auto sd = n_table(f);
        const int top = std::min(three.top(), sd.top());
        for (int k = 0; k <= top; ++k) CHECK(three.sat_dim(k) == sd.sat_dim(k));
        for (int k = 0; k <= sd.T(); ++k) CHECK(three.n(k) == sd.n(k));
    }

    const auto sq = saturate_three_forms(parse_poly("x^2"), parse_poly("y^2"), parse_poly("x*y"));
    CHECK(sq.nu == 0);

    CHECK_THROWS_AS(saturate_three_forms(parse_poly("x^2"), parse_poly("y^2"), parse_poly("z^2")), NotCodimensionTwo);
    const auto smooth = partials(parse_poly("x^3 + y^3 + z^3"));
    CHECK_THROWS_AS(saturate_three_forms(smooth[0], smooth[1], smooth[2]), NotCodimensionTwo);
    CHECK_THROWS_AS(saturate_three_forms(parse_poly("x^2"), parse_poly("y^2"), parse_poly("x^2+y^2")),
                    std::invalid_argument);
}

TEST_CASE("Lefschetz ranks") {
    const auto sd = n_table(parse_poly("y^4 + x*z^3"));
    const auto byY = lefschetz_check(sd, parse_poly("y"));
    CHECK(byY.holds());
    CHECK(byY.ranks[2] == 1);
    CHECK(byY.ranks[3] == 1);
    // N(f) is generated by z^2 and z * z^2 = f_x, so z kills N(f).
    const auto byZ = lefschetz_check(sd, parse_poly("z"));
    CHECK(byZ.ranks == std::vector<std::size_t>(6, 0));
    CHECK_FALSE(byZ.holds());

    std::mt19937 rng(1);
    std::uniform_int_distribution<int> c(-5, 5);
    const auto smooth = n_table(parse_poly("x^3 + y^3 + z^3"));
    int tried = 0;
    while (tried < 3) {
        const auto l = HomogeneousPoly::linear(c(rng), c(rng), c(rng));
        if (l.is_zero()) continue;
        ++tried;
        const auto r = lefschetz_check(smooth, l);
        CHECK(r.ranks == std::vector<std::size_t>{1, 3, 1});
    }
}

TEST_CASE("nearly free curves: multiplication by random linear forms is bijective on the support") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> c(-5, 5);
    for (const char* name : {"ex1-d5-k2", "ex1-d6-k1", "generic-4"}) {
        const auto sd = n_table(curve(name));
        REQUIRE(sd.sigma);
        int good = 0;
        for (int attempt = 0; attempt < 5 && good < 3; ++attempt) {
            const auto l = HomogeneousPoly::linear(c(rng), c(rng), c(rng));
            if (l.is_zero()) continue;
            const auto r = lefschetz_check(sd, l);
            bool iso = true;
            for (int s = *sd.sigma; s < sd.T() - *sd.sigma; ++s) iso = iso && r.ranks[static_cast<std::size_t>(s)] == 1;
            good += iso;
        }
        CHECK(good == 3);
    }
}
