#pragma once

// Built-in curves, each with the values known for it in closed form.

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvesat/analysis.hpp"
#include "curvesat/classify.hpp"
#include "curvesat/errors.hpp"
#include "curvesat/parser.hpp"
#include "curvesat/resolution.hpp"

namespace curvesat {

struct CatalogExpectation {
    std::optional<CurveKind> kind;
    std::optional<std::pair<int, int>> exponents;
    std::optional<std::size_t> tau;
    std::optional<int> mdr;
    std::optional<BettiTable> bettiI;
    std::optional<BettiTable> bettiJ;
    std::optional<std::vector<std::size_t>> nTable;
    std::optional<std::map<std::size_t, std::size_t>> combinatorics;
};

struct CatalogEntry {
    std::string name;
    std::string description;
    std::string poly;                // empty for arrangements
    std::vector<std::string> forms;  // line arrangement
    bool irreducible = false;
    CatalogExpectation expect;

    CurveInput input() const {
        CurveInput in = forms.empty() ? input_from_poly(poly) : input_from_arrangement(parse_arrangement(forms), name);
        in.origin = "catalog";
        in.name = name;
        in.knownIrreducible = irreducible;
        return in;
    }
};

inline const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> out;
        const auto nearly_free_ex1 = [](int d) {
            CatalogExpectation e;
            e.kind = CurveKind::NearlyFree;
            e.exponents = std::pair{1, d - 1};
            e.tau = static_cast<std::size_t>((d - 1) * (d - 2));
            e.mdr = 1;
            e.bettiI = BettiTable({{d - 1, d - 2}, {2 * d - 3}});
            std::vector<std::size_t> n(static_cast<std::size_t>(3 * d - 5), 0);
            for (int j = d - 2; j <= 2 * d - 4; ++j) n[static_cast<std::size_t>(j)] = 1;
            e.nTable = n;
            return e;
        };

        {
            CatalogEntry c{"ex0-line", "a line", "x", {}, true, {}};
            c.expect.bettiI = BettiTable();
            out.push_back(c);
        }
        {
            CatalogEntry c{"ex0-conic", "a smooth conic", "x^2 + y^2 + z^2", {}, true, {}};
            c.expect.kind = CurveKind::NearlyFree;
            c.expect.exponents = std::pair{1, 1};
            c.expect.tau = 0;
            c.expect.bettiI = BettiTable();
            out.push_back(c);
        }
        {
            CatalogEntry c{"ex0-lines", "two lines", "x*y", {}, false, {}};
            c.expect.kind = CurveKind::ConcurrentLines;
            c.expect.exponents = std::pair{0, 1};
            c.expect.tau = 1;
            c.expect.mdr = 0;
            c.expect.bettiI = BettiTable({{1, 1}, {2}});
            out.push_back(c);
        }
        for (int d = 3; d <= 6; ++d) {
            CatalogEntry c;
            c.name = "nodal-d" + std::to_string(d);
            c.description = "curve with a single node";
            c.poly = "x*y*z" + (d == 3 ? std::string() : "^" + std::to_string(d - 2)) + " + x^" + std::to_string(d) + " + y^" + std::to_string(d);
            c.irreducible = true;
            c.expect.kind = CurveKind::Other;
            c.expect.tau = 1;
            c.expect.bettiI = BettiTable({{1, 1}, {2}});
            out.push_back(c);
        }
        for (int d = 3; d <= 10; ++d)
            for (int k = 1; k < d; ++k) {
                CatalogEntry c;
                c.name = "ex1-d" + std::to_string(d) + "-k" + std::to_string(k);
                c.description = "y^d + x^k z^(d-k)";
                c.poly = "y^" + std::to_string(d) + " + " + (k == 1 ? std::string("x") : "x^" + std::to_string(k)) +
                         "*z" + (d - k == 1 ? std::string() : "^" + std::to_string(d - k));
                c.irreducible = std::gcd(d, k) == 1;
                c.expect = nearly_free_ex1(d);
                out.push_back(c);
            }
        for (int d = 3; d <= 6; ++d) {
            CatalogEntry c;
            c.name = "fermat-" + std::to_string(d);
            c.description = "smooth Fermat curve";
            const std::string e = std::to_string(d);
            c.poly = "x^" + e + " + y^" + e + " + z^" + e;
            c.irreducible = true;
            c.expect.kind = CurveKind::Smooth;
            c.expect.tau = 0;
            c.expect.bettiI = BettiTable();
            c.expect.nTable = smooth_reference_dims(d, 3 * d - 6);
            out.push_back(c);
        }
        {
            CatalogEntry c{"ziegler-A", "Ziegler arrangement, six triple points on a conic", "",
                           {"x", "y", "x-y-z", "x-y+z", "2*x+y-2*z", "x+3*y-3*z", "3*x+2*y+3*z", "x+5*y+5*z", "7*x-4*y-z"},
                           false, {}};
            c.expect.kind = CurveKind::Other;
            c.expect.tau = 42;
            c.expect.mdr = 5;
            c.expect.bettiJ = BettiTable({{8, 8, 8}, {13, 14, 14, 14}, {15, 16}});
            c.expect.bettiI = BettiTable({{8, 8, 8, 8, 9}, {10, 10, 10, 11}});
            c.expect.combinatorics = std::map<std::size_t, std::size_t>{{2, 18}, {3, 6}};
            out.push_back(c);
        }
        {
            CatalogEntry c{"ziegler-Aprime", "Ziegler arrangement, six triple points not on a conic", "",
                           {"x", "y", "x+y-z", "5*x+2*y-10*z", "3*x+2*y-6*z", "x-3*y+15*z", "2*x-y+10*z", "6*x+5*y+30*z",
                            "3*x-4*y-24*z"},
                           false, {}};
            c.expect.kind = CurveKind::Other;
            c.expect.tau = 42;
            c.expect.mdr = 6;
            c.expect.bettiJ = BettiTable({{8, 8, 8}, {14, 14, 14, 14, 14, 14}, {15, 15, 15, 15}});
            c.expect.bettiI = BettiTable({{8, 8, 8, 9, 9, 9, 9}, {10, 10, 10, 10, 10, 10}});
            c.expect.combinatorics = std::map<std::size_t, std::size_t>{{2, 18}, {3, 6}};
            out.push_back(c);
        }
        {
            CatalogEntry c{"generic-4", "four lines in general position", "", {"x", "y", "z", "x+y+z"}, false, {}};
            c.expect.kind = CurveKind::NearlyFree;
            c.expect.exponents = std::pair{2, 2};
            c.expect.tau = 6;
            c.expect.bettiI = BettiTable({{3, 3, 3, 3}, {4, 4, 4}});
            c.expect.combinatorics = std::map<std::size_t, std::size_t>{{2, 6}};
            out.push_back(c);
        }
        {
            CatalogEntry c{"braid-6", "the six reflecting lines of A3", "", {"x", "y", "z", "x-y", "x-z", "y-z"}, false, {}};
            c.expect.kind = CurveKind::Free;
            c.expect.exponents = std::pair{2, 3};
            c.expect.tau = 19;
            c.expect.bettiJ = BettiTable({{5, 5, 5}, {7, 8}});
            c.expect.bettiI = BettiTable({{5, 5, 5}, {7, 8}});
            c.expect.combinatorics = std::map<std::size_t, std::size_t>{{2, 3}, {3, 4}};
            out.push_back(c);
        }
        {
            CatalogEntry c{"pencil-4", "four concurrent lines", "", {"x", "y", "x+y", "x-y"}, false, {}};
            c.expect.kind = CurveKind::ConcurrentLines;
            c.expect.exponents = std::pair{0, 3};
            c.expect.mdr = 0;
            c.expect.tau = 9;
            c.expect.combinatorics = std::map<std::size_t, std::size_t>{{4, 1}};
            out.push_back(c);
        }
        return out;
    }();
    return entries;
}

inline const CatalogEntry& catalog_entry(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return e;
    throw UnknownCatalogEntry(name);
}

}  // namespace curvesat
