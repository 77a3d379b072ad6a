// curvesat: analyze a reduced plane curve, run the property suite, or list
// the built-in catalog.
//
// Exit codes: 0 success, 1 suite failures, 2 bad input, 3 non-reduced curve,
// 4 internal consistency failure.

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "curvesat.hpp"

namespace {

enum Exit { Ok = 0, SuiteFailed = 1, BadInput = 2, NotReduced = 3, Internal = 4 };

struct AnalyzeArgs {
    std::string poly;
    std::string arrangement;
    std::string catalogName;
    std::string format = "text";
    std::optional<int> kmax;
    bool timing = false;
};

curvesat::CurveInput make_input(const AnalyzeArgs& a) {
    if (!a.poly.empty()) return curvesat::input_from_poly(a.poly);
    if (!a.arrangement.empty())
        return curvesat::input_from_arrangement(curvesat::read_arrangement_file(a.arrangement), a.arrangement);
    return curvesat::catalog_entry(a.catalogName).input();
}

int analyze_command(const AnalyzeArgs& a) {
    try {
        const auto analysis = curvesat::analyze(make_input(a), a.kmax);
        const auto report = curvesat::make_report(analysis, a.timing);
        std::cout << (a.format == "json" ? curvesat::to_json_text(report) : curvesat::to_text(report));
        return Ok;
    } catch (const curvesat::NonReducedInput& e) {
        std::cerr << "curvesat: NonReducedInput: " << e.what() << "\n";
        return NotReduced;
    } catch (const curvesat::SyntaxError& e) {
        std::cerr << "curvesat: SyntaxError: " << e.what() << "\n";
        return BadInput;
    } catch (const curvesat::NotHomogeneous& e) {
        std::cerr << "curvesat: NotHomogeneous: " << e.what() << "\n";
        return BadInput;
    } catch (const curvesat::ZeroPolynomial& e) {
        std::cerr << "curvesat: ZeroPolynomial: " << e.what() << "\n";
        return BadInput;
    } catch (const curvesat::NotLinear& e) {
        std::cerr << "curvesat: NotLinear: " << e.what() << "\n";
        return BadInput;
    } catch (const curvesat::ProportionalLines& e) {
        std::cerr << "curvesat: ProportionalLines: " << e.what() << "\n";
        return BadInput;
    } catch (const curvesat::UnknownCatalogEntry& e) {
        std::cerr << "curvesat: UnknownCatalogEntry: " << e.what() << "\n";
        return BadInput;
    } catch (const curvesat::InputFileError& e) {
        std::cerr << "curvesat: " << e.what() << "\n";
        return BadInput;
    } catch (const std::exception& e) {
        std::cerr << "curvesat: internal error: " << e.what() << "\n";
        return Internal;
    }
}

int suite_command(const curvesat::SuiteOptions& opt) {
    try {
        const auto summary = curvesat::run_suite(opt);
        std::cout << curvesat::to_text(summary);
        return summary.ok() ? Ok : SuiteFailed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "curvesat: " << e.what() << "\n";
        return BadInput;
    } catch (const std::exception& e) {
        std::cerr << "curvesat: internal error: " << e.what() << "\n";
        return Internal;
    }
}

int run_catalog_list() {
    for (const auto& e : curvesat::catalog()) {
        std::string name = e.name;
        name.resize(std::max<std::size_t>(name.size() + 2, 18), ' ');
        std::cout << name << (e.forms.empty() ? e.poly : std::to_string(e.forms.size()) + " lines") << "  ("
                  << e.description << ")\n";
    }
    return Ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jacobian and saturated ideals of reduced plane curves"};
    app.require_subcommand(1);

    AnalyzeArgs aa;
    auto* analyze = app.add_subcommand("analyze", "Analyze one curve");
    auto* source = analyze->add_option_group("source", "curve to analyze");
    source->add_option("--poly", aa.poly, "Homogeneous polynomial in x, y, z");
    source->add_option("--arrangement", aa.arrangement, "File with one linear form per line");
    source->add_option("--catalog", aa.catalogName, "Name of a built-in curve (see 'catalog list')");
    source->require_option(1);
    analyze->add_option("--format", aa.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    analyze->add_option("--kmax", aa.kmax, "Degree bound for the scans (default 3d-3)")->check(CLI::NonNegativeNumber);
    analyze->add_flag("--timing", aa.timing, "Include the wall-clock time in the report");

    curvesat::SuiteOptions so;
    std::string only;
    auto* suite = app.add_subcommand("suite", "Run the property suite over the catalog and random arrangements");
    suite->add_option("--random", so.random, "Number of random line arrangements")->capture_default_str();
    suite->add_option("--seed", so.seed, "Seed for the random arrangements")->capture_default_str();
    suite->add_option("--only", only, "Report a single check group");

    auto* cat = app.add_subcommand("catalog", "Built-in curves");
    cat->require_subcommand(1);
    auto* list = cat->add_subcommand("list", "List catalog names");

    CLI11_PARSE(app, argc, argv);

    if (analyze->parsed()) return analyze_command(aa);
    if (suite->parsed()) {
        if (!only.empty()) so.only = only;
        return suite_command(so);
    }
    if (list->parsed()) return run_catalog_list();
    return Ok;
}
