#pragma once

// Text input: polynomials, line arrangements, and arrangement combinatorics.
//
// Grammar (whitespace is ignored between tokens):
//
//   expr    = [ "+" | "-" ] term { ( "+" | "-" ) term } ;
//   term    = factor { "*" factor } ;
//   factor  = primary [ "^" integer ] | "-" factor ;
//   primary = number | "x" | "y" | "z" | "(" expr ")" ;
//   number  = integer [ "/" integer ] ;
//   integer = digit { digit } ;
//
// Products need an explicit "*". The Unicode minus sign U+2212 is read as "-".

#include <array>
#include <cstddef>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "curvesat/errors.hpp"
#include "curvesat/exactla.hpp"
#include "curvesat/poly.hpp"

namespace curvesat {

namespace detail {

/// Sparse polynomial, not necessarily homogeneous, used while parsing.
using SparsePoly = std::map<Monomial, Rat>;

inline void add_to(SparsePoly& a, const SparsePoly& b, int sign) {
    for (const auto& [m, c] : b) {
        Rat& slot = a[m];
        if (sign > 0)
            slot += c;
        else
            slot -= c;
        if (sgn(slot) == 0) a.erase(m);
    }
}

inline SparsePoly product(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Rat& slot = r[ma * mb];
            slot += ca * cb;
            if (sgn(slot) == 0) r.erase(ma * mb);
        }
    return r;
}

constexpr int max_exponent = 1000;

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : s_(text) {}

    SparsePoly parse() {
        SparsePoly p = expr();
        skip_space();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

    void skip_space() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r' || s_[pos_] == '\n'))
            ++pos_;
    }

    // Current character with U+2212 folded to '-'; 0 at the end.
    char peek() {
        skip_space();
        if (pos_ >= s_.size()) return 0;
        if (s_.compare(pos_, 3, "\xE2\x88\x92") == 0) return '-';
        return s_[pos_];
    }

    void advance() { pos_ += s_.compare(pos_, 3, "\xE2\x88\x92") == 0 ? 3 : 1; }

    SparsePoly expr() {
        SparsePoly acc;
        int sign = 1;
        if (char c = peek(); c == '+' || c == '-') {
            sign = c == '-' ? -1 : 1;
            advance();
        }
        add_to(acc, term(), sign);
        for (;;) {
            const char c = peek();
            if (c != '+' && c != '-') break;
            advance();
            add_to(acc, term(), c == '-' ? -1 : 1);
        }
        return acc;
    }

    SparsePoly term() {
        SparsePoly acc = factor();
        while (peek() == '*') {
            advance();
            acc = product(acc, factor());
        }
        return acc;
    }

    SparsePoly factor() {
        if (peek() == '-') {
            advance();
            SparsePoly p;
            add_to(p, factor(), -1);
            return p;
        }
        SparsePoly base = primary();
        if (peek() != '^') return base;
        advance();
        skip_space();
        const std::size_t at = pos_;
        const Integer e = integer("exponent");
        if (e > max_exponent) throw SyntaxError(at, "exponent too large");
        SparsePoly r{{Monomial{}, Rat(1)}};
        for (long i = 0; i < e.get_si(); ++i) r = product(r, base);
        return r;
    }

    SparsePoly primary() {
        const char c = peek();
        if (c == 0) fail("unexpected end of input");
        if (c == '(') {
            advance();
            SparsePoly p = expr();
            if (peek() != ')') fail("expected ')'");
            advance();
            return p;
        }
        if (c == 'x' || c == 'y' || c == 'z') {
            advance();
            Monomial m{c == 'x', c == 'y', c == 'z'};
            return {{m, Rat(1)}};
        }
        if (c >= '0' && c <= '9') {
            Rat value(integer("number"));
            if (peek() == '/') {
                advance();
                skip_space();
                const std::size_t at = pos_;
                const Integer den = integer("denominator");
                if (den == 0) throw SyntaxError(at, "zero denominator");
                value /= den;
            }
            if (sgn(value) == 0) return {};
            return {{Monomial{}, value}};
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Integer integer(const char* what) {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
        if (start == pos_) fail(std::string("expected ") + what);
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline HomogeneousPoly parse_poly(std::string_view text) {
    const detail::SparsePoly p = detail::PolyParser(text).parse();
    if (p.empty()) throw ZeroPolynomial();
    const int d = p.rbegin()->first.degree();
    for (const auto& [m, c] : p)
        if (m.degree() != d) throw NotHomogeneous(d, m.degree());
    HomogeneousPoly out(d);
    for (const auto& [m, c] : p) out += HomogeneousPoly::monomial(m, c);
    return out;
}

struct ArrangementSpec {
    std::vector<HomogeneousPoly> forms;
    std::string sourceText;

    int degree() const noexcept { return static_cast<int>(forms.size()); }

    /// The defining polynomial: the product of the forms.
    HomogeneousPoly product() const {
        HomogeneousPoly f = HomogeneousPoly::monomial(Monomial{}, 1);
        for (const auto& l : forms) f = f * l;
        return f;
    }
};

inline std::array<Rat, 3> cross(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    const auto& u = a.coefficients();
    const auto& v = b.coefficients();
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

inline ArrangementSpec parse_arrangement(const std::vector<std::string>& lines) {
    ArrangementSpec spec;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        HomogeneousPoly l = parse_poly(lines[i]);
        if (l.degree() != 1) throw NotLinear(i, l.degree());
        for (std::size_t j = 0; j < spec.forms.size(); ++j) {
            const auto c = cross(spec.forms[j], l);
            if (sgn(c[0]) == 0 && sgn(c[1]) == 0 && sgn(c[2]) == 0)
                throw ProportionalLines(j, i, spec.forms[j].to_string(), l.to_string());
        }
        spec.forms.push_back(std::move(l));
        if (!spec.sourceText.empty()) spec.sourceText += '\n';
        spec.sourceText += lines[i];
    }
    return spec;
}

/// Reads an arrangement file: one linear form per line, '#' starts a comment,
/// blank lines are skipped.
inline std::vector<std::string> arrangement_lines(std::istream& in) {
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        const auto e = line.find_last_not_of(" \t\r");
        out.push_back(line.substr(b, e - b + 1));
    }
    return out;
}

inline ArrangementSpec read_arrangement_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputFileError(path);
    return parse_arrangement(arrangement_lines(in));
}

struct Combinatorics {
    std::vector<std::size_t> pointMultiplicities;  // sorted descending
    std::map<std::size_t, std::size_t> nTable;     // multiplicity -> number of points
};

inline Combinatorics combinatorics(const ArrangementSpec& spec) {
    std::map<std::array<Rat, 3>, std::set<std::size_t>> points;
    const std::size_t n = spec.forms.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto p = cross(spec.forms[i], spec.forms[j]);
            const Rat lead = sgn(p[0]) != 0 ? p[0] : sgn(p[1]) != 0 ? p[1] : p[2];
            for (auto& c : p) c /= lead;
            auto& through = points[p];
            through.insert(i);
            through.insert(j);
        }
    Combinatorics c;
    for (const auto& [p, through] : points) {
        c.pointMultiplicities.push_back(through.size());
        ++c.nTable[through.size()];
    }
    std::sort(c.pointMultiplicities.rbegin(), c.pointMultiplicities.rend());
    return c;
}

}  // namespace curvesat
