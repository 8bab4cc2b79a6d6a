#pragma once

#include <array>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "binary_form.hpp"
#include "moving_line.hpp"
#include "rational.hpp"

namespace scrollift {

// Malformed input text (curve files, inline curve arguments, serialized
// forms). The CLI reports these on the diagnostic stream and exits with
// status 2, distinguishing them from domain failures (status 1).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string trim_copy(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// Splits a file body into meaningful lines: blank lines and '#' comments are
// skipped, inline '#' comments are stripped.
inline std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim_copy(line);
        if (!line.empty()) out.push_back(line);
    }
    return out;
}

} // namespace detail

// Parses a bracketed coefficient list like "[1, 0, -2/3]". Coefficients are
// listed highest s-power first.
inline std::vector<Rat> parse_bracket_list(const std::string& text) {
    const std::string s = detail::trim_copy(text);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
        throw ParseError("expected a bracketed coefficient list, got \"" + text + "\"");
    }
    const std::string body = s.substr(1, s.size() - 2);
    std::vector<Rat> out;
    std::string item;
    std::istringstream in(body);
    while (std::getline(in, item, ',')) {
        item = detail::trim_copy(item);
        if (item.empty()) throw ParseError("empty coefficient in \"" + text + "\"");
        try {
            out.push_back(parse_rational(item));
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string(e.what()) + " in \"" + text + "\"");
        }
    }
    if (out.empty()) throw ParseError("empty coefficient list in \"" + text + "\"");
    return out;
}

// A bracketed list of n+1 coefficients denotes a degree-n binary form,
// highest s-power first.
inline BinaryForm parse_form_text(const std::string& text) {
    std::vector<Rat> c = parse_bracket_list(text);
    const int degree = static_cast<int>(c.size()) - 1;
    return BinaryForm(degree, std::move(c));
}

// A parsed curve input: the raw coordinate triple exactly as given (for the
// matrix form, the three 2x2 minors of the given rows). Normalization
// (common-factor removal, nondegeneracy) happens later in make_curve.
struct CurveInput {
    std::array<BinaryForm, 3> forms;
    bool from_matrix = false;
};

// Inline curve text: three bracketed coefficient lists separated by
// semicolons, e.g. "[1,0,0];[0,1,0];[0,0,1]" for (s^2, s t, t^2).
inline CurveInput parse_curve_inline(const std::string& text) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ';')) parts.push_back(detail::trim_copy(item));
    while (!parts.empty() && parts.back().empty()) parts.pop_back();
    if (parts.size() != 3) {
        throw ParseError("inline curve needs exactly three ';'-separated coefficient lists");
    }
    std::array<BinaryForm, 3> f{parse_form_text(parts[0]), parse_form_text(parts[1]),
                                parse_form_text(parts[2])};
    if (f[1].degree() != f[0].degree() || f[2].degree() != f[0].degree()) {
        throw ParseError("the three coordinate lists must have the same length");
    }
    return CurveInput{std::move(f), false};
}

// Curve file body. Two layouts:
//   degree <d>          |  matrix
//   [..d+1 coeffs..]    |  [..row-1 form..]   (three forms, equal length)
//   [..d+1 coeffs..]    |  [..row-1 form..]
//   [..d+1 coeffs..]    |  [..row-1 form..]
//                       |  [..row-2 form..]   (three forms, equal length)
//                       |  [..row-2 form..]
//                       |  [..row-2 form..]
// Blank lines and '#' comments are ignored. The matrix layout defines the
// curve by the three 2x2 minors of the 2x3 matrix whose rows are the two
// form triples. A single line containing semicolons is accepted as the
// inline layout.
inline CurveInput parse_curve_text(const std::string& text) {
    const std::vector<std::string> lines = detail::content_lines(text);
    if (lines.empty()) throw ParseError("empty curve description");
    if (lines.size() == 1 && lines[0].find(';') != std::string::npos) {
        return parse_curve_inline(lines[0]);
    }

    std::istringstream head(lines[0]);
    std::string keyword;
    head >> keyword;
    if (keyword == "degree") {
        long long d = -1;
        if (!(head >> d) || d < 0) throw ParseError("header must read \"degree <d>\" with d >= 0");
        std::string rest;
        if (head >> rest) throw ParseError("unexpected text after the degree header");
        if (lines.size() != 4) {
            throw ParseError("degree layout needs exactly three coefficient lines, got " +
                             std::to_string(lines.size() - 1));
        }
        std::array<BinaryForm, 3> f{parse_form_text(lines[1]), parse_form_text(lines[2]),
                                    parse_form_text(lines[3])};
        for (const BinaryForm& fi : f) {
            if (fi.degree() != static_cast<int>(d)) {
                throw ParseError("coefficient list length does not match the declared degree " +
                                 std::to_string(d));
            }
        }
        return CurveInput{std::move(f), false};
    }
    if (keyword == "matrix") {
        std::string rest;
        if (head >> rest) throw ParseError("unexpected text after the matrix header");
        if (lines.size() != 7) {
            throw ParseError("matrix layout needs exactly six coefficient lines, got " +
                             std::to_string(lines.size() - 1));
        }
        std::array<BinaryForm, 6> g{parse_form_text(lines[1]), parse_form_text(lines[2]),
                                    parse_form_text(lines[3]), parse_form_text(lines[4]),
                                    parse_form_text(lines[5]), parse_form_text(lines[6])};
        if (g[1].degree() != g[0].degree() || g[2].degree() != g[0].degree()) {
            throw ParseError("the three row-1 lists must have the same length");
        }
        if (g[4].degree() != g[3].degree() || g[5].degree() != g[3].degree()) {
            throw ParseError("the three row-2 lists must have the same length");
        }
        const MovingLine row1(g[0], g[1], g[2]);
        const MovingLine row2(g[3], g[4], g[5]);
        return CurveInput{cross(row1, row2), true};
    }
    throw ParseError("unknown curve header \"" + lines[0] + "\" (expected \"degree <d>\" or \"matrix\")");
}

inline CurveInput load_curve_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open curve file \"" + path + "\"");
    std::ostringstream body;
    body << in.rdbuf();
    return parse_curve_text(body.str());
}

// CLI curve argument: anything containing '[' is parsed as curve text
// (inline triple or a full multi-line description); otherwise it names a
// file.
inline CurveInput parse_curve_arg(const std::string& arg) {
    if (arg.find('[') != std::string::npos) return parse_curve_text(arg);
    return load_curve_file(arg);
}

} // namespace scrollift
