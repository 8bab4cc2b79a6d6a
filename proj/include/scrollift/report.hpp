#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "binary_form.hpp"
#include "curve.hpp"
#include "implicitize.hpp"
#include "io.hpp"
#include "moving_line.hpp"
#include "rational.hpp"
#include "scroll.hpp"
#include "syzygy.hpp"
#include "ternary_poly.hpp"

namespace scrollift {

using Json = nlohmann::json;

// Rationals are serialized as strings ("p" or "p/q") so JSON round trips are
// bit-exact; coefficient lists follow the same order as the text format
// (highest s-power first).
inline Json form_json(const BinaryForm& f) {
    Json arr = Json::array();
    for (int i = 0; i <= f.degree(); ++i) arr.push_back(rational_str(f.coeff(i)));
    return arr;
}

inline BinaryForm form_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("form must be a non-empty JSON array");
    std::vector<Rat> c;
    c.reserve(j.size());
    for (const auto& item : j) {
        if (!item.is_string()) throw ParseError("form coefficients must be JSON strings");
        try {
            c.push_back(parse_rational(item.get<std::string>()));
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("bad coefficient: ") + e.what());
        }
    }
    const int degree = static_cast<int>(c.size()) - 1;
    return BinaryForm(degree, std::move(c));
}

inline Json line_json(const MovingLine& ml) {
    return Json::array({form_json(ml.a[0]), form_json(ml.a[1]), form_json(ml.a[2])});
}

inline Json point_json(const std::vector<Rat>& pt) {
    Json arr = Json::array();
    for (const Rat& x : pt) arr.push_back(rational_str(x));
    return arr;
}

inline Json quadric_json(const QuadricForm& q) {
    Json terms = Json::array();
    for (const auto& [ij, c] : q.coeff) {
        terms.push_back(Json::array({ij.first, ij.second, rational_str(c)}));
    }
    return Json{{"nvars", q.nvars}, {"terms", std::move(terms)}, {"text", q.str()}};
}

inline Json ternary_json(const TernaryPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        terms.push_back(Json{{"exponents", Json::array({e[0], e[1], e[2]})}, {"coeff", rational_str(c)}});
    }
    return Json{{"degree", p.degree()}, {"terms", std::move(terms)}, {"text", p.str()}};
}

inline std::string chart_str(const std::array<int, 2>& chart) {
    return std::to_string(chart[0]) + std::to_string(chart[1]);
}

inline std::array<int, 2> chart_from_str(const std::string& s) {
    if (s == "01") return {0, 1};
    if (s == "02") return {0, 2};
    if (s == "12") return {1, 2};
    throw ParseError("chart must be one of 01, 02, 12");
}

inline std::string line_str(const MovingLine& ml) {
    return "(" + ml.a[0].str() + " | " + ml.a[1].str() + " | " + ml.a[2].str() + ")";
}

// Everything the analyze report needs, computed once from the raw input
// triple.
struct CurveAnalysis {
    std::array<BinaryForm, 3> input;
    CurveBuild build;
    Rat lambda;     // determinant scalar: minors of (p; q) = lambda * f
    int map_deg = 1;
    ScrollData second;
};

inline CurveAnalysis analyze_curve(const std::array<BinaryForm, 3>& input,
                                   std::uint64_t seed = kDefaultSeed) {
    CurveAnalysis out{input, make_curve(input), Rat(0), 1, ScrollData{}};
    const MuBasis& mu = out.build.curve.mu();
    out.lambda = hilbert_burch_scalar(out.build.curve.forms(), mu.p, mu.q);
    out.map_deg = map_degree(out.build.curve, 5, seed);
    out.second = second_level(out.build.curve);
    return out;
}

inline Json analysis_json(const CurveAnalysis& an) {
    const MuBasis& mu = an.build.curve.mu();
    const int d = an.build.curve.degree();
    Json j{
        {"input", Json::array({form_json(an.input[0]), form_json(an.input[1]), form_json(an.input[2])})},
        {"removed_factor", form_json(an.build.removed_factor)},
        {"degree", d},
        {"splitting", Json::array({mu.k, d - mu.k})},
        {"balanced", mu.balanced},
        {"mu_basis", Json{{"p", line_json(mu.p)}, {"q", line_json(mu.q)}}},
        {"determinant_scalar", rational_str(an.lambda)},
        {"map_degree", an.map_deg},
        {"second_level", Json{{"h", an.second.h},
                              {"e", an.second.e},
                              {"cone", an.second.cone},
                              {"gamma", line_json(an.second.gamma)},
                              {"delta", line_json(an.second.delta)}}},
    };
    return j;
}

inline void print_analysis(std::ostream& out, const CurveAnalysis& an) {
    const MuBasis& mu = an.build.curve.mu();
    const int d = an.build.curve.degree();
    const auto& f = an.build.curve.forms();
    out << "curve: (" << f[0].str() << " : " << f[1].str() << " : " << f[2].str() << ")\n";
    if (an.build.removed_factor.degree() > 0) {
        out << "removed common factor: " << an.build.removed_factor.str() << "\n";
    }
    out << "degree: " << d << "\n";
    out << "splitting type: (" << mu.k << ", " << d - mu.k << ")"
        << (mu.balanced ? "  [balanced]" : "") << "\n";
    out << "mu-basis p: " << line_str(mu.p) << "\n";
    out << "mu-basis q: " << line_str(mu.q) << "\n";
    out << "determinant scalar: " << rational_str(an.lambda) << "\n";
    out << "map degree: " << an.map_deg << "\n";
    out << "second level: h = " << an.second.h << ", e = " << an.second.e
        << (an.second.cone ? "  [cone]" : "") << "\n";
    out << "second-level gamma: " << line_str(an.second.gamma) << "\n";
    out << "second-level delta: " << line_str(an.second.delta) << "\n";
}

inline Json diagnostics_json(const LiftDiagnostics& diag) {
    Json j{{"generic_fiber_degree", diag.generic_fiber_degree},
           {"ramification_degree", diag.ramification_degree},
           {"cone", diag.cone},
           {"consistent", diag.consistent}};
    if (diag.vertex) j["vertex"] = point_json(*diag.vertex);
    if (diag.vertex_preimage_degree) j["vertex_preimage_degree"] = *diag.vertex_preimage_degree;
    return j;
}

inline Json lift_json(const LiftedCurve& lc, const ScrollData& sd, const LiftDiagnostics& diag) {
    Json coords = Json::array();
    for (const BinaryForm& h : lc.coords) coords.push_back(form_json(h));
    return Json{{"degree", lc.degree}, {"k", lc.k},           {"h", sd.h},
                {"e", sd.e},           {"chart", chart_str(lc.chart)},
                {"coords", coords},   {"removed_gcd", form_json(lc.removed_gcd)},
                {"diagnostics", diagnostics_json(diag)}};
}

// Rebuilds the serialized lift (coordinates, chart, removed factor); the
// syzygy basis is not serialized.
inline LiftedCurve lift_from_json(const Json& j) {
    LiftedCurve lc;
    try {
        lc.degree = j.at("degree").get<int>();
        lc.k = j.at("k").get<int>();
        lc.chart = chart_from_str(j.at("chart").get<std::string>());
        for (const auto& cj : j.at("coords")) lc.coords.push_back(form_from_json(cj));
        lc.removed_gcd = form_from_json(j.at("removed_gcd"));
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed lift JSON: ") + e.what());
    }
    return lc;
}

inline void print_lift(std::ostream& out, const LiftedCurve& lc, const ScrollData& sd,
                       const LiftDiagnostics& diag) {
    out << "lift target: P^" << lc.k + 1 << " (scroll parameters h = " << sd.h << ", e = " << sd.e
        << (sd.cone ? ", cone" : "") << ")\n";
    out << "chart: (" << lc.chart[0] << ", " << lc.chart[1] << ")\n";
    out << "removed factor: " << lc.removed_gcd.str() << "\n";
    for (std::size_t i = 0; i < lc.coords.size(); ++i) {
        out << "h" << i << " = " << lc.coords[i].str() << "\n";
    }
    out << "generic fiber degree: " << diag.generic_fiber_degree << "\n";
    out << "ramification degree: " << diag.ramification_degree << "\n";
    if (diag.vertex) {
        out << "cone vertex: " << point_json(*diag.vertex).dump() << " (preimage degree "
            << (diag.vertex_preimage_degree ? *diag.vertex_preimage_degree : -1) << ")\n";
    }
    out << "diagnostics consistent: " << (diag.consistent ? "yes" : "no") << "\n";
}

inline Json implicit_json(const ImplicitResult& ir) {
    return Json{{"equation", ternary_json(ir.equation)},
                {"map_degree", ir.map_deg},
                {"total_degree", ir.equation.degree()}};
}

inline void print_implicit(std::ostream& out, const ImplicitResult& ir) {
    out << "implicit equation: " << ir.equation.str() << "\n";
    out << "equation degree: " << ir.equation.degree() << "\n";
    out << "map degree: " << ir.map_deg << "\n";
}

} // namespace scrollift
