#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "curve.hpp"
#include "error.hpp"
#include "resultant.hpp"
#include "rng.hpp"
#include "ternary_poly.hpp"

namespace scrollift {

struct ImplicitResult {
    TernaryPoly equation;      // primitive integral implicit equation F, degree d / r
    int map_deg = 1;           // r: the resultant equals (constant) * F^r
    TernaryPoly resultant_raw; // the degree-d moving-line resultant itself
};

// Implicitizes via the resultant of the mu-basis: Res(p, q) = c * F^r where
// F is the implicit equation and r the degree of the parameterization map.
// Throws ZeroResultant when the resultant vanishes identically and
// PowerExtractionFailed when no perfect r-th root exists for any supported r.
inline ImplicitResult implicitize(const ParamCurve& c, std::uint64_t seed = kDefaultSeed) {
    const MuBasis& mu = c.mu();
    TernaryPoly raw = resultant_moving_lines(mu.p, mu.q);
    if (raw.is_zero()) {
        throw DomainError("ZeroResultant",
                          "moving-line resultant vanishes identically; input is not a faithful curve");
    }

    int r = map_degree(c, 5, seed);
    std::optional<TernaryPoly> root = perfect_power_root(raw, r);
    if (!root) {
        // A small map-degree sample can overshoot (every draw hit a special
        // point); one deeper retry settles it.
        const int r2 = map_degree(c, 11, seed + 1);
        if (r2 != r) {
            r = r2;
            root = perfect_power_root(raw, r);
        }
    }
    if (!root) {
        throw DomainError("PowerExtractionFailed",
                          "resultant is not a perfect power matching the map degree");
    }

    ImplicitResult out;
    out.map_deg = r;
    out.resultant_raw = raw;
    out.equation = root->primitive();
    if (out.equation.degree() * r != c.degree()) {
        throw DomainError("PowerExtractionFailed", "implicit degree does not match d / r");
    }
    if (!out.equation.substitute(c.forms()).is_zero()) {
        throw DomainError("PowerExtractionFailed", "implicit equation does not vanish on the curve");
    }
    return out;
}

} // namespace scrollift
