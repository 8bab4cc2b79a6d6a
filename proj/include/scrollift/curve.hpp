#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "binary_form.hpp"
#include "error.hpp"
#include "matrix.hpp"
#include "rng.hpp"
#include "syzygy.hpp"

namespace scrollift {

// Greatest common divisor of a list of forms, ignoring zero entries.
// Throws ZeroInput when every entry vanishes.
inline BinaryForm bf_gcd_list(const std::vector<BinaryForm>& fs) {
    std::optional<BinaryForm> g;
    for (const BinaryForm& f : fs) {
        if (f.is_zero()) continue;
        g = g ? bf_gcd(*g, f) : f.monic();
        if (g->degree() == 0) break;
    }
    if (!g) throw DomainError("ZeroInput", "gcd of an all-zero list");
    return *g;
}

// The unique (monic) form whose roots are the parameters mapping to the
// point pt, counted with multiplicity: the gcd of the 2x2 minors of the
// matrix with rows (coords) and (pt). Degree 0 means pt is off the curve.
inline BinaryForm point_preimage_form(const std::vector<BinaryForm>& coords,
                                      const std::vector<Rat>& pt) {
    if (coords.size() != pt.size() || coords.size() < 2) {
        throw std::invalid_argument("point dimension mismatch");
    }
    const bool pt_zero = std::all_of(pt.begin(), pt.end(), [](const Rat& c) { return c == 0; });
    if (pt_zero) throw std::invalid_argument("zero vector is not a projective point");
    std::vector<BinaryForm> minors;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        for (std::size_t j = i + 1; j < coords.size(); ++j) {
            minors.push_back(coords[i] * pt[j] - coords[j] * pt[i]);
        }
    }
    return bf_gcd_list(minors);
}

// Degree of the parameterization map for an arbitrary coordinate list:
// the preimage of a generic image point has exactly (map degree) roots, so we
// take the minimum preimage count over several random parameter draws.
inline int map_degree_of(const std::vector<BinaryForm>& coords, int trials = 5,
                         std::uint64_t seed = kDefaultSeed) {
    Rng rng(seed);
    int best = -1;
    for (int t = 0; t < trials; ++t) {
        const Rat s0 = rng.small_rat(-40, 40);
        const Rat t0 = rng.small_rat(1, 40);
        std::vector<Rat> pt;
        pt.reserve(coords.size());
        for (const BinaryForm& c : coords) pt.push_back(c.eval(s0, t0));
        const int deg = point_preimage_form(coords, pt).degree();
        if (best < 0 || deg < best) best = deg;
    }
    return best;
}

// A rational plane curve given by a primitive parameterization of degree >= 2
// whose three forms are linearly independent. The mu-basis is computed on
// first use and cached.
class ParamCurve {
public:
    explicit ParamCurve(std::array<BinaryForm, 3> f)
        : f_(std::move(f)), cache_(std::make_shared<Cache>()) {}

    int degree() const { return f_[0].degree(); }
    const std::array<BinaryForm, 3>& forms() const { return f_; }

    const MuBasis& mu() const {
        std::call_once(cache_->flag, [this] { cache_->mu = mu_basis(f_); });
        return *cache_->mu;
    }

private:
    struct Cache {
        std::once_flag flag;
        std::optional<MuBasis> mu;
    };

    std::array<BinaryForm, 3> f_;
    std::shared_ptr<Cache> cache_;
};

struct CurveBuild {
    ParamCurve curve;
    BinaryForm removed_factor; // monic; degree 0 when the input was already primitive
};

// Validates and normalizes raw input forms: removes the common factor
// (reporting it), and rejects all-zero input, mismatched degrees, and
// parameterizations whose image is not a plane curve.
inline CurveBuild make_curve(const std::array<BinaryForm, 3>& g) {
    const int d = g[0].degree();
    if (g[1].degree() != d || g[2].degree() != d) {
        throw std::invalid_argument("parameterization forms must share a degree");
    }
    if (g[0].is_zero() && g[1].is_zero() && g[2].is_zero()) {
        throw DomainError("ZeroInput", "all three forms vanish");
    }
    const BinaryForm common = bf_gcd_list({g[0], g[1], g[2]});
    std::array<BinaryForm, 3> f = g;
    if (common.degree() > 0) {
        for (auto& fi : f) fi = bf_div_exact(fi, common);
    }
    const int dd = f[0].degree();
    ExactMatrix rows(3, dd + 1);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j <= dd; ++j) rows.at(i, j) = f[static_cast<std::size_t>(i)].coeff(j);
    }
    if (rank(rows) < 3) {
        throw DomainError("DegenerateLine", "forms span fewer than three dimensions");
    }
    return CurveBuild{ParamCurve(f), common};
}

// Splitting type (k, d-k) with k <= d-k, read off the mu-basis degrees.
inline std::pair<int, int> splitting_type(const ParamCurve& c) {
    const int k = c.mu().k;
    return {k, c.degree() - k};
}

inline int map_degree(const ParamCurve& c, int trials = 5, std::uint64_t seed = kDefaultSeed) {
    const auto& f = c.forms();
    return map_degree_of({f[0], f[1], f[2]}, trials, seed);
}

// Multiplicity of the curve at a projective point: number of parameter roots
// (with multiplicity) mapping there. 0 means the point is off the curve.
inline int multiplicity_at_point(const ParamCurve& c, const std::array<Rat, 3>& pt) {
    const auto& f = c.forms();
    return point_preimage_form({f[0], f[1], f[2]}, {pt[0], pt[1], pt[2]}).degree();
}

// For a curve of degree d with a point of multiplicity m, the lower and upper
// bounds these data impose on the mu-basis degree k.
struct SingularityBounds {
    int lower = 0;
    int upper = 0;
    bool forced() const { return lower == upper; }
    bool admits(int k) const { return lower <= k && k <= upper; }
};

inline SingularityBounds mu_degree_bounds(int d, int m) {
    if (m < 1 || m >= d) throw std::invalid_argument("multiplicity must satisfy 1 <= m < d");
    SingularityBounds b;
    b.lower = std::min(m, d - m);
    b.upper = std::min(d - m, d / 2);
    return b;
}

} // namespace scrollift
