#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "binary_form.hpp"
#include "curve.hpp"
#include "error.hpp"
#include "matrix.hpp"
#include "moving_line.hpp"
#include "rng.hpp"
#include "syzygy.hpp"

namespace scrollift {

// Second-level data: the mu-basis (gamma, delta) of the first mu-basis
// generator alpha = p. Its lower degree h determines the scroll S(h, k-h)
// on which the curve lifts, and e = k - 2h is the Hirzebruch invariant of
// that scroll. h == 0 exactly when alpha's components are linearly
// dependent, i.e. the scroll degenerates to a cone.
struct ScrollData {
    int d = 0; // plane curve degree
    int k = 0; // lower mu-basis degree
    int h = 0; // lower second-level degree
    int e = 0; // k - 2h
    MovingLine gamma; // degree h
    MovingLine delta; // degree k - h
    bool cone = false; // h == 0

    // Intersection numbers in the divisor basis (directrix C0, fiber f) of
    // the Hirzebruch surface F_e: C0^2 = -e, C0.f = 1, f^2 = 0. The
    // hyperplane class is H = C0 + (k-h) f and the lifted curve class is
    // D = C0 + (d-h) f.
    int directrix_self() const { return -e; }
    int hyperplane_fiber_coeff() const { return k - h; }
    int curve_fiber_coeff() const { return d - h; }
    int scroll_degree() const { return -e + 2 * (k - h); }               // H.H
    int hyperplane_dot_curve() const { return -e + (k - h) + (d - h); }  // H.D
    int curve_dot_directrix() const { return -e + (d - h); }             // D.C0
};

inline ScrollData second_level(const ParamCurve& c) {
    const MuBasis& mu = c.mu();
    const detail::MinimalPair pair = detail::minimal_syzygy_pair(mu.p.a, 0);
    ScrollData out;
    out.d = c.degree();
    out.k = mu.k;
    out.h = pair.k;
    out.e = out.k - 2 * out.h;
    out.gamma = pair.p;
    out.delta = pair.q;
    out.cone = (out.h == 0);
    return out;
}

// A lift of the plane curve to the rational normal scroll in P^(k+1).
struct LiftedCurve {
    int k = 0;                    // scroll parameter (lower mu-basis degree)
    int degree = 0;               // degree of the lifted curve (= plane degree d)
    std::array<int, 2> chart{};   // coordinate pair (a, b) used for the lift
    std::vector<BinaryForm> coords; // k + 2 forms of degree d, gcd 1
    BinaryForm removed_gcd;       // the degree-k common factor divided out
    std::vector<MovingLine> basis; // the k+2 degree-k syzygies of alpha used
};

namespace detail {

// Basis of the degree-k syzygy space of alpha in the pinned order: first the
// canonical complement (echelonized against the Koszul span), then the three
// Koszul syzygies K1 = (0, a2, -a1), K2 = (a2, 0, -a0), K3 = (a1, -a0, 0).
inline std::vector<MovingLine> alpha_syzygy_basis(const MovingLine& alpha) {
    const int k = alpha.degree();
    const std::array<BinaryForm, 3>& a = alpha.a;
    const std::vector<MovingLine> space = syzygy_space(a, k);
    if (static_cast<int>(space.size()) != k + 2) {
        throw std::logic_error("degree-k syzygy space of alpha should have dimension k+2");
    }
    const MovingLine k1(BinaryForm(k), a[2], -a[1]);
    const MovingLine k2(a[2], BinaryForm(k), -a[0]);
    const MovingLine k3(a[1], -a[0], BinaryForm(k));

    ExactMatrix koszul(3, 3 * (k + 1));
    const std::array<const MovingLine*, 3> ks{&k1, &k2, &k3};
    for (int i = 0; i < 3; ++i) {
        const std::vector<Rat> v = ks[static_cast<std::size_t>(i)]->coeff_vector();
        for (std::size_t j = 0; j < v.size(); ++j) koszul.at(i, static_cast<int>(j)) = v[j];
    }
    const EchelonForm ke = rref(koszul);
    if (static_cast<int>(ke.pivot_cols.size()) != 3) {
        throw std::logic_error("Koszul syzygies of a primitive alpha should be independent");
    }

    std::vector<std::vector<Rat>> reduced;
    for (const MovingLine& w : space) {
        std::vector<Rat> v = w.coeff_vector();
        reduce_against(v, ke);
        bool nonzero = false;
        for (const Rat& cc : v) {
            if (cc != 0) {
                nonzero = true;
                break;
            }
        }
        if (nonzero) reduced.push_back(std::move(v));
    }

    std::vector<MovingLine> out;
    if (!reduced.empty()) {
        ExactMatrix stack(static_cast<int>(reduced.size()), 3 * (k + 1));
        for (int i = 0; i < stack.rows(); ++i) {
            for (int j = 0; j < stack.cols(); ++j) {
                stack.at(i, j) = reduced[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            }
        }
        const EchelonForm ce = rref(std::move(stack));
        for (std::size_t i = 0; i < ce.pivot_cols.size(); ++i) {
            std::vector<Rat> v(static_cast<std::size_t>(3 * (k + 1)));
            for (int j = 0; j < 3 * (k + 1); ++j) v[static_cast<std::size_t>(j)] = ce.mat.at(static_cast<int>(i), j);
            out.push_back(MovingLine::from_coeff_vector(k, v));
        }
    }
    if (static_cast<int>(out.size()) != k - 1) {
        throw std::logic_error("Koszul complement should have dimension k-1");
    }
    out.push_back(k1);
    out.push_back(k2);
    out.push_back(k3);
    return out;
}

} // namespace detail

// Lifts the curve to P^(k+1): each degree-k syzygy A of alpha yields the form
// g_A = f_a A_b - f_b A_a on chart (a, b); the k+2 basis syzygies give k+2
// forms with common factor of degree exactly k, and dividing it out produces
// the degree-d coordinates of the lifted curve on the scroll.
//
// A chart is degenerate exactly when all k+2 forms vanish (this happens for
// at most one chart, when the complementary component of alpha is zero); the
// default order tries (0,1), then (0,2), then (1,2). Requesting a degenerate
// chart throws ChartDegenerate.
inline LiftedCurve lift_to_scroll(const ParamCurve& c,
                                  std::optional<std::array<int, 2>> forced_chart = std::nullopt) {
    const MuBasis& mu = c.mu();
    const int k = mu.k;
    const int d = c.degree();
    const std::array<BinaryForm, 3>& f = c.forms();
    const std::vector<MovingLine> basis = detail::alpha_syzygy_basis(mu.p);

    std::vector<std::array<int, 2>> charts;
    if (forced_chart) {
        const auto& ch = *forced_chart;
        if (ch[0] < 0 || ch[1] > 2 || ch[0] >= ch[1]) {
            throw std::invalid_argument("chart must be one of (0,1), (0,2), (1,2)");
        }
        charts.push_back(ch);
    } else {
        charts = {{0, 1}, {0, 2}, {1, 2}};
    }

    for (const auto& chart : charts) {
        const int a = chart[0], b = chart[1];
        std::vector<BinaryForm> g;
        g.reserve(basis.size());
        bool all_zero = true;
        for (const MovingLine& ml : basis) {
            BinaryForm gi = f[static_cast<std::size_t>(a)] * ml.a[static_cast<std::size_t>(b)] -
                            f[static_cast<std::size_t>(b)] * ml.a[static_cast<std::size_t>(a)];
            if (!gi.is_zero()) all_zero = false;
            g.push_back(std::move(gi));
        }
        if (all_zero) {
            if (forced_chart) {
                throw DomainError("ChartDegenerate",
                                  "chart (" + std::to_string(a) + "," + std::to_string(b) +
                                      ") degenerates for this curve");
            }
            continue;
        }
        const BinaryForm common = bf_gcd_list(g);
        if (common.degree() != k) {
            throw DomainError("GcdDegreeMismatch",
                              "common factor has degree " + std::to_string(common.degree()) +
                                  ", expected " + std::to_string(k));
        }
        LiftedCurve out;
        out.k = k;
        out.degree = d;
        out.chart = chart;
        out.removed_gcd = common;
        out.basis = basis;
        out.coords.reserve(g.size());
        for (const BinaryForm& gi : g) out.coords.push_back(bf_div_exact(gi, common));
        return out;
    }
    throw DomainError("ChartExhausted", "every chart degenerates; alpha cannot be primitive");
}

// Projects the lifted curve back to a plane curve. With no centers the
// canonical projection onto the last three coordinates (the Koszul block) is
// used, with the middle sign flipped so that the result reproduces the
// original parameterization up to one global scalar. Explicit centers must
// be k-1 independent points of P^(k+1) off the lifted curve; the projection
// image is then written in the canonical basis of the annihilator.
inline CurveBuild project_lift(const LiftedCurve& lc,
                               const std::vector<std::vector<Rat>>& centers = {}) {
    const int k = lc.k;
    const int n = k + 2;
    if (centers.empty()) {
        return make_curve({lc.coords[static_cast<std::size_t>(k - 1)],
                           -lc.coords[static_cast<std::size_t>(k)],
                           lc.coords[static_cast<std::size_t>(k + 1)]});
    }
    if (static_cast<int>(centers.size()) != k - 1) {
        throw std::invalid_argument("projection to the plane needs exactly k-1 centers");
    }
    ExactMatrix m(k - 1, n);
    for (int i = 0; i < k - 1; ++i) {
        const auto& ctr = centers[static_cast<std::size_t>(i)];
        if (static_cast<int>(ctr.size()) != n) {
            throw std::invalid_argument("center has wrong dimension");
        }
        if (point_preimage_form(lc.coords, ctr).degree() > 0) {
            throw DomainError("CenterOnCurve", "projection center lies on the lifted curve");
        }
        for (int j = 0; j < n; ++j) m.at(i, j) = ctr[static_cast<std::size_t>(j)];
    }
    if (rank(m) != k - 1) {
        throw std::invalid_argument("projection centers must be linearly independent");
    }
    const std::vector<std::vector<Rat>> ann = kernel_basis(m);
    if (ann.size() != 3) throw std::logic_error("annihilator of k-1 points should be 3-dimensional");
    std::array<BinaryForm, 3> g{BinaryForm(lc.degree), BinaryForm(lc.degree), BinaryForm(lc.degree)};
    for (int j = 0; j < 3; ++j) {
        for (int i = 0; i < n; ++i) {
            g[static_cast<std::size_t>(j)] +=
                ann[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] * lc.coords[static_cast<std::size_t>(i)];
        }
    }
    return make_curve(g);
}

// A quadratic form in nvars homogeneous coordinates.
struct QuadricForm {
    int nvars = 0;
    std::map<std::pair<int, int>, Rat> coeff; // keys (i, j) with i <= j

    BinaryForm eval_forms(const std::vector<BinaryForm>& x) const {
        if (static_cast<int>(x.size()) != nvars) throw std::invalid_argument("variable count mismatch");
        const int d = x.empty() ? 0 : x[0].degree();
        BinaryForm acc(2 * d);
        for (const auto& [ij, c] : coeff) {
            acc += c * (x[static_cast<std::size_t>(ij.first)] * x[static_cast<std::size_t>(ij.second)]);
        }
        return acc;
    }

    Rat eval_point(const std::vector<Rat>& x) const {
        if (static_cast<int>(x.size()) != nvars) throw std::invalid_argument("variable count mismatch");
        Rat acc = 0;
        for (const auto& [ij, c] : coeff) {
            acc += c * x[static_cast<std::size_t>(ij.first)] * x[static_cast<std::size_t>(ij.second)];
        }
        return acc;
    }

    std::string str() const {
        if (coeff.empty()) return "0";
        std::string out;
        for (const auto& [ij, c] : coeff) {
            const bool neg = c < 0;
            const Rat mag = neg ? Rat(-c) : c;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            std::string mono = "x" + std::to_string(ij.first);
            if (ij.second == ij.first) {
                mono += "^2";
            } else {
                mono += "*x" + std::to_string(ij.second);
            }
            if (mag != 1) {
                out += rational_str(mag) + "*" + mono;
            } else {
                out += mono;
            }
        }
        return out;
    }
};

// Canonical basis of the space of quadrics vanishing on a parameterized
// curve in P^(n-1): kernel of the coefficient matrix of the products
// x_i x_j -> h_i h_j.
inline std::vector<QuadricForm> quadrics_through(const std::vector<BinaryForm>& coords) {
    const int n = static_cast<int>(coords.size());
    if (n < 2) throw std::invalid_argument("need at least two coordinates");
    const int d = coords[0].degree();
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) pairs.emplace_back(i, j);
    }
    ExactMatrix m(2 * d + 1, static_cast<int>(pairs.size()));
    for (std::size_t col = 0; col < pairs.size(); ++col) {
        const BinaryForm prod =
            coords[static_cast<std::size_t>(pairs[col].first)] * coords[static_cast<std::size_t>(pairs[col].second)];
        for (int r = 0; r <= 2 * d; ++r) m.at(r, static_cast<int>(col)) = prod.coeff(r);
    }
    std::vector<QuadricForm> out;
    for (const auto& v : kernel_basis(m)) {
        QuadricForm q;
        q.nvars = n;
        for (std::size_t col = 0; col < pairs.size(); ++col) {
            if (v[col] != 0) q.coeff.emplace(pairs[col], v[col]);
        }
        out.push_back(std::move(q));
    }
    return out;
}

struct LiftDiagnostics {
    int generic_fiber_degree = 0;          // 1 means the lift is generically injective
    int ramification_degree = 0;           // gcd degree of the derivative minors; 0 = immersion
    bool cone = false;                     // scroll degenerates to a cone (h == 0)
    std::optional<std::vector<Rat>> vertex;         // cone vertex, first nonzero coordinate 1
    std::optional<int> vertex_preimage_degree;      // expected d - k
    bool consistent = true;                // all internal cross-checks passed
};

namespace detail {

// The residues of the lift coordinates modulo the vertex parameter form W
// must all be proportional to one common residue; the proportionality vector
// is the vertex. A parameter shear keeps any root at infinity inside the
// affine chart before dehomogenizing.
inline std::optional<std::vector<Rat>> common_residue_direction(const std::vector<BinaryForm>& coords,
                                                               const BinaryForm& w) {
    long long shear = 0;
    bool found = false;
    for (long long cand = 0; cand <= 80 && !found; ++cand) {
        for (const long long sgn : {1LL, -1LL}) {
            const long long cval = sgn * cand;
            if (w.eval(Rat(1), Rat(cval)) != 0) {
                shear = cval;
                found = true;
                break;
            }
            if (cand == 0) break;
        }
    }
    if (!found) return std::nullopt;
    const Mat2 sigma{{{Rat(1), Rat(0)}, {Rat(shear), Rat(1)}}};

    const Uni wu = to_uni_t1(w.compose(sigma));
    if (uni_degree(wu) != w.degree()) return std::nullopt;

    std::vector<Uni> residues;
    residues.reserve(coords.size());
    for (const BinaryForm& h : coords) {
        Uni r = uni_rem(to_uni_t1(h.compose(sigma)), wu);
        residues.push_back(std::move(r));
    }

    int lead = -1;
    for (std::size_t i = 0; i < residues.size(); ++i) {
        if (!uni_is_zero(residues[i])) {
            lead = static_cast<int>(i);
            break;
        }
    }
    if (lead < 0) return std::nullopt;
    const Uni& base = residues[static_cast<std::size_t>(lead)];
    std::size_t ref = 0;
    while (base[ref] == 0) ++ref;

    std::vector<Rat> v(coords.size(), Rat(0));
    v[static_cast<std::size_t>(lead)] = 1;
    for (std::size_t i = static_cast<std::size_t>(lead) + 1; i < residues.size(); ++i) {
        const Uni& ri = residues[i];
        const Rat scale = ref < ri.size() ? ri[ref] / base[ref] : Rat(0);
        // Verify exact proportionality r_i = scale * base.
        const std::size_t len = std::max(ri.size(), base.size());
        for (std::size_t j = 0; j < len; ++j) {
            const Rat a = j < ri.size() ? ri[j] : Rat(0);
            const Rat b = j < base.size() ? base[j] : Rat(0);
            if (a != scale * b) return std::nullopt;
        }
        v[i] = scale;
    }
    return v;
}

} // namespace detail

// Geometric sanity data for a lift: generic injectivity, immersion away from
// finitely many parameters (through the gcd of derivative minors), and, when
// the scroll is a cone, the vertex together with its preimage degree.
inline LiftDiagnostics lift_diagnostics(const LiftedCurve& lc, const ScrollData& sd,
                                        const ParamCurve& plane, std::uint64_t seed = kDefaultSeed) {
    LiftDiagnostics out;
    out.cone = sd.cone;
    out.generic_fiber_degree = map_degree_of(lc.coords, 5, seed);

    std::vector<BinaryForm> dmins;
    for (std::size_t i = 0; i < lc.coords.size(); ++i) {
        for (std::size_t j = i + 1; j < lc.coords.size(); ++j) {
            dmins.push_back(lc.coords[i].derivative_s() * lc.coords[j].derivative_t() -
                            lc.coords[i].derivative_t() * lc.coords[j].derivative_s());
        }
    }
    bool all_zero = true;
    for (const BinaryForm& mform : dmins) {
        if (!mform.is_zero()) {
            all_zero = false;
            break;
        }
    }
    if (all_zero) {
        out.ramification_degree = -1;
        out.consistent = false;
    } else {
        out.ramification_degree = bf_gcd_list(dmins).degree();
    }

    if (sd.cone) {
        // Vertex = common image of the parameters where the plane curve meets
        // the dependency direction gamma (a constant vector when h = 0).
        std::vector<Rat> gpt(3);
        for (int i = 0; i < 3; ++i) gpt[static_cast<std::size_t>(i)] = sd.gamma.a[static_cast<std::size_t>(i)].coeff(0);
        const auto& f = plane.forms();
        const BinaryForm w = point_preimage_form({f[0], f[1], f[2]}, gpt);
        out.vertex_preimage_degree = w.degree();
        if (w.degree() != plane.degree() - lc.k) out.consistent = false;
        if (w.degree() > 0) {
            out.vertex = detail::common_residue_direction(lc.coords, w);
            if (!out.vertex) out.consistent = false;
        } else {
            out.consistent = false;
        }
    }
    return out;
}

} // namespace scrollift
