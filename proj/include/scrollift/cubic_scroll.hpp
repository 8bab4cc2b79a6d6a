#pragma once

#include <array>
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
#include "roots.hpp"
#include "scroll.hpp"
#include "syzygy.hpp"

namespace scrollift {

// Explicit degree-d embedding into P^4 for curves with splitting type
// (3, d-3), realized on a cubic scroll (a surface of degree 3 in P^4, or the
// cone over a twisted cubic when alpha's components are dependent). The
// construction normalizes alpha = p to one of three normal forms over Q,
// writes five coordinate forms in closed form, and verifies that projecting
// from the two listed centers recovers the original curve.
struct CubicScrollEmbedding {
    enum class Contact { Distinct, Tangent, Cone };

    Contact contact = Contact::Distinct;
    int degree = 0;                                 // d
    std::vector<BinaryForm> coords;                 // 5 forms of degree d, gcd 1
    std::vector<QuadricForm> quadrics;              // 3 quadrics vanishing on coords
    std::vector<std::vector<Rat>> recovery_frame;   // 3 linear forms (length-5 rows)
    std::vector<std::vector<Rat>> centers;          // 2 projection centers (annihilator of the frame)
    std::array<BinaryForm, 3> recovered;            // recovery_frame applied to coords
    std::array<BinaryForm, 3> recovered_original;   // normalization undone; equals scalar * f
    Rat recovered_scalar;                           // that scalar (nonzero)
    bool centers_off_curve = false;
    Mat2 reparam;                                   // parameter change M
    std::vector<std::vector<Rat>> frame_change;     // 3x3 coordinate mix P (alpha_hat = (alpha o M) P)
    std::optional<std::vector<Rat>> vertex;         // cone branch: the vertex of the scroll
    std::optional<int> vertex_preimage_degree;      // cone branch: degree of its preimage (= d-3)
};

namespace detail {

inline Mat2 mat2_inverse(const Mat2& m) {
    const Rat det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (det == 0) throw std::logic_error("singular parameter change");
    return Mat2{{{m[1][1] / det, -m[0][1] / det}, {-m[1][0] / det, m[0][0] / det}}};
}

// The binary cubic in (a, b) whose roots are the coefficient pairs of linear
// forms w = a s + b t with w^3 lying in the span of the three cubics.
inline BinaryForm cube_contact_cubic(const std::array<BinaryForm, 3>& alpha) {
    BinaryForm cubic(3);
    const std::array<Rat, 4> binom{Rat(1), Rat(3), Rat(3), Rat(1)};
    for (int i = 0; i <= 3; ++i) {
        ExactMatrix minor(3, 3);
        int rr = 0;
        for (int r = 0; r <= 3; ++r) {
            if (r == i) continue;
            for (int c = 0; c < 3; ++c) minor.at(rr, c) = alpha[static_cast<std::size_t>(c)].coeff(r);
            ++rr;
        }
        Rat term = determinant(minor) * binom[static_cast<std::size_t>(i)];
        if ((i + 3) % 2 == 1) term = -term;
        cubic.set_coeff(i, term);
    }
    return cubic;
}

// Solves (alpha o M) . x = target for each target column; the columns
// assemble the coordinate mix P.
inline std::vector<std::vector<Rat>> solve_frame(const std::array<BinaryForm, 3>& alpha_m,
                                                 const std::array<BinaryForm, 3>& targets) {
    ExactMatrix m(4, 3);
    for (int c = 0; c < 3; ++c) {
        for (int r = 0; r <= 3; ++r) m.at(r, c) = alpha_m[static_cast<std::size_t>(c)].coeff(r);
    }
    std::vector<std::vector<Rat>> p(3, std::vector<Rat>(3, Rat(0)));
    for (int j = 0; j < 3; ++j) {
        std::vector<Rat> rhs(4);
        for (int r = 0; r <= 3; ++r) rhs[static_cast<std::size_t>(r)] = targets[static_cast<std::size_t>(j)].coeff(r);
        const auto x = solve(m, rhs);
        if (!x) throw std::logic_error("normal form targets are not in the span of alpha");
        for (int i = 0; i < 3; ++i) p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (*x)[static_cast<std::size_t>(i)];
    }
    return p;
}

inline std::array<BinaryForm, 3> apply_frame(const std::array<BinaryForm, 3>& row,
                                             const std::vector<std::vector<Rat>>& p) {
    std::array<BinaryForm, 3> out{BinaryForm(row[0].degree()), BinaryForm(row[0].degree()),
                                  BinaryForm(row[0].degree())};
    for (int j = 0; j < 3; ++j) {
        for (int i = 0; i < 3; ++i) {
            out[static_cast<std::size_t>(j)] +=
                p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * row[static_cast<std::size_t>(i)];
        }
    }
    return out;
}

inline std::array<BinaryForm, 3> compose_all(const std::array<BinaryForm, 3>& row, const Mat2& m) {
    return {row[0].compose(m), row[1].compose(m), row[2].compose(m)};
}

// Discriminant of a pencil member lambda v0 + mu v1 of binary cubics, as a
// quartic binary form in (lambda, mu).
inline BinaryForm pencil_discriminant(const BinaryForm& v0, const BinaryForm& v1) {
    auto lin = [&v0, &v1](int idx) {
        return BinaryForm(1, {v0.coeff(idx), v1.coeff(idx)});
    };
    const BinaryForm a = lin(0), b = lin(1), c = lin(2), d = lin(3);
    return Rat(18) * (a * b * c * d) - Rat(4) * (b * b * b * d) + (b * b) * (c * c) -
           Rat(4) * (a * c * c * c) - Rat(27) * (a * a) * (d * d);
}

// The unique repeated root of a binary cubic known to be singular; uses the
// gcd with the partial derivatives.
inline FormRoot repeated_root(const BinaryForm& v) {
    std::vector<BinaryForm> parts{v, v.derivative_s(), v.derivative_t()};
    const BinaryForm g = bf_gcd_list(parts);
    if (g.degree() < 1 || g.degree() > 2) {
        throw std::logic_error("repeated part of a singular cubic should have degree 1 or 2");
    }
    const RootSplit rs = rational_roots(g);
    if (rs.roots.size() != 1 || !rs.fully_split) {
        throw std::logic_error("repeated part of a cubic should be a power of one rational linear form");
    }
    return rs.roots.front();
}

} // namespace detail

inline CubicScrollEmbedding cubic_scroll_embedding(const ParamCurve& curve) {
    const MuBasis& mu = curve.mu();
    if (mu.k != 3) {
        throw DomainError("WrongSplitting", "construction requires splitting type (3, d-3), got (" +
                                                std::to_string(mu.k) + ", " +
                                                std::to_string(curve.degree() - mu.k) + ")");
    }
    const int d = curve.degree();
    const std::array<BinaryForm, 3>& alpha = mu.p.a;
    const std::array<BinaryForm, 3>& beta = mu.q.a;

    CubicScrollEmbedding out;
    out.degree = d;

    // Constant dependency among the alpha components <=> cone case.
    ExactMatrix dep(4, 3);
    for (int c = 0; c < 3; ++c) {
        for (int r = 0; r <= 3; ++r) dep.at(r, c) = alpha[static_cast<std::size_t>(c)].coeff(r);
    }
    const std::vector<std::vector<Rat>> dependency = kernel_basis(dep);

    Mat2 m{{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}};
    std::vector<std::vector<Rat>> frame; // P with alpha_hat = (alpha o M) P
    std::array<BinaryForm, 3> alpha_hat{BinaryForm(3), BinaryForm(3), BinaryForm(3)};
    std::array<BinaryForm, 3> beta_hat{BinaryForm(d - 3), BinaryForm(d - 3), BinaryForm(d - 3)};

    if (dependency.empty()) {
        const BinaryForm contact = detail::cube_contact_cubic(alpha);
        if (contact.is_zero()) throw std::logic_error("contact cubic of independent cubics cannot vanish");
        const RootSplit rs = rational_roots(contact);
        if (!rs.fully_split) {
            throw DomainError("IrrationalNormalization",
                              "contact points of the coordinate plane are not all rational");
        }
        if (rs.roots.size() == 3) {
            out.contact = CubicScrollEmbedding::Contact::Distinct;
            // Send the three contact forms to s, s+t, t.
            const FormRoot& r1 = rs.roots[0];
            const FormRoot& r2 = rs.roots[1];
            const FormRoot& r3 = rs.roots[2];
            const ExactMatrix n = [&] {
                ExactMatrix nm(2, 2);
                nm.at(0, 0) = Rat(r1.a);
                nm.at(0, 1) = Rat(r1.b);
                nm.at(1, 0) = Rat(r3.a);
                nm.at(1, 1) = Rat(r3.b);
                return nm;
            }();
            const ExactMatrix ninv = inverse(n);
            const Rat u = Rat(r2.a) * ninv.at(0, 0) + Rat(r2.b) * ninv.at(1, 0);
            const Rat v = Rat(r2.a) * ninv.at(0, 1) + Rat(r2.b) * ninv.at(1, 1);
            if (u == 0 || v == 0) throw std::logic_error("middle contact form collapsed");
            m = Mat2{{{ninv.at(0, 0) / u, ninv.at(0, 1) / v}, {ninv.at(1, 0) / u, ninv.at(1, 1) / v}}};
        } else if (rs.roots.size() == 2) {
            out.contact = CubicScrollEmbedding::Contact::Tangent;
            // Double contact form to s, simple one to t.
            const FormRoot& rd = rs.roots[0].mult == 2 ? rs.roots[0] : rs.roots[1];
            const FormRoot& rsimple = rs.roots[0].mult == 2 ? rs.roots[1] : rs.roots[0];
            ExactMatrix n(2, 2);
            n.at(0, 0) = Rat(rd.a);
            n.at(0, 1) = Rat(rd.b);
            n.at(1, 0) = Rat(rsimple.a);
            n.at(1, 1) = Rat(rsimple.b);
            const ExactMatrix ninv = inverse(n);
            m = Mat2{{{ninv.at(0, 0), ninv.at(0, 1)}, {ninv.at(1, 0), ninv.at(1, 1)}}};
        } else {
            throw DomainError("IrrationalNormalization",
                              "coordinate plane meets the cubic of cubes in a single triple contact; no "
                              "scroll normal form over Q");
        }

        const std::array<BinaryForm, 3> alpha_m = detail::compose_all(alpha, m);
        std::array<BinaryForm, 3> targets;
        if (out.contact == CubicScrollEmbedding::Contact::Distinct) {
            targets = {BinaryForm(3, {Rat(1), Rat(0), Rat(0), Rat(0)}),
                       BinaryForm(3, {Rat(0), Rat(1), Rat(1), Rat(0)}),
                       BinaryForm(3, {Rat(0), Rat(0), Rat(0), Rat(1)})};
        } else {
            targets = {BinaryForm(3, {Rat(1), Rat(0), Rat(0), Rat(0)}),
                       BinaryForm(3, {Rat(0), Rat(1), Rat(0), Rat(0)}),
                       BinaryForm(3, {Rat(0), Rat(0), Rat(0), Rat(1)})};
        }
        frame = detail::solve_frame(alpha_m, targets);
        alpha_hat = targets;
        beta_hat = detail::apply_frame(detail::compose_all(beta, m), frame);
    } else {
        out.contact = CubicScrollEmbedding::Contact::Cone;
        if (dependency.size() != 1) throw std::logic_error("alpha span should have dimension at least 2");
        const std::vector<Rat>& dvec = dependency.front();
        int lead = 0;
        while (dvec[static_cast<std::size_t>(lead)] == 0) ++lead;

        // First mix: move the dependency into the last slot.
        std::vector<std::vector<Rat>> q1(3, std::vector<Rat>(3, Rat(0)));
        {
            int col = 0;
            for (int idx = 0; idx < 3; ++idx) {
                if (idx == lead) continue;
                q1[static_cast<std::size_t>(idx)][static_cast<std::size_t>(col)] = 1;
                ++col;
            }
            for (int idx = 0; idx < 3; ++idx) q1[static_cast<std::size_t>(idx)][2] = dvec[static_cast<std::size_t>(idx)];
        }
        const std::array<BinaryForm, 3> alpha1 = detail::apply_frame(alpha, q1);
        if (!alpha1[2].is_zero()) throw std::logic_error("dependency should null the last component");
        const BinaryForm& v0 = alpha1[0];
        const BinaryForm& v1 = alpha1[1];

        const BinaryForm disc = detail::pencil_discriminant(v0, v1);
        if (disc.is_zero()) {
            throw DomainError("IrrationalNormalization",
                              "every member of the cubic pencil is singular; no two split generators");
        }
        const RootSplit ds = rational_roots(disc);
        if (ds.roots.size() < 2) {
            throw DomainError("IrrationalNormalization",
                              "fewer than two rational singular members in the cubic pencil");
        }
        const FormRoot& m1 = ds.roots[0];
        const FormRoot& m2 = ds.roots[1];
        const BinaryForm v = Rat(m1.a) * v0 + Rat(m1.b) * v1;
        const BinaryForm u = Rat(m2.a) * v0 + Rat(m2.b) * v1;

        // Second mix: the two singular pencil members become the generators.
        std::vector<std::vector<Rat>> q2(3, std::vector<Rat>(3, Rat(0)));
        q2[0][0] = Rat(m1.a);
        q2[1][0] = Rat(m1.b);
        q2[0][1] = Rat(m2.a);
        q2[1][1] = Rat(m2.b);
        q2[2][2] = 1;

        const FormRoot rv = detail::repeated_root(v); // double root of v -> (0:1)
        const FormRoot ru = detail::repeated_root(u); // double root of u -> (1:0)
        if (rv.a * ru.b == ru.a * rv.b) throw std::logic_error("coprime singular members share a root");
        m = Mat2{{{Rat(ru.a), Rat(rv.a)}, {Rat(ru.b), Rat(rv.b)}}};

        // Total frame P = Q1 Q2.
        frame.assign(3, std::vector<Rat>(3, Rat(0)));
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                Rat acc = 0;
                for (int t = 0; t < 3; ++t) {
                    acc += q1[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] *
                           q2[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)];
                }
                frame[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = acc;
            }
        }
        alpha_hat = detail::compose_all(detail::apply_frame(alpha, frame), m);
        beta_hat = detail::compose_all(detail::apply_frame(beta, frame), m);
        if (!alpha_hat[2].is_zero()) throw std::logic_error("cone normal form lost its zero slot");
        if (alpha_hat[0].coeff(2) != 0 || alpha_hat[0].coeff(3) != 0 ||
            alpha_hat[1].coeff(0) != 0 || alpha_hat[1].coeff(1) != 0) {
            throw std::logic_error("cone normal form slots are not clean");
        }
    }
    out.reparam = m;
    out.frame_change = frame;

    // Closed-form coordinates, recovery frame, and quadrics per contact type.
    const BinaryForm s2 = BinaryForm::monomial(2, 0, Rat(1));
    const BinaryForm st = BinaryForm::monomial(2, 1, Rat(1));
    const BinaryForm t2 = BinaryForm::monomial(2, 2, Rat(1));
    const BinaryForm s1 = BinaryForm::monomial(1, 0, Rat(1));
    const BinaryForm t1 = BinaryForm::monomial(1, 1, Rat(1));

    auto quad = [](int nv, std::vector<std::pair<std::pair<int, int>, Rat>> terms) {
        QuadricForm q;
        q.nvars = nv;
        for (auto& [ij, c] : terms) q.coeff.emplace(ij, c);
        return q;
    };

    if (out.contact == CubicScrollEmbedding::Contact::Distinct) {
        const BinaryForm phi0 = s2 * beta_hat[1] - (st + t2) * beta_hat[0];
        const BinaryForm phi1 = (s2 + st) * beta_hat[2] - t2 * beta_hat[1];
        const BinaryForm phi = (s2 * t1) * (beta_hat[1] + beta_hat[2]) - (s1 * t2) * (beta_hat[0] + beta_hat[1]);
        out.coords = {s1 * phi0, -(t1 * phi0), -(s1 * phi1), t1 * phi1, phi};
        out.recovery_frame = {{Rat(0), Rat(0), Rat(0), Rat(1), Rat(0)},
                              {Rat(0), Rat(1), Rat(1), Rat(0), Rat(1)},
                              {Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)}};
        out.quadrics = {
            quad(5, {{{0, 3}, Rat(1)}, {{1, 2}, Rat(-1)}}),
            quad(5, {{{2, 3}, Rat(1)}, {{2, 4}, Rat(-1)}, {{3, 4}, Rat(1)}, {{0, 3}, Rat(-1)}}),
            quad(5, {{{0, 1}, Rat(1)}, {{0, 4}, Rat(1)}, {{1, 4}, Rat(-1)}, {{1, 2}, Rat(-1)}}),
        };
    } else if (out.contact == CubicScrollEmbedding::Contact::Tangent) {
        const BinaryForm chi = s1 * beta_hat[1] - t1 * beta_hat[0];
        const BinaryForm psi = s2 * beta_hat[2] - t2 * beta_hat[1];
        out.coords = {s2 * chi, st * chi, t2 * chi, s1 * psi, t1 * psi};
        out.recovery_frame = {{Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)},
                              {Rat(0), Rat(0), Rat(-1), Rat(-1), Rat(0)},
                              {Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)}};
        out.quadrics = {
            quad(5, {{{0, 2}, Rat(1)}, {{1, 1}, Rat(-1)}}),
            quad(5, {{{0, 4}, Rat(1)}, {{1, 3}, Rat(-1)}}),
            quad(5, {{{1, 4}, Rat(1)}, {{2, 3}, Rat(-1)}}),
        };
    } else {
        const Rat a = alpha_hat[0].coeff(0);
        const Rat b = alpha_hat[0].coeff(1);
        const Rat c = alpha_hat[1].coeff(2);
        const Rat dd = alpha_hat[1].coeff(3);
        if (a == 0 || dd == 0) throw std::logic_error("cone normal form leading coefficients vanish");
        const Rat ap = b == 0 ? a : Rat(0);
        const Rat dp = c == 0 ? dd : Rat(0);
        const BinaryForm s3 = BinaryForm::monomial(3, 0, Rat(1));
        const BinaryForm s2t = BinaryForm::monomial(3, 1, Rat(1));
        const BinaryForm st2 = BinaryForm::monomial(3, 2, Rat(1));
        const BinaryForm t3 = BinaryForm::monomial(3, 3, Rat(1));
        const BinaryForm m2 = alpha_hat[0] * beta_hat[1] - alpha_hat[1] * beta_hat[0];
        const BinaryForm phi = m2 - ap * (s2t * beta_hat[2]) - dp * (st2 * beta_hat[2]);
        out.coords = {dd * (t3 * beta_hat[2]), a * (s3 * beta_hat[2]), (ap + b) * (s2t * beta_hat[2]),
                      (c + dp) * (st2 * beta_hat[2]), phi};
        out.recovery_frame = {
            {Rat(1), Rat(0), Rat(0), c != 0 ? Rat(1) : Rat(0), Rat(0)},
            {Rat(0), Rat(-1), b != 0 ? Rat(-1) : Rat(0), Rat(0), Rat(0)},
            {Rat(0), Rat(0), b == 0 ? Rat(1) : Rat(0), c == 0 ? Rat(1) : Rat(0), Rat(1)},
        };
        const Rat ab = ap + b;
        const Rat cd = c + dp;
        out.quadrics = {
            quad(5, {{{1, 3}, ab * ab}, {{2, 2}, -(a * cd)}}),
            quad(5, {{{0, 1}, ab * cd}, {{2, 3}, -(a * dd)}}),
            quad(5, {{{0, 2}, cd * cd}, {{3, 3}, -(ab * dd)}}),
        };
        out.vertex = std::vector<Rat>{Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)};
    }

    // Common factor must be trivial (the minors of the hatted mu-basis are
    // primitive because they equal lambda times a primitive triple).
    if (bf_gcd_list(out.coords).degree() != 0) {
        throw DomainError("DegenerateLift", "embedding coordinates acquired a common factor");
    }

    // Quadrics vanish identically on the coordinates: these are algebraic
    // identities of the construction, so failure is a bug, not bad input.
    for (const QuadricForm& q : out.quadrics) {
        if (!q.eval_forms(out.coords).is_zero()) {
            throw std::logic_error("scroll quadric does not vanish on the embedded curve");
        }
    }

    // Recovery: the frame applied to the coordinates must equal the minors of
    // the normalized mu-basis exactly.
    for (int j = 0; j < 3; ++j) {
        BinaryForm acc(d);
        for (int i = 0; i < 5; ++i) {
            acc += out.recovery_frame[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] *
                   out.coords[static_cast<std::size_t>(i)];
        }
        out.recovered[static_cast<std::size_t>(j)] = acc;
    }
    {
        const MovingLine ah(alpha_hat[0], alpha_hat[1], alpha_hat[2]);
        const MovingLine bh(beta_hat[0], beta_hat[1], beta_hat[2]);
        const std::array<BinaryForm, 3> minors = cross(ah, bh);
        for (int j = 0; j < 3; ++j) {
            if (out.recovered[static_cast<std::size_t>(j)] != minors[static_cast<std::size_t>(j)]) {
                throw std::logic_error("projection of the embedding does not reproduce the minors");
            }
        }
    }

    // Undo the normalization: apply P on the left and compose with M^{-1};
    // the result must be a constant multiple of the input parameterization.
    {
        std::array<BinaryForm, 3> undo{BinaryForm(d), BinaryForm(d), BinaryForm(d)};
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                undo[static_cast<std::size_t>(i)] +=
                    frame[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * out.recovered[static_cast<std::size_t>(j)];
            }
        }
        const Mat2 minv = detail::mat2_inverse(m);
        for (auto& g : undo) g = g.compose(minv);
        const std::array<BinaryForm, 3>& f = curve.forms();
        Rat scalar = 0;
        for (int i = 0; i < 3 && scalar == 0; ++i) {
            if (!f[static_cast<std::size_t>(i)].is_zero()) {
                const int lead = f[static_cast<std::size_t>(i)].t_order();
                scalar = undo[static_cast<std::size_t>(i)].coeff(lead) / f[static_cast<std::size_t>(i)].coeff(lead);
            }
        }
        if (scalar == 0) throw std::logic_error("recovered parameterization vanished");
        for (int i = 0; i < 3; ++i) {
            if (undo[static_cast<std::size_t>(i)] != scalar * f[static_cast<std::size_t>(i)]) {
                throw std::logic_error("recovered parameterization is not proportional to the input");
            }
        }
        out.recovered_original = undo;
        out.recovered_scalar = scalar;
    }

    // Centers: canonical basis of the plane where all three recovery forms
    // vanish; projecting from them realizes the recovery map.
    {
        ExactMatrix fr(3, 5);
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 5; ++j) fr.at(i, j) = out.recovery_frame[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        out.centers = kernel_basis(fr);
        if (out.centers.size() != 2) throw std::logic_error("recovery frame should cut out a line of centers");
        out.centers_off_curve = true;
        for (const auto& ctr : out.centers) {
            if (point_preimage_form(out.coords, ctr).degree() > 0) out.centers_off_curve = false;
        }
    }

    if (out.vertex) {
        out.vertex_preimage_degree = point_preimage_form(out.coords, *out.vertex).degree();
    }

    return out;
}

} // namespace scrollift
