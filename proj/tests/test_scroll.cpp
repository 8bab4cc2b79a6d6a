#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <optional>
#include <vector>

#include "scrollift/error.hpp"
#include "scrollift/fixtures.hpp"
#include "scrollift/scroll.hpp"

using namespace scrollift;

namespace {

BinaryForm bf(std::vector<long long> c) {
    const int degree = static_cast<int>(c.size()) - 1;
    std::vector<Rat> r(c.begin(), c.end());
    return BinaryForm(degree, std::move(r));
}

template <typename Fn>
std::string domain_code(Fn&& fn) {
    try {
        fn();
    } catch (const DomainError& e) {
        return e.code();
    }
    return "";
}

// Single global scalar c with g[i] == c * f[i] for all i; nullopt otherwise.
template <typename Seq>
std::optional<Rat> proportionality(const Seq& g, const Seq& f) {
    Rat c = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (f[i].is_zero() != g[i].is_zero()) return std::nullopt;
        if (f[i].is_zero()) continue;
        const int lead = f[i].t_order();
        const Rat cand = g[i].coeff(lead) / f[i].coeff(lead);
        if (c == 0) {
            c = cand;
        } else if (c != cand) {
            return std::nullopt;
        }
        if (g[i] != c * f[i]) return std::nullopt;
    }
    if (c == 0) return std::nullopt;
    return c;
}

QuadricForm quad(int nvars, std::vector<std::pair<std::pair<int, int>, Rat>> cs) {
    QuadricForm q;
    q.nvars = nvars;
    for (auto& [ij, c] : cs) q.coeff.emplace(ij, c);
    return q;
}

bool quadric_eq(const QuadricForm& a, const QuadricForm& b) {
    return a.nvars == b.nvars && a.coeff == b.coeff;
}

} // namespace

TEST_CASE("second-level data of the named fixtures") {
    const ScrollData conic = second_level(conic_fixture());
    REQUIRE(conic.h == 0);
    REQUIRE(conic.e == 1);
    REQUIRE(conic.cone);
    REQUIRE(conic.gamma == MovingLine(bf({0}), bf({0}), bf({1})));
    REQUIRE(conic.delta == MovingLine(bf({1, 0}), bf({0, 1}), bf({0, 0})));

    const ScrollData cusp = second_level(cusp_fixture());
    REQUIRE(cusp.h == 0);
    REQUIRE(cusp.e == 1);
    REQUIRE(cusp.cone);
    REQUIRE(cusp.gamma == MovingLine(bf({1}), bf({0}), bf({0})));
    REQUIRE(cusp.delta == MovingLine(bf({0, 0}), bf({1, 0}), bf({0, 1})));

    const ScrollData sq4 = second_level(squared_conic_fixture());
    REQUIRE(sq4.h == 0);
    REQUIRE(sq4.e == 2);
    REQUIRE(sq4.cone);
    REQUIRE(sq4.gamma == MovingLine(bf({0}), bf({0}), bf({1})));
    REQUIRE(sq4.delta == MovingLine(bf({1, 0, 0}), bf({0, 0, 1}), bf({0, 0, 0})));

    const ScrollData octic = second_level(octic_fixture());
    REQUIRE(octic.h == 1);
    REQUIRE(octic.e == 1);
    REQUIRE_FALSE(octic.cone);
    REQUIRE(octic.gamma == MovingLine(bf({0, 1}), bf({-1, 1}), bf({-1, 0})));
    REQUIRE(octic.delta == MovingLine(bf({0, 0, 0}), bf({0, 0, 1}), bf({-1, -1, 0})));

    // gamma and delta annihilate the first generator in every case.
    for (const ParamCurve& c :
         {conic_fixture(), cusp_fixture(), squared_conic_fixture(), octic_fixture()}) {
        const ScrollData sd = second_level(c);
        REQUIRE(sd.gamma.apply(c.mu().p.a).is_zero());
        REQUIRE(sd.delta.apply(c.mu().p.a).is_zero());
        REQUIRE(sd.e == sd.k - 2 * sd.h);
        REQUIRE(sd.e >= 0);
    }
}

TEST_CASE("scroll intersection numbers") {
    const ScrollData octic = second_level(octic_fixture());
    REQUIRE(octic.directrix_self() == -1);
    REQUIRE(octic.scroll_degree() == 3);
    REQUIRE(octic.hyperplane_dot_curve() == 8);
    REQUIRE(octic.curve_dot_directrix() == 6);

    const ScrollData sq4 = second_level(squared_conic_fixture());
    REQUIRE(sq4.scroll_degree() == 2);
    REQUIRE(sq4.hyperplane_dot_curve() == 4);
    REQUIRE(sq4.curve_dot_directrix() == 2);

    // Identities valid for every fixture: the scroll has degree k, a
    // hyperplane meets the lifted curve in d points, and the directrix
    // section accounts for the difference d + h - k.
    for (const ParamCurve& c :
         {conic_fixture(), cusp_fixture(), squared_conic_fixture(), octic_fixture()}) {
        const ScrollData sd = second_level(c);
        REQUIRE(sd.scroll_degree() == sd.k);
        REQUIRE(sd.hyperplane_dot_curve() == sd.d);
        REQUIRE(sd.curve_dot_directrix() == sd.d + sd.h - sd.k);
    }
}

TEST_CASE("conic lift") {
    const ParamCurve c = conic_fixture();
    const LiftedCurve lc = lift_to_scroll(c);
    REQUIRE(lc.k == 1);
    REQUIRE(lc.degree == 2);
    REQUIRE(lc.chart == std::array<int, 2>{0, 2}); // chart (0,1) degenerates
    REQUIRE(lc.removed_gcd == bf({1, 0}));
    REQUIRE(lc.coords == std::vector<BinaryForm>{bf({1, 0, 0}), bf({0, -1, 0}), bf({0, 0, 1})});

    REQUIRE(domain_code([&] { lift_to_scroll(c, std::array<int, 2>{0, 1}); }) == "ChartDegenerate");
    const LiftedCurve alt = lift_to_scroll(c, std::array<int, 2>{1, 2});
    REQUIRE(alt.coords == lc.coords); // the other usable chart gives the same lift here
}

TEST_CASE("cusp lift") {
    const LiftedCurve lc = lift_to_scroll(cusp_fixture());
    REQUIRE(lc.chart == std::array<int, 2>{0, 1});
    REQUIRE(lc.removed_gcd == bf({1, 0}));
    REQUIRE(lc.coords ==
            std::vector<BinaryForm>{bf({-1, 0, 0, 0}), bf({0, 0, 1, 0}), bf({0, 0, 0, -1})});
}

TEST_CASE("squared conic lift") {
    const LiftedCurve lc = lift_to_scroll(squared_conic_fixture());
    REQUIRE(lc.k == 2);
    REQUIRE(lc.chart == std::array<int, 2>{0, 2});
    REQUIRE(lc.removed_gcd == bf({1, 0, 0}));
    REQUIRE(lc.coords == std::vector<BinaryForm>{bf({0, 1, 0, 0, 0}), bf({1, 0, 0, 0, 0}),
                                                 bf({0, 0, -1, 0, 0}), bf({0, 0, 0, 0, 1})});
    // The doubled parameterization lifts to an injective map: the two sheets
    // separate on the scroll.
    REQUIRE(map_degree_of(lc.coords) == 1);
}

TEST_CASE("octic lift") {
    const ParamCurve c = octic_fixture();
    const LiftedCurve lc = lift_to_scroll(c);
    REQUIRE(lc.k == 3);
    REQUIRE(lc.degree == 8);
    REQUIRE(lc.chart == std::array<int, 2>{0, 1});
    REQUIRE(lc.removed_gcd == bf({0, 0, 0, 1})); // t^3
    REQUIRE(lc.coords.size() == 5);
    REQUIRE(lc.basis.size() == 5);
    for (const BinaryForm& h : lc.coords) REQUIRE(h.degree() == 8);
    std::vector<BinaryForm> all(lc.coords.begin(), lc.coords.end());
    REQUIRE(bf_gcd_list(all).degree() == 0);

    // The last three basis syzygies are the Koszul triples of alpha.
    const std::array<BinaryForm, 3>& a = c.mu().p.a;
    REQUIRE(lc.basis[2] == MovingLine(BinaryForm(3), a[2], -a[1]));
    REQUIRE(lc.basis[3] == MovingLine(a[2], BinaryForm(3), -a[0]));
    REQUIRE(lc.basis[4] == MovingLine(a[1], -a[0], BinaryForm(3)));

    // Every coordinate satisfies its defining relation on the chart.
    const auto& f = c.forms();
    for (std::size_t i = 0; i < lc.coords.size(); ++i) {
        REQUIRE(lc.coords[i] * lc.removed_gcd ==
                f[0] * lc.basis[i].a[1] - f[1] * lc.basis[i].a[0]);
    }

    // All basis elements are degree-k syzygies of alpha.
    for (const MovingLine& w : lc.basis) {
        REQUIRE(w.degree() == 3);
        REQUIRE(w.apply(a).is_zero());
    }
}

TEST_CASE("octic lift charts agree up to one scalar") {
    const ParamCurve c = octic_fixture();
    const LiftedCurve base = lift_to_scroll(c);
    int usable = 0;
    for (const std::array<int, 2> chart : {std::array<int, 2>{0, 1}, std::array<int, 2>{0, 2},
                                           std::array<int, 2>{1, 2}}) {
        LiftedCurve lc;
        try {
            lc = lift_to_scroll(c, chart);
        } catch (const DomainError&) {
            continue;
        }
        ++usable;
        const auto scale = proportionality(lc.coords, base.coords);
        REQUIRE(scale.has_value());
    }
    REQUIRE(usable >= 2);
}

TEST_CASE("default projection round trips the named fixtures") {
    for (const ParamCurve& c :
         {conic_fixture(), cusp_fixture(), squared_conic_fixture(), octic_fixture()}) {
        const LiftedCurve lc = lift_to_scroll(c);
        const CurveBuild back = project_lift(lc);
        REQUIRE(back.removed_factor.degree() == 0);
        const auto scale = proportionality(back.curve.forms(), c.forms());
        REQUIRE(scale.has_value());
    }

    // The conic and squared conic project back exactly; the cusp with a
    // single sign flip.
    REQUIRE(project_lift(lift_to_scroll(conic_fixture())).curve.forms() ==
            conic_fixture().forms());
    REQUIRE(project_lift(lift_to_scroll(squared_conic_fixture())).curve.forms() ==
            squared_conic_fixture().forms());
    const auto cusp_back = project_lift(lift_to_scroll(cusp_fixture()));
    REQUIRE(*proportionality(cusp_back.curve.forms(), cusp_fixture().forms()) == -1);
}

TEST_CASE("projection with explicit centers") {
    const LiftedCurve sq4 = lift_to_scroll(squared_conic_fixture());

    // A point of the lifted curve is rejected as a center.
    std::vector<Rat> on_curve;
    for (const BinaryForm& h : sq4.coords) on_curve.push_back(h.eval(Rat(1), Rat(1)));
    REQUIRE(domain_code([&] { project_lift(sq4, {on_curve}); }) == "CenterOnCurve");

    // Wrong center count and wrong dimension are caught.
    REQUIRE_THROWS_AS(project_lift(sq4, {{Rat(1), Rat(0), Rat(0), Rat(0)},
                                         {Rat(0), Rat(1), Rat(0), Rat(0)}}),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(project_lift(sq4, {{Rat(1), Rat(0), Rat(0)}}), std::invalid_argument);

    // A generic center off the curve produces a birational degree-4 plane model.
    Rng rng(kDefaultSeed);
    std::optional<CurveBuild> projected;
    for (int attempt = 0; attempt < 100 && !projected; ++attempt) {
        std::vector<Rat> ctr(4);
        for (auto& x : ctr) x = Rat(rng.int_in(-9, 9));
        bool zero = true;
        for (const auto& x : ctr) {
            if (x != 0) zero = false;
        }
        if (zero) continue;
        if (point_preimage_form(sq4.coords, ctr).degree() > 0) continue;
        try {
            CurveBuild cb = project_lift(sq4, {ctr});
            if (cb.removed_factor.degree() != 0) continue;
            projected = std::move(cb);
        } catch (const DomainError&) {
            continue;
        }
    }
    REQUIRE(projected.has_value());
    REQUIRE(projected->curve.degree() == 4);
    REQUIRE(map_degree(projected->curve) == 1);
}

TEST_CASE("dependent centers are rejected") {
    const LiftedCurve octic = lift_to_scroll(octic_fixture());
    Rng rng(kDefaultSeed);
    std::optional<std::vector<Rat>> off;
    for (int attempt = 0; attempt < 100 && !off; ++attempt) {
        std::vector<Rat> ctr(5);
        for (auto& x : ctr) x = Rat(rng.int_in(-9, 9));
        bool zero = true;
        for (const auto& x : ctr) {
            if (x != 0) zero = false;
        }
        if (zero) continue;
        if (point_preimage_form(octic.coords, ctr).degree() == 0) off = std::move(ctr);
    }
    REQUIRE(off.has_value());
    std::vector<Rat> doubled;
    for (const auto& x : *off) doubled.push_back(2 * x);
    REQUIRE_THROWS_AS(project_lift(octic, {*off, doubled}), std::invalid_argument);
}

TEST_CASE("quadrics through the lifted fixtures") {
    const std::vector<QuadricForm> conic_q = quadrics_through(lift_to_scroll(conic_fixture()).coords);
    REQUIRE(conic_q.size() == 1);
    REQUIRE(quadric_eq(conic_q[0], quad(3, {{{0, 2}, Rat(1)}, {{1, 1}, Rat(-1)}})));

    REQUIRE(quadrics_through(lift_to_scroll(cusp_fixture()).coords).empty());

    const std::vector<QuadricForm> sq4_q =
        quadrics_through(lift_to_scroll(squared_conic_fixture()).coords);
    REQUIRE(sq4_q.size() == 2);
    REQUIRE(quadric_eq(sq4_q[0], quad(4, {{{0, 0}, Rat(1)}, {{1, 2}, Rat(1)}})));
    REQUIRE(quadric_eq(sq4_q[1], quad(4, {{{1, 3}, Rat(1)}, {{2, 2}, Rat(-1)}})));

    const LiftedCurve octic = lift_to_scroll(octic_fixture());
    const std::vector<QuadricForm> octic_q = quadrics_through(octic.coords);
    REQUIRE(octic_q.size() == 3);
    for (const QuadricForm& q : octic_q) REQUIRE(q.eval_forms(octic.coords).is_zero());

    REQUIRE_THROWS_AS(quadrics_through(std::vector<BinaryForm>{bf({1, 0})}), std::invalid_argument);
}

TEST_CASE("lift diagnostics of the named fixtures") {
    auto diag = [](const ParamCurve& c) {
        const LiftedCurve lc = lift_to_scroll(c);
        return lift_diagnostics(lc, second_level(c), c);
    };

    const LiftDiagnostics conic = diag(conic_fixture());
    REQUIRE(conic.consistent);
    REQUIRE(conic.generic_fiber_degree == 1);
    REQUIRE(conic.ramification_degree == 0);
    REQUIRE(conic.cone);
    REQUIRE(conic.vertex_preimage_degree == 1);
    REQUIRE(conic.vertex == std::vector<Rat>{Rat(0), Rat(0), Rat(1)});

    const LiftDiagnostics cusp = diag(cusp_fixture());
    REQUIRE(cusp.consistent);
    REQUIRE(cusp.generic_fiber_degree == 1);
    REQUIRE(cusp.ramification_degree == 1); // the cusp itself survives the lift
    REQUIRE(cusp.vertex_preimage_degree == 2);
    REQUIRE(cusp.vertex == std::vector<Rat>{Rat(1), Rat(0), Rat(0)});

    const LiftDiagnostics sq4 = diag(squared_conic_fixture());
    REQUIRE(sq4.consistent);
    REQUIRE(sq4.generic_fiber_degree == 1);
    REQUIRE(sq4.ramification_degree == 1); // branch parameter of the double cover
    REQUIRE(sq4.vertex_preimage_degree == 2);
    REQUIRE(sq4.vertex == std::vector<Rat>{Rat(0), Rat(0), Rat(0), Rat(1)});

    const LiftDiagnostics octic = diag(octic_fixture());
    REQUIRE(octic.consistent);
    REQUIRE_FALSE(octic.cone);
    REQUIRE(octic.generic_fiber_degree == 1);
    REQUIRE(octic.ramification_degree == 0);
    REQUIRE_FALSE(octic.vertex.has_value());
}

TEST_CASE("lifts and diagnostics hold across the corpus") {
    for (const CorpusItem& item : lift_corpus()) {
        INFO(item.name);
        const ParamCurve& c = item.curve;
        const ScrollData sd = second_level(c);
        const LiftedCurve lc = lift_to_scroll(c);

        REQUIRE(static_cast<int>(lc.coords.size()) == lc.k + 2);
        for (const BinaryForm& h : lc.coords) REQUIRE(h.degree() == c.degree());
        REQUIRE(lc.removed_gcd.degree() == lc.k);
        std::vector<BinaryForm> all(lc.coords.begin(), lc.coords.end());
        REQUIRE(bf_gcd_list(all).degree() == 0);

        const LiftDiagnostics diag = lift_diagnostics(lc, sd, c);
        REQUIRE(diag.consistent);
        if (!sd.cone) {
            REQUIRE(diag.generic_fiber_degree == 1);
            REQUIRE(diag.ramification_degree == 0);
        } else {
            REQUIRE(diag.vertex.has_value());
            REQUIRE(diag.vertex_preimage_degree == c.degree() - sd.k);
        }

        const CurveBuild back = project_lift(lc);
        REQUIRE(back.removed_factor.degree() == 0);
        REQUIRE(proportionality(back.curve.forms(), c.forms()).has_value());
    }
}
