#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <vector>

#include "scrollift/curve.hpp"
#include "scrollift/error.hpp"
#include "scrollift/fixtures.hpp"
#include "scrollift/implicitize.hpp"

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

// Order of vanishing of the implicit equation at (0:0:1): the smallest total
// degree in (x0, x1) over the terms. Computed from the resultant, this is an
// oracle for the parameter-side multiplicity count.
int implicit_multiplicity_at_origin_chart(const TernaryPoly& F) {
    int best = F.degree();
    for (const auto& [e, c] : F.terms()) best = std::min(best, e[0] + e[1]);
    return best;
}

} // namespace

TEST_CASE("common factors are removed and reported") {
    // s * (s^2, s t, t^2)
    const CurveBuild cb = make_curve({bf({1, 0, 0, 0}), bf({0, 1, 0, 0}), bf({0, 0, 1, 0})});
    REQUIRE(cb.removed_factor == bf({1, 0})); // monic s
    REQUIRE(cb.curve.degree() == 2);
    REQUIRE(cb.curve.forms() == conic_fixture().forms());

    const CurveBuild clean = make_curve(conic_fixture().forms());
    REQUIRE(clean.removed_factor.degree() == 0);
}

TEST_CASE("curve construction rejects bad input") {
    REQUIRE(domain_code([] {
                make_curve({BinaryForm(2), BinaryForm(2), BinaryForm(2)});
            }) == "ZeroInput");
    REQUIRE(domain_code([] {
                make_curve({bf({1, 0, 0}), bf({0, 0, 1}), bf({1, 0, 1})});
            }) == "DegenerateLine");
    REQUIRE_THROWS_AS(make_curve({bf({1, 0}), bf({1, 0, 0}), bf({0, 1})}), std::invalid_argument);
}

TEST_CASE("gcd of a form list") {
    // gcd(s^3 t, s^2 t^2) = s^2 t
    REQUIRE(bf_gcd_list({bf({0, 1, 0, 0, 0}), bf({0, 0, 1, 0, 0})}) == bf({0, 1, 0, 0}));
    // Zero entries are ignored and the result is monic.
    REQUIRE(bf_gcd_list({BinaryForm(2), bf({2, 2, 0})}) == bf({1, 1, 0}));
    REQUIRE(domain_code([] { bf_gcd_list({BinaryForm(1), BinaryForm(1)}); }) == "ZeroInput");
}

TEST_CASE("point preimages") {
    const ParamCurve cc = conic_fixture();
    const auto& conic = cc.forms();
    const std::vector<BinaryForm> coords{conic[0], conic[1], conic[2]};
    REQUIRE(point_preimage_form(coords, {Rat(1), Rat(0), Rat(0)}) == bf({0, 1})); // t
    REQUIRE(point_preimage_form(coords, {Rat(0), Rat(0), Rat(1)}) == bf({1, 0})); // s
    REQUIRE(point_preimage_form(coords, {Rat(1), Rat(1), Rat(1)}) == bf({1, -1}));
    REQUIRE(point_preimage_form(coords, {Rat(1), Rat(2), Rat(3)}).degree() == 0); // off the curve

    REQUIRE_THROWS_AS(point_preimage_form(coords, {Rat(0), Rat(0), Rat(0)}), std::invalid_argument);
    REQUIRE_THROWS_AS(point_preimage_form(coords, {Rat(1), Rat(0)}), std::invalid_argument);
}

TEST_CASE("map degrees") {
    REQUIRE(map_degree(conic_fixture()) == 1);
    REQUIRE(map_degree(cusp_fixture()) == 1);
    REQUIRE(map_degree(squared_conic_fixture()) == 2);
    REQUIRE(map_degree(octic_fixture()) == 1);
}

TEST_CASE("multiplicities at points") {
    const ParamCurve cusp = cusp_fixture();
    REQUIRE(multiplicity_at_point(cusp, {Rat(1), Rat(0), Rat(0)}) == 2);
    REQUIRE(multiplicity_at_point(cusp, {Rat(0), Rat(0), Rat(1)}) == 1);
    REQUIRE(multiplicity_at_point(cusp, {Rat(1), Rat(1), Rat(1)}) == 1); // image of (1 : 1)
    REQUIRE(multiplicity_at_point(cusp, {Rat(2), Rat(1), Rat(1)}) == 0);
}

TEST_CASE("planted multiplicities agree with the implicit equation") {
    // Independent oracle: the order of vanishing of the implicit equation at
    // the planted point must equal the parameter-side count, because these
    // curves are checked to have map degree 1.
    for (const auto& [d, m, seed] :
         std::vector<std::array<int, 3>>{{5, 2, 1001}, {6, 3, 1002}}) {
        const ParamCurve c = planted_multiplicity_curve(d, m, static_cast<std::uint64_t>(seed));
        REQUIRE(multiplicity_at_point(c, {Rat(0), Rat(0), Rat(1)}) == m);
        const ImplicitResult ir = implicitize(c);
        REQUIRE(ir.equation.degree() == d);
        REQUIRE(implicit_multiplicity_at_origin_chart(ir.equation) == m);
    }
}

TEST_CASE("generator degree bounds from a singular point") {
    const SingularityBounds b84 = mu_degree_bounds(8, 4);
    REQUIRE(b84.lower == 4);
    REQUIRE(b84.upper == 4);
    REQUIRE(b84.forced());

    const SingularityBounds b83 = mu_degree_bounds(8, 3);
    REQUIRE(b83.lower == 3);
    REQUIRE(b83.upper == 4);
    REQUIRE_FALSE(b83.forced());
    REQUIRE(b83.admits(3));
    REQUIRE(b83.admits(4));
    REQUIRE_FALSE(b83.admits(2));

    REQUIRE(mu_degree_bounds(3, 2).lower == 1);
    REQUIRE(mu_degree_bounds(3, 2).upper == 1);
    REQUIRE(mu_degree_bounds(10, 5).lower == 5);
    REQUIRE(mu_degree_bounds(10, 5).upper == 5);

    REQUIRE_THROWS_AS(mu_degree_bounds(3, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(mu_degree_bounds(3, 3), std::invalid_argument);
}

TEST_CASE("planted singularities force the splitting type when the bounds pin it") {
    const ParamCurve c73 = planted_multiplicity_curve(7, 3, 1004);
    REQUIRE(splitting_type(c73).first == 3); // bounds [3, 3]
    const ParamCurve c65 = planted_multiplicity_curve(6, 5, 1003);
    REQUIRE(splitting_type(c65).first == 1); // bounds [1, 1]
}

TEST_CASE("splitting degrees stay within the generic range") {
    for (int d = 3; d <= 6; ++d) {
        const ParamCurve c = random_curve(d, 2000 + static_cast<std::uint64_t>(d));
        const auto [k, l] = splitting_type(c);
        REQUIRE(k >= 1);
        REQUIRE(k <= d / 2);
        REQUIRE(k + l == d);
    }
}

TEST_CASE("generator cache is shared across copies") {
    const ParamCurve a = conic_fixture();
    const ParamCurve b = a;
    REQUIRE(&a.mu() == &b.mu());
}
