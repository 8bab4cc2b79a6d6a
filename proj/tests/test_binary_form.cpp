#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "scrollift/binary_form.hpp"
#include "scrollift/rational.hpp"

using namespace scrollift;

namespace {

BinaryForm bf(std::vector<long long> c) {
    std::vector<Rat> r(c.begin(), c.end());
    const int degree = static_cast<int>(r.size()) - 1;
    return BinaryForm(degree, std::move(r));
}

template <typename Fn>
std::string domain_code(Fn&& fn) {
    try {
        fn();
        return "";
    } catch (const DomainError& e) {
        return e.code();
    }
}

} // namespace

TEST_CASE("coefficient order is highest s-power first") {
    const BinaryForm f = bf({1, 0, 0, -2}); // s^3 - 2 t^3
    REQUIRE(f.degree() == 3);
    REQUIRE(f.coeff(0) == 1);
    REQUIRE(f.coeff(3) == -2);
    REQUIRE(f.eval(Rat(1), Rat(0)) == 1);
    REQUIRE(f.eval(Rat(0), Rat(1)) == -2);
    REQUIRE(f.eval(Rat(2), Rat(1)) == 6);
    REQUIRE(f.str() == "s^3 - 2*t^3");
}

TEST_CASE("ring operations") {
    const BinaryForm s_plus_t = bf({1, 1});
    const BinaryForm sq = s_plus_t * s_plus_t;
    REQUIRE(sq == bf({1, 2, 1}));
    REQUIRE(bf_pow(s_plus_t, 3) == bf({1, 3, 3, 1}));
    REQUIRE(sq - bf({1, 0, 0}) == bf({0, 2, 1}));
    REQUIRE(Rat(1, 2) * bf({2, 4}) == bf({1, 2}));

    // Adding to a zero form adopts the other operand's degree.
    BinaryForm acc(3);
    acc += bf({1, 0, 0, 1});
    REQUIRE(acc == bf({1, 0, 0, 1}));
}

TEST_CASE("degree bookkeeping of zero forms") {
    const BinaryForm z(4);
    REQUIRE(z.is_zero());
    REQUIRE(z.degree() == 4);
    REQUIRE_THROWS_AS(z.t_order(), std::logic_error);
    REQUIRE_THROWS_AS(BinaryForm(-1), std::invalid_argument);
}

TEST_CASE("orders along the coordinate directions") {
    // s^2 t^3 (s + t) = s^3 t^3 + s^2 t^4.
    const BinaryForm f = bf({1, 0, 0}) * bf({0, 0, 0, 1}) * bf({1, 1});
    REQUIRE(f.degree() == 6);
    REQUIRE(f.t_order() == 3);
    REQUIRE(f.s_order() == 2);
}

TEST_CASE("derivatives satisfy the Euler relation") {
    const BinaryForm f = bf({3, -1, 0, 5, 2});
    const BinaryForm euler = BinaryForm::monomial(1, 0, Rat(1)) * f.derivative_s() +
                             BinaryForm::monomial(1, 1, Rat(1)) * f.derivative_t();
    REQUIRE(euler == Rat(f.degree()) * f);
    REQUIRE(bf({0, 1, 0}).derivative_s() == bf({0, 1})); // d/ds (s t) = t
}

TEST_CASE("substituting a parameter change") {
    const BinaryForm f = bf({1, 0, -2}); // s^2 - 2 t^2
    const Mat2 swap{{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}};
    REQUIRE(f.compose(swap) == bf({-2, 0, 1}));
    const Mat2 shear{{{Rat(1), Rat(0)}, {Rat(3), Rat(1)}}}; // s -> s, t -> 3s + t
    REQUIRE(f.compose(shear) == bf({-17, -12, -2}));
}

TEST_CASE("monic normalization scales the leading coefficient to one") {
    REQUIRE(bf({0, 3, 6}).monic() == bf({0, 1, 2}));
    REQUIRE(bf({-2, 4}).monic() == bf({1, -2}));
    REQUIRE(BinaryForm(2).monic().is_zero());
}

TEST_CASE("greatest common divisor of binary forms") {
    const BinaryForm s = bf({1, 0});
    const BinaryForm t = bf({0, 1});
    const BinaryForm spt = bf({1, 1});

    SECTION("shared monomial and affine factors") {
        const BinaryForm a = s * s * t * spt * spt;
        const BinaryForm b = s * t * t * spt;
        REQUIRE(bf_gcd(a, b) == s * t * spt);
    }
    SECTION("coprime forms have trivial gcd") {
        REQUIRE(bf_gcd(bf({1, 0, 1}), bf({1, 1})).degree() == 0);
    }
    SECTION("gcd with zero is the monic other argument") {
        REQUIRE(bf_gcd(BinaryForm(3), bf({0, 2, 0, 0})) == bf({0, 1, 0, 0}));
    }
    SECTION("result is monic") {
        REQUIRE(bf_gcd(Rat(6) * spt, Rat(-4) * spt * t) == spt);
    }
    SECTION("both zero is rejected") {
        const auto code = domain_code([] { bf_gcd(BinaryForm(2), BinaryForm(5)); });
        REQUIRE(code == "BothZero");
    }
}

TEST_CASE("exact division of binary forms") {
    const BinaryForm a = bf({2, 1, 0, -3});
    const BinaryForm b = bf({1, 0, 5});
    REQUIRE(bf_div_exact(a * b, b) == a);
    REQUIRE(bf_div_exact(a * b, a) == b);

    // Dividing by a monomial strips the matching orders.
    const BinaryForm st = bf({0, 1, 0});
    REQUIRE(bf_div_exact(st * a, st) == a);

    REQUIRE(domain_code([&] { bf_div_exact(a, BinaryForm(1)); }) == "DivideByZero");
    REQUIRE(domain_code([&] { bf_div_exact(bf({1, 0, 1}), bf({1, 1})); }) == "NotDivisible");
}

TEST_CASE("rational parsing and printing") {
    REQUIRE(parse_rational("3/4") == Rat(3, 4));
    REQUIRE(parse_rational("-7") == Rat(-7));
    REQUIRE(parse_rational(" 10/4 ") == Rat(5, 2));
    REQUIRE(rational_str(Rat(-5, 3)) == "-5/3");
    REQUIRE(rational_str(Rat(12)) == "12");
    REQUIRE(parse_rational(rational_str(Rat(-22, 7))) == Rat(-22, 7));

    REQUIRE_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_rational("2/"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_rational(""), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}
