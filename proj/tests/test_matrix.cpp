#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "scrollift/matrix.hpp"

using namespace scrollift;

namespace {

ExactMatrix mat(int rows, int cols, std::vector<long long> entries) {
    REQUIRE(static_cast<int>(entries.size()) == rows * cols);
    ExactMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) m.at(i, j) = Rat(entries[static_cast<std::size_t>(i * cols + j)]);
    }
    return m;
}

} // namespace

TEST_CASE("row reduction produces the canonical echelon form") {
    const EchelonForm e = rref(mat(3, 4, {1, 2, 0, 3, 2, 4, 1, 7, 1, 2, 1, 4}));
    REQUIRE(e.pivot_cols == std::vector<int>{0, 2});
    // Canonical: pivots are 1, pivot columns are cleared, rows beyond the
    // rank vanish.
    REQUIRE(e.mat.at(0, 0) == 1);
    REQUIRE(e.mat.at(0, 1) == 2);
    REQUIRE(e.mat.at(0, 2) == 0);
    REQUIRE(e.mat.at(0, 3) == 3);
    REQUIRE(e.mat.at(1, 0) == 0);
    REQUIRE(e.mat.at(1, 2) == 1);
    REQUIRE(e.mat.at(1, 3) == 1);
    for (int j = 0; j < 4; ++j) REQUIRE(e.mat.at(2, j) == 0);
}

TEST_CASE("row reduction is exact on fractions") {
    ExactMatrix m(2, 3);
    m.at(0, 0) = Rat(1, 2);
    m.at(0, 1) = Rat(1, 3);
    m.at(0, 2) = Rat(1);
    m.at(1, 0) = Rat(1);
    m.at(1, 1) = Rat(1);
    m.at(1, 2) = Rat(5);
    const EchelonForm e = rref(std::move(m));
    REQUIRE(e.pivot_cols == std::vector<int>{0, 1});
    REQUIRE(e.mat.at(0, 2) == Rat(-4));
    REQUIRE(e.mat.at(1, 2) == Rat(9));
}

TEST_CASE("rank") {
    REQUIRE(rank(mat(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9})) == 2);
    REQUIRE(rank(mat(2, 2, {1, 0, 0, 1})) == 2);
    REQUIRE(rank(mat(2, 3, {0, 0, 0, 0, 0, 0})) == 0);
}

TEST_CASE("kernel basis is canonical and annihilated by the matrix") {
    const ExactMatrix m = mat(2, 4, {1, 0, 2, -1, 0, 1, 1, 1});
    const std::vector<std::vector<Rat>> ker = kernel_basis(m);
    REQUIRE(ker.size() == 2);
    for (const auto& v : ker) {
        for (int i = 0; i < 2; ++i) {
            Rat dot = 0;
            for (int j = 0; j < 4; ++j) dot += m.at(i, j) * v[static_cast<std::size_t>(j)];
            REQUIRE(dot == 0);
        }
    }
    // Canonical: first nonzero entry of each vector is 1, leading positions
    // strictly increase.
    int prev = -1;
    for (const auto& v : ker) {
        int lead = 0;
        while (v[static_cast<std::size_t>(lead)] == 0) ++lead;
        REQUIRE(v[static_cast<std::size_t>(lead)] == 1);
        REQUIRE(lead > prev);
        prev = lead;
    }
    REQUIRE(kernel_basis(mat(2, 2, {1, 0, 0, 1})).empty());
}

TEST_CASE("linear solve") {
    const ExactMatrix m = mat(3, 2, {1, 1, 1, -1, 2, 0});
    const auto x = solve(m, {Rat(3), Rat(1), Rat(4)});
    REQUIRE(x.has_value());
    REQUIRE((*x)[0] == 2);
    REQUIRE((*x)[1] == 1);
    REQUIRE_FALSE(solve(m, {Rat(3), Rat(1), Rat(5)}).has_value());
}

TEST_CASE("determinant matches closed forms") {
    REQUIRE(determinant(mat(2, 2, {3, 7, 1, 4})) == 5);
    REQUIRE(determinant(mat(3, 3, {2, 0, 1, 1, 3, -1, 0, 5, 4})) == 39);
    // Vandermonde on 1, 2, 3, 4: product of pairwise differences = 12.
    ExactMatrix v(4, 4);
    for (int i = 0; i < 4; ++i) {
        Rat p = 1;
        for (int j = 0; j < 4; ++j) {
            v.at(i, j) = p;
            p *= Rat(i + 1);
        }
    }
    REQUIRE(determinant(v) == 12);
    REQUIRE(determinant(mat(2, 2, {1, 2, 2, 4})) == 0);
}

TEST_CASE("inverse") {
    const ExactMatrix a = mat(3, 3, {2, 0, 1, 1, 3, -1, 0, 5, 4});
    const ExactMatrix inv = inverse(a);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            Rat acc = 0;
            for (int t = 0; t < 3; ++t) acc += a.at(i, t) * inv.at(t, j);
            REQUIRE(acc == (i == j ? 1 : 0));
        }
    }
    REQUIRE_THROWS_AS(inverse(mat(2, 2, {1, 2, 2, 4})), std::logic_error);
}

TEST_CASE("reducing a vector against an echelon form") {
    const EchelonForm e = rref(mat(2, 3, {1, 0, 2, 0, 1, -1}));
    std::vector<Rat> v{Rat(3), Rat(4), Rat(2)};
    reduce_against(v, e);
    REQUIRE(v[0] == 0);
    REQUIRE(v[1] == 0);
    REQUIRE(v[2] == 0); // (3, 4, 2) = 3 r0 + 4 r1
    std::vector<Rat> w{Rat(0), Rat(0), Rat(1)};
    reduce_against(w, e);
    REQUIRE(w[2] == 1); // not in the row space
}

TEST_CASE("large exact elimination stays rational") {
    // Hilbert-like matrix: notoriously ill conditioned in floating point,
    // trivial in exact arithmetic.
    ExactMatrix h(5, 5);
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) h.at(i, j) = Rat(1, i + j + 1);
    }
    REQUIRE(rank(h) == 5);
    REQUIRE(determinant(h) == Rat(Int(1), Int("266716800000")));
}
