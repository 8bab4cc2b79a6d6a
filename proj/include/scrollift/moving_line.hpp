#pragma once

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "binary_form.hpp"
#include "rational.hpp"

namespace scrollift {

// A moving line of degree n: a triple (A0, A1, A2) of binary forms of common
// degree n, thought of as the family of lines A0(s,t) x0 + A1 x1 + A2 x2 = 0.
// Equivalently a degree-n syzygy candidate for a parameterization.
struct MovingLine {
    std::array<BinaryForm, 3> a;

    MovingLine() : a{BinaryForm(0), BinaryForm(0), BinaryForm(0)} {}

    explicit MovingLine(int degree)
        : a{BinaryForm(degree), BinaryForm(degree), BinaryForm(degree)} {}

    MovingLine(BinaryForm a0, BinaryForm a1, BinaryForm a2) : a{std::move(a0), std::move(a1), std::move(a2)} {
        if (a[0].degree() != a[1].degree() || a[0].degree() != a[2].degree()) {
            throw std::invalid_argument("moving line components must share a degree");
        }
    }

    int degree() const { return a[0].degree(); }

    bool is_zero() const { return a[0].is_zero() && a[1].is_zero() && a[2].is_zero(); }

    // Pairing with a parameterization: A0 f0 + A1 f1 + A2 f2.
    BinaryForm apply(const std::array<BinaryForm, 3>& f) const {
        BinaryForm acc(degree() + f[0].degree());
        for (int i = 0; i < 3; ++i) {
            acc += a[static_cast<std::size_t>(i)] * f[static_cast<std::size_t>(i)];
        }
        return acc;
    }

    // Stacked coefficient vector (A0's n+1 coefficients, then A1's, then A2's),
    // matching the column layout of the syzygy linear systems.
    std::vector<Rat> coeff_vector() const {
        std::vector<Rat> v;
        v.reserve(3 * (static_cast<std::size_t>(degree()) + 1));
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j <= degree(); ++j) v.push_back(a[static_cast<std::size_t>(i)].coeff(j));
        }
        return v;
    }

    static MovingLine from_coeff_vector(int degree, const std::vector<Rat>& v) {
        if (v.size() != 3 * (static_cast<std::size_t>(degree) + 1)) {
            throw std::invalid_argument("coefficient vector length mismatch");
        }
        MovingLine out(degree);
        std::size_t idx = 0;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j <= degree; ++j) out.a[static_cast<std::size_t>(i)].set_coeff(j, v[idx++]);
        }
        return out;
    }

    friend bool operator==(const MovingLine& x, const MovingLine& y) { return x.a == y.a; }
    friend bool operator!=(const MovingLine& x, const MovingLine& y) { return !(x == y); }
};

// The three Hilbert-Burch minors of the 2x3 matrix with rows p and q:
// (p1 q2 - p2 q1, p2 q0 - p0 q2, p0 q1 - p1 q0). For a mu-basis these recover
// the parameterization up to a nonzero scalar.
inline std::array<BinaryForm, 3> cross(const MovingLine& p, const MovingLine& q) {
    return {p.a[1] * q.a[2] - p.a[2] * q.a[1],
            p.a[2] * q.a[0] - p.a[0] * q.a[2],
            p.a[0] * q.a[1] - p.a[1] * q.a[0]};
}

} // namespace scrollift
