#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "moving_line.hpp"
#include "ternary_poly.hpp"

namespace scrollift {

namespace detail {

using PolyMatrix = std::vector<std::vector<TernaryPoly>>;

// Cofactor expansion along the first remaining row; fine for small sizes.
inline TernaryPoly det_cofactor(const PolyMatrix& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    TernaryPoly acc(0);
    bool first = true;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        PolyMatrix sub;
        sub.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<TernaryPoly> row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k) {
                if (k != j) row.push_back(m[i][k]);
            }
            sub.push_back(std::move(row));
        }
        TernaryPoly term = m[0][j] * det_cofactor(sub);
        if (j % 2 == 1) term = -term;
        if (first) {
            acc = std::move(term);
            first = false;
        } else {
            acc += term;
        }
    }
    return acc;
}

// Fraction-free (Bareiss) determinant over the polynomial ring. Every
// division is by the previous pivot and is exact. Returns the zero polynomial
// for singular matrices.
inline TernaryPoly det_bareiss(PolyMatrix m) {
    const std::size_t n = m.size();
    TernaryPoly prev = TernaryPoly::monomial(Expo{0, 0, 0}, Rat(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot_row = k;
        while (pivot_row < n && m[pivot_row][k].is_zero()) ++pivot_row;
        if (pivot_row == n) return TernaryPoly(0);
        if (pivot_row != k) {
            std::swap(m[pivot_row], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                TernaryPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = num.is_zero() ? TernaryPoly(0) : tp_div_exact(std::move(num), prev);
            }
            m[i][k] = TernaryPoly(0);
        }
        prev = m[k][k];
    }
    TernaryPoly det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

} // namespace detail

// Resultant of two moving lines of degrees k and l with respect to (s, t).
// Row block 0..l-1 holds the coefficient rows of s^(l-1-i) t^i * p, rows
// l..l+k-1 those of s^(k-1-i) t^i * q; entries are linear in (x0, x1, x2), so
// the determinant is homogeneous of degree k + l in the x's. Returns the zero
// polynomial when the determinant vanishes identically.
inline TernaryPoly resultant_moving_lines(const MovingLine& p, const MovingLine& q) {
    const int k = p.degree();
    const int l = q.degree();
    const int n = k + l;
    if (n <= 0) throw std::invalid_argument("resultant needs positive total degree");

    detail::PolyMatrix m(static_cast<std::size_t>(n),
                         std::vector<TernaryPoly>(static_cast<std::size_t>(n), TernaryPoly(0)));

    // Linear entry L_{p,c} = p.a[0].coeff(c) x0 + p.a[1].coeff(c) x1 + p.a[2].coeff(c) x2.
    auto linear_entry = [](const MovingLine& ml, int c) {
        TernaryPoly e(1);
        for (int v = 0; v < 3; ++v) {
            const Rat& coef = ml.a[static_cast<std::size_t>(v)].coeff(c);
            if (coef != 0) {
                Expo ex{0, 0, 0};
                ex[static_cast<std::size_t>(v)] = 1;
                e.add_term(ex, coef);
            }
        }
        return e;
    };

    for (int i = 0; i < l; ++i) {
        for (int c = 0; c <= k; ++c) {
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + c)] = linear_entry(p, c);
        }
    }
    for (int i = 0; i < k; ++i) {
        for (int c = 0; c <= l; ++c) {
            m[static_cast<std::size_t>(l + i)][static_cast<std::size_t>(i + c)] = linear_entry(q, c);
        }
    }

    if (n <= 6) return detail::det_cofactor(m);
    return detail::det_bareiss(std::move(m));
}

} // namespace scrollift
