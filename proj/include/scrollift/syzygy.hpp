#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "binary_form.hpp"
#include "error.hpp"
#include "matrix.hpp"
#include "moving_line.hpp"
#include "rational.hpp"

namespace scrollift {

// Dimension of the degree-n syzygy space predicted by the splitting type
// (k, d-k): max(0, n-k+1) + max(0, n-(d-k)+1).
inline int syzygy_dimension_expected(int d, int k, int n) {
    const int a = n - k + 1;
    const int b = n - (d - k) + 1;
    return (a > 0 ? a : 0) + (b > 0 ? b : 0);
}

// Canonical basis of the space of degree-n syzygies A0 f0 + A1 f1 + A2 f2 = 0.
// Columns of the linear system are the stacked coefficients of (A0, A1, A2);
// rows are the coefficients of the degree n + d product form. The basis comes
// from kernel_basis, so it is in row echelon form with leading coefficient 1.
inline std::vector<MovingLine> syzygy_space(const std::array<BinaryForm, 3>& f, int n) {
    const int d = f[0].degree();
    if (f[1].degree() != d || f[2].degree() != d) {
        throw std::invalid_argument("parameterization forms must share a degree");
    }
    if (n < 0) return {};
    ExactMatrix m(n + d + 1, 3 * (n + 1));
    for (int comp = 0; comp < 3; ++comp) {
        for (int u = 0; u <= n; ++u) {
            const int col = comp * (n + 1) + u;
            for (int v = 0; v <= d; ++v) {
                m.at(u + v, col) += f[static_cast<std::size_t>(comp)].coeff(v);
            }
        }
    }
    std::vector<MovingLine> out;
    for (const auto& v : kernel_basis(m)) {
        out.push_back(MovingLine::from_coeff_vector(n, v));
    }
    return out;
}

struct MuBasis {
    int k = 0;        // lower degree; the partner has degree d - k
    MovingLine p;     // degree k
    MovingLine q;     // degree d - k
    bool balanced = false;
};

namespace detail {

// Echelon basis of the span of { s^j t^(l-k-j) p : j } inside the degree-l
// coefficient space, used to pick a canonical partner independent of p.
inline EchelonForm multiples_echelon(const MovingLine& p, int l) {
    const int k = p.degree();
    const int rows_n = l - k + 1;
    ExactMatrix rows(rows_n, 3 * (l + 1));
    for (int j = 0; j < rows_n; ++j) {
        // s^(l-k-j) t^j * p: component coefficients shift by j.
        for (int comp = 0; comp < 3; ++comp) {
            for (int c = 0; c <= k; ++c) {
                rows.at(j, comp * (l + 1) + c + j) = p.a[static_cast<std::size_t>(comp)].coeff(c);
            }
        }
    }
    return rref(std::move(rows));
}

// Smallest degree (from start_n) with a nonzero syzygy, plus a canonical
// minimal generating pair. Shared by the mu-basis and its second level.
struct MinimalPair {
    int k = 0;
    MovingLine p, q;
    bool balanced = false;
};

inline MinimalPair minimal_syzygy_pair(const std::array<BinaryForm, 3>& f, int start_n) {
    const int d = f[0].degree();
    MinimalPair out;
    int k = -1;
    std::vector<MovingLine> low;
    for (int n = start_n; n <= d; ++n) {
        low = syzygy_space(f, n);
        if (!low.empty()) {
            k = n;
            break;
        }
    }
    if (k < 0) throw std::logic_error("no syzygy found up to the curve degree");
    out.k = k;
    const int l = d - k;
    if (k == l) {
        if (low.size() != 2) throw std::logic_error("balanced case expects a 2-dimensional space");
        out.p = low[0];
        out.q = low[1];
        out.balanced = true;
        return out;
    }
    if (low.size() != 1) throw std::logic_error("minimal degree space should be a line");
    out.p = low[0];
    out.balanced = false;

    const std::vector<MovingLine> high = syzygy_space(f, l);
    const EchelonForm multiples = multiples_echelon(out.p, l);
    for (const MovingLine& w : high) {
        std::vector<Rat> v = w.coeff_vector();
        reduce_against(v, multiples);
        bool nonzero = false;
        for (const Rat& c : v) {
            if (c != 0) {
                nonzero = true;
                break;
            }
        }
        if (!nonzero) continue;
        // Normalize the reduced representative: first nonzero coordinate 1.
        Rat lead = 0;
        for (const Rat& c : v) {
            if (c != 0) {
                lead = c;
                break;
            }
        }
        for (Rat& c : v) c /= lead;
        out.q = MovingLine::from_coeff_vector(l, v);
        return out;
    }
    throw std::logic_error("no syzygy independent of the first generator");
}

} // namespace detail

// Computes the mu-basis of a primitive, nondegenerate parameterization.
// Throws NotPrimitive when gcd(f0, f1, f2) != 1 and DegenerateLine when the
// three forms are linearly dependent (the image is a line or a point).
inline MuBasis mu_basis(const std::array<BinaryForm, 3>& f) {
    const int d = f[0].degree();
    if (f[1].degree() != d || f[2].degree() != d) {
        throw std::invalid_argument("parameterization forms must share a degree");
    }
    if (f[0].is_zero() && f[1].is_zero() && f[2].is_zero()) {
        throw DomainError("ZeroInput", "all three forms vanish");
    }
    BinaryForm g = f[0];
    for (int i = 1; i < 3; ++i) {
        const BinaryForm& fi = f[static_cast<std::size_t>(i)];
        if (g.is_zero()) {
            g = fi;
        } else if (!fi.is_zero()) {
            g = bf_gcd(g, fi);
        }
    }
    if (g.degree() > 0) {
        throw DomainError("NotPrimitive", "common factor " + g.str());
    }
    ExactMatrix coeff_rows(3, d + 1);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j <= d; ++j) coeff_rows.at(i, j) = f[static_cast<std::size_t>(i)].coeff(j);
    }
    if (rank(coeff_rows) < 3) {
        throw DomainError("DegenerateLine", "forms are linearly dependent; image is not a plane curve");
    }

    const detail::MinimalPair pair = detail::minimal_syzygy_pair(f, 1);
    if (2 * pair.k > d) throw std::logic_error("minimal syzygy degree exceeds d/2");
    return MuBasis{pair.k, pair.p, pair.q, pair.balanced};
}

// Verifies the Hilbert-Burch relation cross(p, q) = lambda * f and returns
// the nonzero scalar lambda. Throws MinorMismatch when the relation fails.
inline Rat hilbert_burch_scalar(const std::array<BinaryForm, 3>& f, const MovingLine& p,
                                const MovingLine& q) {
    const std::array<BinaryForm, 3> minors = cross(p, q);
    Rat lambda = 0;
    for (int i = 0; i < 3 && lambda == 0; ++i) {
        const BinaryForm& fi = f[static_cast<std::size_t>(i)];
        if (fi.is_zero()) continue;
        const int lead = fi.t_order();
        lambda = minors[static_cast<std::size_t>(i)].coeff(lead) / fi.coeff(lead);
    }
    if (lambda == 0) throw DomainError("MinorMismatch", "minors vanish against a nonzero parameterization");
    for (int i = 0; i < 3; ++i) {
        if (minors[static_cast<std::size_t>(i)] != lambda * f[static_cast<std::size_t>(i)]) {
            throw DomainError("MinorMismatch", "cross(p, q) is not a scalar multiple of the parameterization");
        }
    }
    return lambda;
}

// Expresses a degree-n syzygy s as lambda * p + mu * q with deg lambda = n - k
// and deg mu = n - deg q; absent cofactors (negative degree) are zero.
// Returns std::nullopt when s does not lie in the module generated by p, q.
inline std::optional<std::pair<BinaryForm, BinaryForm>> decompose_syzygy(const MuBasis& basis,
                                                                        const MovingLine& s) {
    const int n = s.degree();
    const int k = basis.p.degree();
    const int l = basis.q.degree();
    const int np = n - k + 1; // lambda coefficient count (clamped at 0)
    const int nq = n - l + 1;
    const int cp = np > 0 ? np : 0;
    const int cq = nq > 0 ? nq : 0;
    ExactMatrix m(3 * (n + 1), cp + cq);
    auto fill = [&m, n](const MovingLine& gen, int col0, int count) {
        const int gdeg = gen.degree();
        for (int j = 0; j < count; ++j) {
            for (int comp = 0; comp < 3; ++comp) {
                for (int c = 0; c <= gdeg; ++c) {
                    m.at(comp * (n + 1) + c + j, col0 + j) = gen.a[static_cast<std::size_t>(comp)].coeff(c);
                }
            }
        }
    };
    fill(basis.p, 0, cp);
    fill(basis.q, cp, cq);
    const auto x = solve(m, s.coeff_vector());
    if (!x) return std::nullopt;
    BinaryForm lam(cp > 0 ? n - k : 0), mu(cq > 0 ? n - l : 0);
    for (int j = 0; j < cp; ++j) lam.set_coeff(j, (*x)[static_cast<std::size_t>(j)]);
    for (int j = 0; j < cq; ++j) mu.set_coeff(j, (*x)[static_cast<std::size_t>(cp + j)]);
    return std::make_pair(lam, mu);
}

} // namespace scrollift
