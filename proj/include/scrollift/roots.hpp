#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "binary_form.hpp"
#include "rational.hpp"

namespace scrollift {

// A projective parameter point (a : b) with multiplicity, stored primitively
// with b >= 0 (and a = 1 when b = 0, i.e. the point at infinity).
struct FormRoot {
    Int a;
    Int b;
    int mult = 0;
};

struct RootSplit {
    std::vector<FormRoot> roots; // sorted by slope a/b descending, (1:0) first
    bool fully_split = false;    // true when the form factors into rational linear forms
};

// The linear form vanishing at the root: b s - a t.
inline BinaryForm root_factor(const FormRoot& r) {
    return BinaryForm(1, {Rat(r.b), Rat(-r.a)});
}

namespace detail {

inline std::vector<Int> positive_divisors(Int n) {
    if (n < 0) n = -n;
    std::vector<Int> out;
    for (Int i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            out.push_back(i);
            if (i * i != n) out.push_back(n / i);
        }
    }
    return out;
}

inline Rat uni_eval(const Uni& u, const Rat& x) {
    Rat acc = 0;
    for (auto it = u.rbegin(); it != u.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Synthetic division by (x - sigma); the caller guarantees sigma is a root.
inline Uni uni_deflate(const Uni& u, const Rat& sigma) {
    const int m = uni_degree(u);
    Uni q(static_cast<std::size_t>(m), Rat(0));
    q[static_cast<std::size_t>(m - 1)] = u[static_cast<std::size_t>(m)];
    for (int j = m - 1; j >= 1; --j) {
        q[static_cast<std::size_t>(j - 1)] = u[static_cast<std::size_t>(j)] + sigma * q[static_cast<std::size_t>(j)];
    }
    return q;
}

} // namespace detail

// All rational projective roots of a nonzero binary form, with multiplicity,
// via the rational root test on the dehomogenized core. fully_split reports
// whether the rational roots account for the full degree.
inline RootSplit rational_roots(const BinaryForm& f) {
    if (f.is_zero()) throw std::invalid_argument("roots of the zero form");
    RootSplit out;
    const int t_ord = f.t_order();
    const int s_ord = f.s_order();
    if (t_ord > 0) out.roots.push_back(FormRoot{Int(1), Int(0), t_ord});
    if (s_ord > 0) out.roots.push_back(FormRoot{Int(0), Int(1), s_ord});

    const int n = f.degree();
    const int m = n - t_ord - s_ord;
    if (m == 0) {
        out.fully_split = true;
    } else {
        BinaryForm core(m);
        for (int j = 0; j <= m; ++j) core.set_coeff(j, f.coeff(j + t_ord));
        detail::Uni u = detail::to_uni_t1(core);
        // Clear denominators so the rational root test applies.
        Int den = 1;
        for (const Rat& c : u) den = lcm(den, rat_den(c));
        std::vector<Int> iu;
        iu.reserve(u.size());
        for (const Rat& c : u) iu.push_back(rat_num(Rat(c * den)));

        std::set<Rat> candidates;
        for (const Int& p : detail::positive_divisors(iu.front())) {
            for (const Int& q : detail::positive_divisors(iu.back())) {
                candidates.insert(Rat(p, q));
                candidates.insert(Rat(-p, q));
            }
        }
        for (const Rat& sigma : candidates) {
            int mult = 0;
            while (detail::uni_degree(u) > 0 && detail::uni_eval(u, sigma) == 0) {
                u = detail::uni_deflate(u, sigma);
                ++mult;
            }
            if (mult > 0) {
                out.roots.push_back(FormRoot{rat_num(sigma), rat_den(sigma), mult});
            }
        }
        out.fully_split = detail::uni_degree(u) == 0;
    }

    // Slope a/b descending with (1:0) treated as +infinity; denominators are
    // nonnegative so the cross-multiplied comparison preserves order.
    std::sort(out.roots.begin(), out.roots.end(), [](const FormRoot& x, const FormRoot& y) {
        if (x.b == 0) return y.b != 0;
        if (y.b == 0) return false;
        return x.a * y.b > y.a * x.b;
    });
    return out;
}

} // namespace scrollift
