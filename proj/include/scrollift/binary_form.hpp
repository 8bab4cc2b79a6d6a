#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace scrollift {

// 2x2 substitution matrix: s -> m[0][0] s + m[0][1] t, t -> m[1][0] s + m[1][1] t.
using Mat2 = std::array<std::array<Rat, 2>, 2>;

// Dense homogeneous polynomial in (s, t) with rational coefficients.
// coeff(i) multiplies s^(degree-i) t^i, so coeff(0) goes with the pure s
// monomial and coeff(degree) with the pure t monomial. A zero form carries an
// explicit declared degree so arithmetic can keep degrees consistent.
class BinaryForm {
public:
    BinaryForm() : coeffs_(1, Rat(0)) {}

    explicit BinaryForm(int degree) {
        if (degree < 0) throw std::invalid_argument("negative form degree");
        coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rat(0));
    }

    BinaryForm(int degree, std::vector<Rat> coeffs) {
        if (degree < 0) throw std::invalid_argument("negative form degree");
        if (coeffs.size() != static_cast<std::size_t>(degree) + 1) {
            throw std::invalid_argument("coefficient count does not match degree");
        }
        coeffs_ = std::move(coeffs);
    }

    static BinaryForm monomial(int degree, int t_pow, const Rat& c) {
        BinaryForm f(degree);
        if (t_pow < 0 || t_pow > degree) throw std::invalid_argument("monomial exponent out of range");
        f.coeffs_[static_cast<std::size_t>(t_pow)] = c;
        return f;
    }

    static BinaryForm constant(const Rat& c) { return BinaryForm(0, {c}); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
    }

    const Rat& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    void set_coeff(int i, Rat v) { coeffs_.at(static_cast<std::size_t>(i)) = std::move(v); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    // Exponent of t dividing the form (index of the first nonzero coefficient).
    int t_order() const {
        for (int i = 0; i <= degree(); ++i) {
            if (coeffs_[static_cast<std::size_t>(i)] != 0) return i;
        }
        throw std::logic_error("t_order of zero form");
    }

    // Exponent of s dividing the form.
    int s_order() const {
        for (int i = degree(); i >= 0; --i) {
            if (coeffs_[static_cast<std::size_t>(i)] != 0) return degree() - i;
        }
        throw std::logic_error("s_order of zero form");
    }

    Rat eval(const Rat& s0, const Rat& t0) const {
        // sum c_i s0^(n-i) t0^i via two running power ladders.
        const int n = degree();
        std::vector<Rat> spow(static_cast<std::size_t>(n) + 1), tpow(static_cast<std::size_t>(n) + 1);
        spow[0] = 1;
        tpow[0] = 1;
        for (int i = 1; i <= n; ++i) {
            spow[static_cast<std::size_t>(i)] = spow[static_cast<std::size_t>(i - 1)] * s0;
            tpow[static_cast<std::size_t>(i)] = tpow[static_cast<std::size_t>(i - 1)] * t0;
        }
        Rat acc = 0;
        for (int i = 0; i <= n; ++i) {
            acc += coeffs_[static_cast<std::size_t>(i)] * spow[static_cast<std::size_t>(n - i)] *
                   tpow[static_cast<std::size_t>(i)];
        }
        return acc;
    }

    BinaryForm derivative_s() const {
        const int n = degree();
        if (n == 0) return BinaryForm(0);
        BinaryForm out(n - 1);
        for (int i = 0; i <= n - 1; ++i) {
            out.coeffs_[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i)] * Rat(n - i);
        }
        return out;
    }

    BinaryForm derivative_t() const {
        const int n = degree();
        if (n == 0) return BinaryForm(0);
        BinaryForm out(n - 1);
        for (int i = 1; i <= n; ++i) {
            out.coeffs_[static_cast<std::size_t>(i - 1)] = coeffs_[static_cast<std::size_t>(i)] * Rat(i);
        }
        return out;
    }

    // Substitutes the linear change of parameter given by m.
    BinaryForm compose(const Mat2& m) const {
        const int n = degree();
        const BinaryForm u(1, {m[0][0], m[0][1]});
        const BinaryForm v(1, {m[1][0], m[1][1]});
        // Precompute u^k and v^k for k = 0..n.
        std::vector<BinaryForm> up, vp;
        up.reserve(static_cast<std::size_t>(n) + 1);
        vp.reserve(static_cast<std::size_t>(n) + 1);
        up.push_back(BinaryForm::constant(1));
        vp.push_back(BinaryForm::constant(1));
        for (int k = 1; k <= n; ++k) {
            up.push_back(up.back() * u);
            vp.push_back(vp.back() * v);
        }
        BinaryForm out(n);
        for (int i = 0; i <= n; ++i) {
            const Rat& c = coeffs_[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            const BinaryForm term = up[static_cast<std::size_t>(n - i)] * vp[static_cast<std::size_t>(i)];
            for (int j = 0; j <= n; ++j) {
                out.coeffs_[static_cast<std::size_t>(j)] += c * term.coeff(j);
            }
        }
        return out;
    }

    // Scales so the first nonzero coefficient becomes 1. Zero forms pass through.
    BinaryForm monic() const {
        BinaryForm out = *this;
        for (const Rat& c : out.coeffs_) {
            if (c != 0) {
                const Rat lead = c;
                for (Rat& x : out.coeffs_) x /= lead;
                return out;
            }
        }
        return out;
    }

    BinaryForm operator-() const {
        BinaryForm out = *this;
        for (Rat& c : out.coeffs_) c = -c;
        return out;
    }

    BinaryForm& operator+=(const BinaryForm& rhs) {
        if (rhs.is_zero()) return *this;
        if (is_zero() && degree() != rhs.degree()) {
            *this = rhs;
            return *this;
        }
        if (degree() != rhs.degree()) throw std::invalid_argument("degree mismatch in form addition");
        for (int i = 0; i <= degree(); ++i) {
            coeffs_[static_cast<std::size_t>(i)] += rhs.coeffs_[static_cast<std::size_t>(i)];
        }
        return *this;
    }

    BinaryForm& operator-=(const BinaryForm& rhs) {
        *this += -rhs;
        return *this;
    }

    friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) {
        a += b;
        return a;
    }

    friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) {
        a -= b;
        return a;
    }

    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
        BinaryForm out(a.degree() + b.degree());
        for (int i = 0; i <= a.degree(); ++i) {
            const Rat& ca = a.coeffs_[static_cast<std::size_t>(i)];
            if (ca == 0) continue;
            for (int j = 0; j <= b.degree(); ++j) {
                out.coeffs_[static_cast<std::size_t>(i + j)] += ca * b.coeffs_[static_cast<std::size_t>(j)];
            }
        }
        return out;
    }

    friend BinaryForm operator*(const Rat& c, BinaryForm f) {
        for (Rat& x : f.coeffs_) x *= c;
        return f;
    }

    friend BinaryForm operator*(BinaryForm f, const Rat& c) { return c * std::move(f); }

    // Zero forms compare equal regardless of declared degree; otherwise the
    // degree and every coefficient must agree.
    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.coeffs_ == b.coeffs_;
    }

    friend bool operator!=(const BinaryForm& a, const BinaryForm& b) { return !(a == b); }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        const int n = degree();
        for (int i = 0; i <= n; ++i) {
            const Rat& c = coeffs_[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            const bool neg = c < 0;
            const Rat mag = neg ? Rat(-c) : c;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            std::string mono;
            const int se = n - i;
            if (se > 0) mono += se == 1 ? "s" : "s^" + std::to_string(se);
            if (i > 0) {
                if (!mono.empty()) mono += "*";
                mono += i == 1 ? "t" : "t^" + std::to_string(i);
            }
            if (mono.empty()) {
                out += rational_str(mag);
            } else if (mag == 1) {
                out += mono;
            } else {
                out += rational_str(mag) + "*" + mono;
            }
        }
        return out;
    }

private:
    std::vector<Rat> coeffs_;
};

inline BinaryForm bf_pow(const BinaryForm& f, int e) {
    if (e < 0) throw std::invalid_argument("negative power");
    BinaryForm out = BinaryForm::constant(1);
    for (int i = 0; i < e; ++i) out = out * f;
    return out;
}

namespace detail {

// Dense univariate polynomial over Q, u[j] = coefficient of x^j. The zero
// polynomial is {0}; otherwise the top coefficient is nonzero.
using Uni = std::vector<Rat>;

inline void uni_trim(Uni& u) {
    while (u.size() > 1 && u.back() == 0) u.pop_back();
}

inline bool uni_is_zero(const Uni& u) { return u.size() == 1 && u[0] == 0; }

inline int uni_degree(const Uni& u) { return static_cast<int>(u.size()) - 1; }

inline void uni_make_monic(Uni& u) {
    if (uni_is_zero(u)) return;
    const Rat lead = u.back();
    for (Rat& c : u) c /= lead;
}

inline Uni uni_rem(Uni a, const Uni& b) {
    uni_trim(a);
    while (!uni_is_zero(a) && uni_degree(a) >= uni_degree(b)) {
        const Rat q = a.back() / b.back();
        const int shift = uni_degree(a) - uni_degree(b);
        for (int j = 0; j <= uni_degree(b); ++j) {
            a[static_cast<std::size_t>(j + shift)] -= q * b[static_cast<std::size_t>(j)];
        }
        a.back() = 0;
        uni_trim(a);
    }
    return a;
}

inline Uni uni_gcd(Uni a, Uni b) {
    uni_trim(a);
    uni_trim(b);
    while (!uni_is_zero(b)) {
        Uni r = uni_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    uni_make_monic(a);
    return a;
}

// Dehomogenization at t = 1: the returned u[e] is the coefficient of s^e.
inline Uni to_uni_t1(const BinaryForm& f) {
    const int n = f.degree();
    Uni u(static_cast<std::size_t>(n) + 1, Rat(0));
    for (int i = 0; i <= n; ++i) u[static_cast<std::size_t>(n - i)] = f.coeff(i);
    uni_trim(u);
    return u;
}

// Rehomogenizes a univariate polynomial in s to a binary form of exactly its
// own degree (top coefficient nonzero).
inline BinaryForm from_uni_t1(const Uni& u) {
    const int r = uni_degree(u);
    BinaryForm f(r);
    for (int e = 0; e <= r; ++e) f.set_coeff(r - e, u[static_cast<std::size_t>(e)]);
    return f;
}

} // namespace detail

// Monic gcd (first nonzero coefficient 1). Throws BothZero when both inputs
// vanish since the gcd of two zero forms is not a form of defined degree.
inline BinaryForm bf_gcd(const BinaryForm& a, const BinaryForm& b) {
    if (a.is_zero() && b.is_zero()) {
        throw DomainError("BothZero", "gcd of two zero forms is undefined");
    }
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();

    const int a_t = a.t_order(), a_s = a.s_order();
    const int b_t = b.t_order(), b_s = b.s_order();
    const int t_shared = std::min(a_t, b_t);
    const int s_shared = std::min(a_s, b_s);

    // Strip monomial parts, then run the Euclidean algorithm on the
    // dehomogenized cores (their s- and t-ends are both nonzero, so no root
    // information is lost at t = 1).
    auto core = [](const BinaryForm& f, int t_ord, int s_ord) {
        const int n = f.degree();
        const int m = n - t_ord - s_ord;
        BinaryForm c(m);
        for (int j = 0; j <= m; ++j) c.set_coeff(j, f.coeff(j + t_ord));
        return c;
    };
    const detail::Uni ga = detail::to_uni_t1(core(a, a_t, a_s));
    const detail::Uni gb = detail::to_uni_t1(core(b, b_t, b_s));
    const detail::Uni g = detail::uni_gcd(ga, gb);

    BinaryForm out = detail::from_uni_t1(g);
    if (s_shared + t_shared > 0) {
        out = out * BinaryForm::monomial(s_shared + t_shared, t_shared, Rat(1));
    }
    return out.monic();
}

// Exact division; throws NotDivisible when b does not divide a and
// DivideByZero when b vanishes.
inline BinaryForm bf_div_exact(const BinaryForm& a, const BinaryForm& b) {
    if (b.is_zero()) throw DomainError("DivideByZero", "division by the zero form");
    if (a.is_zero()) return BinaryForm(std::max(0, a.degree() - b.degree()));
    if (a.degree() < b.degree()) {
        throw DomainError("NotDivisible", "dividend degree below divisor degree");
    }
    const int b_t = b.t_order(), b_s = b.s_order();
    if (a.t_order() < b_t || a.s_order() < b_s) {
        throw DomainError("NotDivisible", "monomial part of divisor does not divide dividend");
    }
    // Strip b's monomial factor from both sides, then deconvolve against b's
    // core, whose leading (index-0) coefficient is nonzero.
    const int n = a.degree() - b_t - b_s;     // degree of the stripped dividend
    const int m = b.degree() - b_t - b_s;     // degree of b's core
    const int q_deg = n - m;                  // = a.degree() - b.degree()
    std::vector<Rat> ap(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) ap[static_cast<std::size_t>(j)] = a.coeff(j + b_t);
    std::vector<Rat> bp(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) bp[static_cast<std::size_t>(j)] = b.coeff(j + b_t);

    std::vector<Rat> q(static_cast<std::size_t>(q_deg) + 1, Rat(0));
    for (int j = 0; j <= q_deg; ++j) {
        Rat acc = ap[static_cast<std::size_t>(j)];
        for (int i = 1; i <= std::min(j, m); ++i) {
            acc -= bp[static_cast<std::size_t>(i)] * q[static_cast<std::size_t>(j - i)];
        }
        q[static_cast<std::size_t>(j)] = acc / bp[0];
    }
    for (int j = q_deg + 1; j <= n; ++j) {
        Rat acc = 0;
        for (int i = std::max(1, j - q_deg); i <= std::min(j, m); ++i) {
            acc += bp[static_cast<std::size_t>(i)] * q[static_cast<std::size_t>(j - i)];
        }
        if (acc != ap[static_cast<std::size_t>(j)]) {
            throw DomainError("NotDivisible", "remainder is nonzero");
        }
    }
    return BinaryForm(q_deg, std::move(q));
}

} // namespace scrollift
