#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "binary_form.hpp"
#include "error.hpp"
#include "rational.hpp"

namespace scrollift {

using Expo = std::array<int, 3>;

// Sparse homogeneous polynomial in (x0, x1, x2). Terms are kept in a map
// ordered lexicographically by exponent vector; the zero polynomial is an
// empty map with an explicit declared degree.
class TernaryPoly {
public:
    explicit TernaryPoly(int degree = 0) : degree_(degree) {
        if (degree < 0) throw std::invalid_argument("negative polynomial degree");
    }

    static TernaryPoly monomial(const Expo& e, const Rat& c) {
        const int deg = e[0] + e[1] + e[2];
        TernaryPoly p(deg);
        p.add_term(e, c);
        return p;
    }

    static TernaryPoly variable(int i) {
        Expo e{0, 0, 0};
        e.at(static_cast<std::size_t>(i)) = 1;
        return monomial(e, Rat(1));
    }

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Expo, Rat>& terms() const { return terms_; }

    void add_term(const Expo& e, const Rat& c) {
        if (c == 0) return;
        if (e[0] < 0 || e[1] < 0 || e[2] < 0) throw std::invalid_argument("negative exponent");
        if (e[0] + e[1] + e[2] != degree_) {
            if (is_zero()) {
                degree_ = e[0] + e[1] + e[2];
            } else {
                throw std::invalid_argument("inhomogeneous term");
            }
        }
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rat coeff_at(const Expo& e) const {
        const auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    // Lexicographically largest exponent vector.
    Expo lead_expo() const {
        if (is_zero()) throw std::logic_error("leading term of zero polynomial");
        return terms_.rbegin()->first;
    }

    Rat lead_coeff() const {
        if (is_zero()) throw std::logic_error("leading term of zero polynomial");
        return terms_.rbegin()->second;
    }

    TernaryPoly operator-() const {
        TernaryPoly out(degree_);
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
        return out;
    }

    TernaryPoly& operator+=(const TernaryPoly& rhs) {
        if (rhs.is_zero()) return *this;
        if (is_zero()) {
            *this = rhs;
            return *this;
        }
        if (degree_ != rhs.degree_) throw std::invalid_argument("degree mismatch in polynomial addition");
        for (const auto& [e, c] : rhs.terms_) add_term(e, c);
        return *this;
    }

    TernaryPoly& operator-=(const TernaryPoly& rhs) {
        *this += -rhs;
        return *this;
    }

    friend TernaryPoly operator+(TernaryPoly a, const TernaryPoly& b) {
        a += b;
        return a;
    }

    friend TernaryPoly operator-(TernaryPoly a, const TernaryPoly& b) {
        a -= b;
        return a;
    }

    friend TernaryPoly operator*(const TernaryPoly& a, const TernaryPoly& b) {
        TernaryPoly out(a.degree_ + b.degree_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                out.add_term(Expo{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
            }
        }
        return out;
    }

    friend TernaryPoly operator*(const Rat& c, const TernaryPoly& p) {
        TernaryPoly out(p.degree_);
        if (c == 0) return out;
        for (const auto& [e, pc] : p.terms_) out.terms_.emplace(e, c * pc);
        return out;
    }

    friend TernaryPoly operator*(const TernaryPoly& p, const Rat& c) { return c * p; }

    friend bool operator==(const TernaryPoly& a, const TernaryPoly& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    friend bool operator!=(const TernaryPoly& a, const TernaryPoly& b) { return !(a == b); }

    // Substitutes three binary forms of a common degree; the result is a
    // binary form of degree (common degree) * (polynomial degree).
    BinaryForm substitute(const std::array<BinaryForm, 3>& f) const {
        const int m = f[0].degree();
        if (f[1].degree() != m || f[2].degree() != m) {
            throw std::invalid_argument("substitution forms must share a degree");
        }
        BinaryForm acc(degree_ * m);
        for (const auto& [e, c] : terms_) {
            BinaryForm term = BinaryForm::constant(c);
            for (int v = 0; v < 3; ++v) {
                term = term * bf_pow(f[static_cast<std::size_t>(v)], e[static_cast<std::size_t>(v)]);
            }
            acc += term;
        }
        return acc;
    }

    // Clears denominators, divides by the integer content, and flips the sign
    // so the lexicographic leading coefficient is positive. This is the unique
    // primitive integral representative used for printed implicit equations.
    TernaryPoly primitive() const {
        if (is_zero()) return *this;
        Int den_lcm = 1;
        for (const auto& [e, c] : terms_) den_lcm = lcm(den_lcm, rat_den(c));
        Int num_gcd = 0;
        for (const auto& [e, c] : terms_) num_gcd = gcd(num_gcd, rat_num(Rat(c * den_lcm)));
        Rat scale = Rat(den_lcm) / Rat(num_gcd);
        if (lead_coeff() < 0) scale = -scale;
        return scale * *this;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Expo& e = it->first;
            const Rat& c = it->second;
            const bool neg = c < 0;
            const Rat mag = neg ? Rat(-c) : c;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            std::string mono;
            for (int v = 0; v < 3; ++v) {
                const int ev = e[static_cast<std::size_t>(v)];
                if (ev == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += "x" + std::to_string(v);
                if (ev > 1) mono += "^" + std::to_string(ev);
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
    int degree_;
    std::map<Expo, Rat> terms_;
};

inline TernaryPoly tp_pow(const TernaryPoly& p, int e) {
    if (e < 0) throw std::invalid_argument("negative power");
    TernaryPoly out = TernaryPoly::monomial(Expo{0, 0, 0}, Rat(1));
    for (int i = 0; i < e; ++i) out = out * p;
    return out;
}

// Exact division by repeated cancellation of the lexicographic leading term.
// Throws NotDivisible when the division leaves a remainder and DivideByZero
// for a zero divisor. Used by the fraction-free polynomial determinant.
inline TernaryPoly tp_div_exact(TernaryPoly a, const TernaryPoly& b) {
    if (b.is_zero()) throw DomainError("DivideByZero", "polynomial division by zero");
    if (a.is_zero()) return TernaryPoly(0);
    if (a.degree() < b.degree()) throw DomainError("NotDivisible", "quotient degree would be negative");
    TernaryPoly q(a.degree() - b.degree());
    const Expo eb = b.lead_expo();
    const Rat cb = b.lead_coeff();
    while (!a.is_zero()) {
        const Expo ea = a.lead_expo();
        const Expo d{ea[0] - eb[0], ea[1] - eb[1], ea[2] - eb[2]};
        if (d[0] < 0 || d[1] < 0 || d[2] < 0) {
            throw DomainError("NotDivisible", "leading term not divisible");
        }
        const Rat qc = a.lead_coeff() / cb;
        q.add_term(d, qc);
        a -= b * TernaryPoly::monomial(d, qc);
    }
    return q;
}

// All exponent vectors of total degree m that are <= bound componentwise never
// needed; instead: all degree-m monomials in lex-descending order.
inline std::vector<Expo> degree_monomials_desc(int m) {
    std::vector<Expo> out;
    for (int e0 = m; e0 >= 0; --e0) {
        for (int e1 = m - e0; e1 >= 0; --e1) {
            out.push_back(Expo{e0, e1, m - e0 - e1});
        }
    }
    return out;
}

// If g equals c * f^r for some form f with leading coefficient 1, returns f;
// otherwise std::nullopt. Coefficients of f are recovered one lex-descending
// monomial at a time: with the partial sum f_p fixed, the coefficient of the
// next monomial N appears linearly in the coefficient of lead(f)^(r-1) * N
// inside c * f^r.
inline std::optional<TernaryPoly> perfect_power_root(const TernaryPoly& g, int r) {
    if (r <= 0 || g.is_zero()) return std::nullopt;
    if (g.degree() % r != 0) return std::nullopt;
    const Rat c = g.lead_coeff();
    if (r == 1) {
        return (Rat(1) / c) * g;
    }
    const int m = g.degree() / r;
    const Expo lead = g.lead_expo();
    Expo m0{};
    for (int v = 0; v < 3; ++v) {
        if (lead[static_cast<std::size_t>(v)] % r != 0) return std::nullopt;
        m0[static_cast<std::size_t>(v)] = lead[static_cast<std::size_t>(v)] / r;
    }

    TernaryPoly f(m);
    f.add_term(m0, Rat(1));
    bool past_lead = false;
    for (const Expo& n : degree_monomials_desc(m)) {
        if (!past_lead) {
            if (n == m0) past_lead = true;
            continue;
        }
        const Expo target{m0[0] * (r - 1) + n[0], m0[1] * (r - 1) + n[1], m0[2] * (r - 1) + n[2]};
        const TernaryPoly fp = c * tp_pow(f, r);
        const Rat a = (g.coeff_at(target) - fp.coeff_at(target)) / (c * Rat(r));
        if (a != 0) f.add_term(n, a);
    }
    if (c * tp_pow(f, r) != g) return std::nullopt;
    return f;
}

} // namespace scrollift
