#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>

namespace scrollift {

using Int = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always stored in lowest terms with a
// positive denominator.
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& x) { return numerator(x); }
inline Int rat_den(const Rat& x) { return denominator(x); }

// Serializes as "p" when the denominator is 1, otherwise "p/q".
inline std::string rational_str(const Rat& x) {
    std::string out = rat_num(x).str();
    if (rat_den(x) != 1) {
        out += "/";
        out += rat_den(x).str();
    }
    return out;
}

// Accepts optional whitespace, an optional leading sign on the numerator,
// and an optional "/q" part with q a positive integer.
inline Rat parse_rational(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    }
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    auto digits_ok = [](const std::string& part, bool allow_sign) {
        if (part.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (part[0] == '+' || part[0] == '-')) i = 1;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        }
        return true;
    };

    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!digits_ok(s, true)) {
            throw std::invalid_argument("bad rational literal '" + text + "'");
        }
        return Rat(Int(s));
    }
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false)) {
        throw std::invalid_argument("bad rational literal '" + text + "'");
    }
    Int d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rat(Int(num), d);
}

} // namespace scrollift
