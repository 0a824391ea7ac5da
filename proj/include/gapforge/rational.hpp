#pragma once

// Exact scalar types. Every core computation runs on arbitrary-precision
// rationals; floating point is never used where an ordering or equality
// decision matters.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "gapforge/errors.hpp"

namespace gapforge {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational; // canonical: den > 0, gcd(num, den) = 1

inline Int rat_num(const Rat& x) { return numerator(x); }
inline Int rat_den(const Rat& x) { return denominator(x); }

/// Largest integer <= x.
inline Int floor_int(const Rat& x) {
    Int q = numerator(x) / denominator(x);
    if (numerator(x) < 0 && q * denominator(x) != numerator(x)) --q;
    return q;
}

inline Int ceil_int(const Rat& x) { return -floor_int(-x); }

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

inline Rat rat_pow(const Rat& x, unsigned e) {
    Rat acc(1);
    Rat base = x;
    for (unsigned k = e; k > 0; k >>= 1) {
        if (k & 1) acc *= base;
        if (k > 1) base *= base;
    }
    return acc;
}

/// A representative of R/Z identified with [0,1).
struct CirclePoint {
    Rat value;

    CirclePoint() : value(0) {}
    explicit CirclePoint(Rat v) : value(std::move(v)) {
        if (value < 0 || value >= 1)
            throw invalid_input("circle point outside [0,1)");
    }

    friend bool operator==(const CirclePoint& a, const CirclePoint& b) { return a.value == b.value; }
    friend bool operator<(const CirclePoint& a, const CirclePoint& b) { return a.value < b.value; }
};

/// Fractional part x - floor(x), in [0,1).
inline CirclePoint frac(const Rat& x) {
    return CirclePoint(x - Rat(floor_int(x)));
}

/// Nonnegative residue of n modulo m (m > 0).
inline Int mod_pos(const Int& n, const Int& m) {
    Int r = n % m;
    if (r < 0) r += m;
    return r;
}

/// Distance from x to the nearest integer, as a rational in [0, 1/2].
inline Rat circle_norm(const Rat& x) {
    Rat f = frac(x).value;
    return f <= Rat(1, 2) ? f : Rat(1) - f;
}

inline std::string rat_to_string(const Rat& x) {
    std::string s = rat_num(x).str();
    if (rat_den(x) != 1) {
        s += '/';
        s += rat_den(x).str();
    }
    return s;
}

/// Parses "p/q", "p", or a plain decimal like "-0.25" (read exactly).
inline Rat parse_rat(std::string_view s) {
    auto bad = [&] { throw invalid_input("malformed rational: '" + std::string(s) + "'"); };
    if (s.empty()) bad();

    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        std::string num(s.substr(0, slash));
        std::string den(s.substr(slash + 1));
        if (num.empty() || den.empty()) bad();
        try {
            Int n(num), d(den);
            if (d == 0) throw invalid_input("zero denominator: '" + std::string(s) + "'");
            return Rat(n, d);
        } catch (const std::exception&) {
            bad();
        }
    }

    auto dot = s.find('.');
    if (dot == std::string_view::npos) {
        try {
            return Rat(Int(std::string(s)));
        } catch (const std::exception&) {
            bad();
        }
    }

    std::string whole(s.substr(0, dot));
    std::string fracpart(s.substr(dot + 1));
    bool neg = !whole.empty() && whole[0] == '-';
    if (neg) whole.erase(0, 1);
    else if (!whole.empty() && whole[0] == '+') whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    if (fracpart.empty()) bad();
    for (char c : whole) if (!std::isdigit(static_cast<unsigned char>(c))) bad();
    for (char c : fracpart) if (!std::isdigit(static_cast<unsigned char>(c))) bad();

    Int scale = 1;
    for (size_t i = 0; i < fracpart.size(); ++i) scale *= 10;
    Int n = Int(whole) * scale + Int(fracpart);
    Rat r(n, scale);
    return neg ? Rat(-r) : r;
}

inline std::int64_t to_int64(const Int& x) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
        throw invalid_input("value does not fit in 64 bits");
    return static_cast<std::int64_t>(x);
}

} // namespace gapforge
