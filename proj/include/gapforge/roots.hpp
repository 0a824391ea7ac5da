#pragma once

// Certified enclosures for the two non-rational quantities that appear in
// the inequality checks: m-th roots of rationals and powers of e. Every
// bracket is verified by exact rational powering before it is returned, so
// a comparison decided against a bracket endpoint is a proof, not an
// approximation.

#include <utility>

#include "gapforge/errors.hpp"
#include "gapforge/rational.hpp"

namespace gapforge {

/// floor(x^(1/m)) for x >= 0, m >= 1.
inline Int iroot_floor(const Int& x, unsigned m) {
    if (x < 0) throw invalid_input("iroot_floor: negative radicand");
    if (m == 0) throw invalid_input("iroot_floor: zeroth root");
    if (m == 1 || x <= 1) return x;

    unsigned bits = msb(x) + 1; // boost: index of highest set bit
    Int y = Int(1) << (bits / m + 1);
    for (;;) {
        Int t = ((m - 1) * y + x / pow(y, m - 1)) / m;
        if (t >= y) break;
        y = t;
    }
    while (pow(y, m) > x) --y;
    while (pow(y + 1, m) <= x) ++y;
    return y;
}

/// Certified enclosure lo <= value <= hi.
struct Bracket {
    Rat lo, hi;

    Rat width() const { return hi - lo; }
    Rat midpoint() const { return (lo + hi) / 2; }
    bool is_point() const { return lo == hi; }
};

/// Bracket of x^(1/m) with width <= 2^-bits, endpoints verified exactly.
inline Bracket nth_root_bracket(const Rat& x, unsigned m, unsigned bits = 64) {
    if (x < 0) throw invalid_input("nth_root_bracket: negative radicand");
    if (m == 0) throw invalid_input("nth_root_bracket: zeroth root");
    if (x == 0) return {Rat(0), Rat(0)};

    Int scale = Int(1) << bits;
    Int t = floor_int(x * Rat(pow(scale, m)));
    Int n = iroot_floor(t, m);
    Rat lo(n, scale), hi(n + 2, scale);
    while (rat_pow(lo, m) > x) lo -= Rat(1, scale);
    while (rat_pow(hi, m) < x) hi += Rat(1, scale);
    // tighten back if the exact root was hit
    if (rat_pow(lo + Rat(1, scale), m) <= x) lo += Rat(1, scale);
    if (rat_pow(hi - Rat(1, scale), m) >= x) hi -= Rat(1, scale);
    return {lo, hi};
}

/// Bracket of e from the factorial series: sum_{k<=n} 1/k! < e < sum + 1/(n!n).
inline Bracket e_bracket(unsigned bits = 64) {
    unsigned n = 2;
    Int fact = 2; // n!
    while (fact * n < (Int(1) << bits)) {
        ++n;
        fact *= n;
    }
    Int acc = 0; // sum of n!/k! for k = 0..n
    Int term = 1;
    for (unsigned k = n; k > 0; --k) {
        acc += term;
        term *= k;
    }
    acc += term; // k = 0 contributes n!
    Rat lo(acc, fact);
    Rat hi = lo + Rat(1, fact * n);
    return {lo, hi};
}

inline Bracket bracket_pow(const Bracket& b, unsigned e) {
    if (b.lo < 0) throw invalid_input("bracket_pow: negative bracket");
    return {rat_pow(b.lo, e), rat_pow(b.hi, e)};
}

inline Bracket bracket_scale(const Bracket& b, const Rat& c) {
    if (c < 0) throw invalid_input("bracket_scale: negative scale");
    return {b.lo * c, b.hi * c};
}

/// Bracket of num / b for positive b.
inline Bracket bracket_div_into(const Rat& num, const Bracket& b) {
    if (b.lo <= 0) throw invalid_input("bracket_div_into: divisor bracket touches zero");
    if (num < 0) throw invalid_input("bracket_div_into: negative numerator");
    return {num / b.hi, num / b.lo};
}

} // namespace gapforge
