#pragma once

// Exact rational scalars. All classification and verification paths use
// these; floating point never enters a verdict.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace lpp {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline int sign(const Rat& r) { return r.sign(); }

inline Rat abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

/// Serializes as "p/q", or just "p" when q = 1.
inline std::string to_string(const Rat& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) s += "/" + rat_den(r).str();
    return s;
}

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
inline Rat parse_rat(const std::string& s) {
    auto bad = [&] { throw std::invalid_argument("bad rational: '" + s + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den <= 0) bad();
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rat();  // unreachable
}

inline std::optional<Int> int_sqrt_exact(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

/// Exact square root when the argument is a perfect rational square.
inline std::optional<Rat> rat_sqrt_exact(const Rat& r) {
    if (r < 0) return std::nullopt;
    auto n = int_sqrt_exact(rat_num(r));
    auto d = int_sqrt_exact(rat_den(r));
    if (n && d) return Rat(*n, *d);
    return std::nullopt;
}

/// Squarefree part of a nonzero rational: the unique squarefree integer s
/// with r = s * t^2 for some rational t. Used to canonicalize quadratic
/// eigenvalue descriptors under scaling by squares.
inline Int squarefree_part(const Rat& r) {
    if (r == 0) return 0;
    Int m = rat_num(r) * rat_den(r);  // r ~ m mod squares
    Int s = m < 0 ? Int(-1) : Int(1);
    m = boost::multiprecision::abs(m);
    for (Int p = 2; p * p <= m; ++p) {
        Int p2 = p * p;
        while (m % p2 == 0) m /= p2;
        if (m % p == 0) {
            s *= p;
            m /= p;
        }
    }
    return s * m;
}

inline Rat rat_pow(const Rat& r, int e) {
    Rat acc(1), base = e < 0 ? Rat(1) / r : r;
    for (int i = 0, n = e < 0 ? -e : e; i < n; ++i) acc *= base;
    return acc;
}

}  // namespace lpp
