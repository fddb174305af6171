// Exact rational arithmetic substrate: arbitrary-precision rationals plus the
// integer-root and certified-enclosure helpers the surd layer is built on.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace maxop {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const Rational& r) { return r.sign(); }

/// Largest integer <= r.
Int floor_rational(const Rational& r);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Canonical "num/den" rendering, denominator always present.
std::string rational_str(const Rational& r);

/// Parses "num", "num/den" (optional sign, arbitrary precision).
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// base^exp for integer exp (negative allowed; throws on 0^negative).
Rational pow_rational(const Rational& base, long exp);

/// floor(sqrt(n)), n >= 0.
Int isqrt_floor(const Int& n);

/// floor(n^(1/k)), n >= 0, k >= 1.
Int iroot_floor(const Int& n, unsigned k);

/// True iff r is the square of a rational; if so *root is the nonnegative root.
bool exact_sqrt(const Rational& r, Rational* root);

/// Closed rational interval; the workhorse for certified real comparisons.
struct RationalInterval {
    Rational lo;
    Rational hi;

    Rational mid() const { return (lo + hi) / 2; }
    Rational width() const { return hi - lo; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
};

inline RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}
inline RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
}
RationalInterval abs_interval(const RationalInterval& a);
/// Divide by a positive rational (exact).
RationalInterval div_positive(const RationalInterval& a, const Rational& d);
/// True iff the intervals share no point.
inline bool disjoint(const RationalInterval& a, const RationalInterval& b) {
    return a.hi < b.lo || b.hi < a.lo;
}

/// Enclosure of sqrt(s), s >= 0, with width <= 2^-bits.
RationalInterval sqrt_interval(const Rational& s, unsigned bits);

/// Enclosure of base^exp for base >= 0 and exp in [0, 1], width <= 2^(1-bits).
RationalInterval pow_interval(const Rational& base, const Rational& exp, unsigned bits);

}  // namespace maxop
