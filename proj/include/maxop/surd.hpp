// Quadratic surds p + q*sqrt(s) with exact sign determination and ordering.
// The comparison never touches floating point: signs are decided by a finite
// case analysis on rational squares.
#pragma once

#include "maxop/rational.hpp"

namespace maxop {

/// Value p + q*sqrt(s) with rational p, q, s >= 0.
///
/// Canonical form (established by every constructor):
///   - q in {-1, 0, +1};
///   - q == 0 implies s == 0 (purely rational value);
///   - q != 0 implies s > 0 and s is not a perfect rational square.
/// The canonical triple is unique per real value, so field-wise equality
/// coincides with value equality.
class SurdValue {
public:
    SurdValue() : p_(0), q_(0), s_(0) {}
    SurdValue(Rational value) : p_(std::move(value)), q_(0), s_(0) {}  // NOLINT: implicit by design
    SurdValue(int value) : p_(value), q_(0), s_(0) {}                  // NOLINT
    SurdValue(Rational p, Rational q, Rational s);

    static SurdValue sqrt_of(const Rational& s) { return SurdValue(0, 1, s); }

    const Rational& p() const { return p_; }
    const Rational& q() const { return q_; }
    const Rational& s() const { return s_; }

    bool is_rational() const { return q_ == 0; }
    /// Requires is_rational().
    const Rational& as_rational() const;

    /// Exact sign in {-1, 0, +1}; decided by rational arithmetic only.
    int sign() const;

    SurdValue negated() const;
    /// c * value (any rational c).
    SurdValue scaled(const Rational& c) const;
    /// value + c.
    SurdValue shifted(const Rational& c) const;

    /// Enclosing rational interval with width <= 2^(4-bits) * max(1, |value|).
    RationalInterval enclosure(unsigned bits) const;
    double to_double() const;

    bool operator==(const SurdValue& other) const = default;

private:
    Rational p_, q_, s_;
};

/// Exact three-way ordering of two surd values (radicands may differ):
/// -1, 0, +1 for a < b, a == b, a > b.
int compare(const SurdValue& a, const SurdValue& b);

inline bool operator<(const SurdValue& a, const SurdValue& b) { return compare(a, b) < 0; }
inline bool operator>(const SurdValue& a, const SurdValue& b) { return compare(a, b) > 0; }
inline bool operator<=(const SurdValue& a, const SurdValue& b) { return compare(a, b) <= 0; }
inline bool operator>=(const SurdValue& a, const SurdValue& b) { return compare(a, b) >= 0; }

/// Exact sign of A + B*sqrt(u) with u >= 0 (no canonicity assumed).
int radical_sign(const Rational& a, const Rational& b, const Rational& u);

/// Exact sign of A + B*sqrt(u) + C*sqrt(v), u, v >= 0. One squaring step
/// reduces the two-radical case to radical_sign.
int radical_pair_sign(const Rational& a, const Rational& b, const Rational& u,
                      const Rational& c, const Rational& v);

}  // namespace maxop
