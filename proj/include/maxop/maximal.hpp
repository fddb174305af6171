// Exact one-dimensional maximal operator for periodic piecewise-linear
// functions. The averages r |-> mean of |f| over [x-r, x+r] form finitely
// many pieces of the shape c_neg/r + c_zero + c_one*r; the supremum over
// radii is then a finite exact candidate search, and the periodic reduction
// caps the search at one period.
#pragma once

#include "maxop/piecewise_linear.hpp"
#include "maxop/surd.hpp"

#include <vector>

namespace maxop {

/// One piece of a radial average profile: A(r) = c_neg/r + c_zero + c_one*r
/// on [r_lo, r_hi].
struct ProfilePiece {
    Rational r_lo;
    Rational r_hi;
    Rational c_neg;
    Rational c_zero;
    Rational c_one;

    Rational at(const Rational& r) const { return c_neg / r + c_zero + c_one * r; }
};

/// The map r |-> average of |f| over [x-r, x+r], as exact pieces tiling
/// (0, r_max], plus the r = 0 value |f(x)|.
class RadialAverageProfile {
public:
    RadialAverageProfile(Rational center, Rational value_at_zero,
                         std::vector<ProfilePiece> pieces);

    const Rational& center() const { return center_; }
    const Rational& value_at_zero() const { return value_at_zero_; }
    const std::vector<ProfilePiece>& pieces() const { return pieces_; }
    const Rational& r_max() const { return pieces_.back().r_hi; }

    /// Exact evaluation for r in [0, r_max].
    Rational at(const Rational& r) const;

private:
    Rational center_;
    Rational value_at_zero_;
    std::vector<ProfilePiece> pieces_;
};

/// Average of |f| over [x-r, x+r]; |f(x)| when r = 0.
Rational average_at(const PiecewiseLinear& f, const Rational& x, const Rational& r);

/// Builds the exact profile on (0, r_max]; piece boundaries sit exactly where
/// x-r or x+r crosses a breakpoint of |f|. Throws on r_max <= 0.
RadialAverageProfile radial_average_profile(const PiecewiseLinear& f, const Rational& x,
                                            const Rational& r_max);

struct ProfileMax {
    SurdValue value;
    SurdValue radius;  // smallest radius attaining the maximum
};

/// Exact maximum of the profile over [0, r_max]. Candidates: r = 0, piece
/// endpoints, and interior critical points of strictly concave pieces
/// (c_neg < 0 and c_one < 0), where the value is c_zero - 2*sqrt(c_neg*c_one)
/// at r = sqrt(c_neg/c_one).
ProfileMax profile_max(const RadialAverageProfile& profile);

/// Exact Mf(x): the supremum over all radii, reduced to [0, T] by periodicity.
SurdValue maximal_function(const PiecewiseLinear& f, const Rational& x);

/// Grid lower bound for the supremum: max of the exact average over
/// grid_count uniform radii in [0, r_max], rounded to double at the end.
/// Independent falsification route for the periodic reduction.
double maximal_function_brute_force(const PiecewiseLinear& f, const Rational& x,
                                    const Rational& r_max, std::size_t grid_count);

/// Mf at every grid point, in order. threads > 1 evaluates concurrently;
/// results are deterministic either way.
std::vector<std::pair<Rational, SurdValue>> maximal_curve(const PiecewiseLinear& f,
                                                          const std::vector<Rational>& grid,
                                                          unsigned threads = 1);

}  // namespace maxop
