// Continuous T-periodic piecewise-linear functions with exact rational
// breakpoints, values, evaluation and windowed integration.
#pragma once

#include "maxop/rational.hpp"

#include <utility>
#include <vector>

namespace maxop {

/// A continuous periodic piecewise-linear function. Stored on the canonical
/// window: breakpoints reduced mod T into [0, T), strictly increasing,
/// redundant (collinear) breakpoints dropped. Between consecutive breakpoints
/// (and across the wrap back to the first one) the function is affine.
///
/// Canonicalization makes equality of objects equality of functions.
/// Immutable after construction.
class PiecewiseLinear {
public:
    /// points: (breakpoint, value) pairs, breakpoints strictly increasing and
    /// spanning less than one period. Throws std::invalid_argument otherwise.
    PiecewiseLinear(const Rational& period,
                    std::vector<std::pair<Rational, Rational>> points);

    /// The tent function: 2-periodic extension of |x| from [-1, 1].
    static PiecewiseLinear hat();
    static PiecewiseLinear constant(const Rational& c, const Rational& period = Rational(2));

    const Rational& period() const { return period_; }
    std::size_t breakpoint_count() const { return breakpoints_.size(); }
    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    const std::vector<Rational>& values() const { return values_; }

    /// Exact value at any rational t (argument reduced mod T).
    Rational operator()(const Rational& t) const;

    /// scale * f + shift, same breakpoints.
    PiecewiseLinear affine(const Rational& scale, const Rational& shift) const;

    /// |f|; breakpoints gain the exact zero crossings of f.
    PiecewiseLinear absolute() const;

    /// Exact integral over [a, b], a <= b (any number of periods).
    Rational integral(const Rational& a, const Rational& b) const;

    /// Integral over one full period.
    const Rational& period_integral() const { return period_integral_; }

    /// sup |f| (attained at a breakpoint).
    Rational max_abs() const;
    /// Largest |slope| over all segments.
    Rational max_abs_slope() const;

    /// Pointwise sum; periods must match.
    friend PiecewiseLinear operator+(const PiecewiseLinear& f, const PiecewiseLinear& g);

    bool operator==(const PiecewiseLinear& other) const = default;

private:
    Rational period_;
    std::vector<Rational> breakpoints_;  // in [0, T), strictly increasing
    std::vector<Rational> values_;
    std::vector<Rational> cumulative_;   // integral from breakpoints_[0] to breakpoints_[i]
    Rational period_integral_;

    // Segment i runs from breakpoint i to breakpoint i+1 (wrapping to
    // breakpoints_[0] + T at the end).
    Rational segment_end(std::size_t i) const;
    Rational segment_end_value(std::size_t i) const;
    /// Antiderivative with value 0 at breakpoints_[0], periodically extended.
    Rational antiderivative(const Rational& t) const;
    void build_cumulative();
};

}  // namespace maxop
