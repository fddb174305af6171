// Variable-exponent Hölder seminorms on sampled grids, the boundedness
// constant max{7, 1 + 12*K*2^delta}, and the interpolation rate bound for
// continuity between Hölder spaces.
#pragma once

#include "maxop/rational.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace maxop {

struct HolderNormReport {
    double sup_norm = 0.0;
    double seminorm = 0.0;
    double norm = 0.0;  // sup_norm + seminorm
    /// Ordered pair attaining the seminorm (exponent taken at the first
    /// point); smallest indices on ties.
    std::pair<std::size_t, std::size_t> witness{0, 0};
    std::size_t point_count = 0;
};

/// Grid seminorm sup over ordered pairs (i, j), i != j, of
/// |f_i - f_j| / d(i, j)^alpha_i. A lower bound for the continuum seminorm.
/// Exponents in [0, 1]; requires at least 2 points.
HolderNormReport holder_norm(const std::vector<double>& values,
                             const std::vector<double>& alpha,
                             const std::function<double(std::size_t, std::size_t)>& distance);

/// Same, for samples on the line at the given rational coordinates.
HolderNormReport holder_norm_on_line(const std::vector<Rational>& points,
                                     const std::vector<double>& values,
                                     const std::vector<double>& alpha);

struct BoundednessConstant {
    Rational k;
    Rational delta;
    /// max{7, 1 + 12*K*2^delta}: exact when delta == 1, otherwise a certified
    /// upper rounding at `precision_bits` (lower end kept alongside).
    Rational value_lo;
    Rational value_hi;
    bool exact = false;
    unsigned precision_bits = 0;

    double to_double() const { return maxop::to_double(value_hi); }
};

/// Throws unless K >= 1 and delta in (0, 1].
BoundednessConstant boundedness_constant(const Rational& k, const Rational& delta,
                                         unsigned bits = 200);

/// (2N)^q * (2*sup_diff)^(1-q): the rate controlling C^{0,beta} convergence
/// by sup-norm convergence, q = sup beta/alpha. Throws unless q in [0, 1).
double continuity_rate_bound(double n, double beta_over_alpha_sup, double sup_diff);

}  // namespace maxop
