// Finite metric measure spaces: exact discrete maximal operator and the best
// annular-decay constant over the finite critical set of ball compositions.
#pragma once

#include "maxop/rational.hpp"

#include <cstddef>
#include <vector>

namespace maxop {

/// Points 0..n-1 with a rational distance matrix and positive rational
/// masses. Validates symmetry, zero diagonal, positivity and the triangle
/// inequality on construction. Immutable afterwards.
class FiniteMetricMeasureSpace {
public:
    FiniteMetricMeasureSpace(std::vector<std::vector<Rational>> distances,
                             std::vector<Rational> masses);

    /// Points on a line: d(i, j) = |x_i - x_j|.
    static FiniteMetricMeasureSpace line(const std::vector<Rational>& positions,
                                         std::vector<Rational> masses);
    /// All pairwise distances 1.
    static FiniteMetricMeasureSpace simplex(std::size_t n);

    std::size_t size() const { return masses_.size(); }
    const Rational& distance(std::size_t i, std::size_t j) const { return distances_[i][j]; }
    const Rational& mass(std::size_t i) const { return masses_[i]; }
    Rational total_mass() const;
    Rational diameter() const;

    /// Measure of the open ball {y : d(x, y) < r}; throws on r <= 0.
    Rational ball_measure(std::size_t x, const Rational& r) const;

    /// Distinct distances from x, ascending, starting with 0.
    std::vector<Rational> distance_classes(std::size_t x) const;

private:
    std::vector<std::vector<Rational>> distances_;
    std::vector<Rational> masses_;
};

/// Exact sup over r > 0 of the ball averages of |f| centered at x, via the
/// finitely many ball compositions.
Rational discrete_maximal(const FiniteMetricMeasureSpace& space,
                          const std::vector<Rational>& values, std::size_t x);

struct AnnularDecayWitness {
    std::size_t x = 0;
    Rational r;
    Rational epsilon;
};

/// Best constant for mu(B(x,r) \ B(x,r(1-eps))) <= K eps^delta mu(B(x,r))
/// over the critical set: for every center, one representative radius per
/// ball composition (midpoints between consecutive distances, diameter + 1
/// beyond), and for each radius the smallest epsilon capturing each annulus
/// composition. K floors at 1.
struct AnnularDecayReport {
    Rational delta;
    /// Certified enclosure of the critical-set supremum before flooring;
    /// exact (lo == hi) when delta == 1.
    Rational sup_ratio_lo;
    Rational sup_ratio_hi;
    /// max(1, sup ratio): the reported K uses the upper end when delta < 1.
    Rational best_k;
    bool exact = true;
    bool floored = false;       // true when the sup fell below 1
    unsigned precision_bits = 0;  // interval precision used when delta < 1
    AnnularDecayWitness witness;
    bool has_witness = false;
};

/// Throws unless delta is in (0, 1]. For delta < 1 candidate ratios involve
/// eps^delta and are compared through interval arithmetic, refining from
/// `bits` until the maximum is isolated.
AnnularDecayReport annular_decay_k(const FiniteMetricMeasureSpace& space, const Rational& delta,
                                   unsigned bits = 200);

}  // namespace maxop
