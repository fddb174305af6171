// Theorem-reproduction harnesses: the discontinuity counterexample chain on
// C^{0,1}(R), the periodic radius reduction, the boundedness property suite
// on the line, and the interpolation rate suite. Each run produces a
// deterministic machine-checkable report.
#pragma once

#include "maxop/holder.hpp"
#include "maxop/maximal.hpp"
#include "maxop/piecewise_linear.hpp"
#include "maxop/surd.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace maxop {

/// f_n = hat - 1/n. Requires n >= 3 so the piece-interval orderings around
/// x = 1/2 are the generic ones.
PiecewiseLinear counterexample_sequence(int n);

/// Closed form of M(hat): 2 - sqrt(x^2 + 2) on [0, 1/2], x on (1/2, 1],
/// extended everywhere by evenness and 2-periodicity. With reduce = false the
/// argument must already lie in [0, 1].
SurdValue mf_closed_form(const Rational& x, bool reduce = true);

/// Closed form of M(f_n)(1/2) = 1 - sqrt(1/4 + 1/n - 1/n^2); n >= 3.
SurdValue mfn_at_half_closed_form(int n);

struct CounterexampleReport {
    int n = 0;
    Rational dn;  // 1/2 - 1/(4n^2)
    SurdValue mf_at_half;
    SurdValue mf_at_dn;
    SurdValue mfn_at_half;
    SurdValue mfn_at_dn;
    bool inequality_holds = false;  // Mf_n(d_n) <= Mf_n(1/2)
    double quotient = 0.0;          // (Mf(d_n) - Mf(1/2)) / (1/2 - d_n), tends to 1/3
    double norm_lower_bound = 0.0;  // pair-based lower bound for ||Mf_n - Mf||_{C^{0,1}}
};

/// Runs the exact engine at x = 1/2 and x = d_n, cross-checks both closed
/// forms by exact surd equality (mismatch throws), and fills the report.
CounterexampleReport verify_counterexample(int n);

/// True iff a grid search over [0, (1+periods_beyond)T] with grid_count
/// points never beats the exact one-period maximum by more than 1e-12.
/// Requires periods_beyond >= 1 and grid_count >= 100.
bool verify_periodic_lemma(const PiecewiseLinear& f, const Rational& x, int periods_beyond,
                           std::size_t grid_count);

/// Random periodic piecewise-linear function for the property suites:
/// period 2, breakpoints on the quarter-integer lattice, values dyadic in
/// [-1, 1]. Breakpoint spacing >= 1/4 keeps slopes bounded.
PiecewiseLinear random_piecewise_linear(std::mt19937_64& rng);

/// Uniform draw from {0, 1, ..., n-1} (deterministic across platforms).
std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n);

struct Theorem1Violation {
    std::size_t trial = 0;
    std::string kind;  // "holder_norm", "sup_contraction", "two_point"
    double lhs = 0.0;
    double rhs = 0.0;
    Rational x;
    Rational y;
};

struct Theorem1Report {
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::size_t grid_count = 0;
    Rational c1;  // 25 on the line: delta = 1, K = 1
    std::size_t two_point_checks = 0;
    double max_norm_ratio = 0.0;      // observed grid norm(Mf) / norm(f)
    double max_two_point_ratio = 0.0; // observed |Mf(x)-Mf(y)| / min(a^ax, a^ay)
    std::vector<Theorem1Violation> violations;

    bool passed() const { return violations.empty(); }
};

/// Boundedness property suite on R with Lebesgue measure (delta = 1, K = 1,
/// C1 = 25): random functions and random exponents alpha in [0, 1] per grid
/// point; checks grid norm(Mf) <= 25 norm(f), exact sup-norm contraction,
/// and the two-point inequality Mf(y) >= Mf(x) - C1 min{a^a(x), a^a(y)}.
Theorem1Report verify_theorem1_on_line(std::size_t trials, std::uint64_t seed,
                                       std::size_t grid_count);

struct ContinuityRow {
    Rational shift;
    double sup_diff = 0.0;       // grid sup |Mf_k - Mf|
    double seminorm_beta = 0.0;  // grid C^{0,beta} seminorm of the difference
    double norm_beta = 0.0;      // sup_diff + seminorm_beta
    double bound = 0.0;          // (2N)^q (2 sup_diff)^(1-q)
    bool bound_holds = false;
};

struct ContinuityReport {
    Rational alpha;
    Rational beta;
    double q = 0.0;        // beta / alpha
    double n_bound = 0.0;  // N: largest grid C^{0,alpha} norm among Mf and all Mf_k
    std::vector<ContinuityRow> rows;
    bool all_bounds_hold = false;
    bool distances_decreasing = false;  // norm_beta nonincreasing down the table

    bool passed() const { return all_bounds_hold; }
};

/// Rate suite for continuity between Hölder spaces with constant exponents:
/// f_k = f + shift_k; checks seminorm_beta(Mf_k - Mf) against the
/// interpolation bound for every shift. Throws unless 0 < beta < alpha <= 1.
ContinuityReport verify_theorem2_continuity(const PiecewiseLinear& f,
                                            const std::vector<Rational>& shifts,
                                            const Rational& alpha_const,
                                            const Rational& beta_const,
                                            const std::vector<Rational>& grid);

}  // namespace maxop
