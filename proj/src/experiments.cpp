#include "maxop/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace maxop {

namespace {

Rational dyadic_scale_approx(double value, unsigned bits = 20) {
    // Rational close to 1/value, denominator 2^bits.
    const double scaled = std::ldexp(1.0 / value, static_cast<int>(bits));
    Int num(static_cast<long long>(std::llround(scaled)));
    if (num <= 0) num = 1;
    return Rational(num, Int(1) << bits);
}

double interval_mid_double(const RationalInterval& iv) { return to_double(iv.mid()); }

}  // namespace

PiecewiseLinear counterexample_sequence(int n) {
    if (n < 3) throw std::invalid_argument("counterexample_sequence: requires n >= 3");
    return PiecewiseLinear::hat().affine(Rational(1), Rational(-1, n));
}

SurdValue mf_closed_form(const Rational& x, bool reduce) {
    Rational u = x;
    if (reduce) {
        u -= Rational(floor_rational(u / 2)) * 2;  // into [0, 2)
        if (u > 1) u = 2 - u;                      // evenness
    } else if (x < 0 || x > 1) {
        throw std::invalid_argument("mf_closed_form: x outside [0, 1] with reduction disabled");
    }
    if (u <= Rational(1, 2)) return SurdValue(Rational(2), Rational(-1), u * u + 2);
    return SurdValue(u);
}

SurdValue mfn_at_half_closed_form(int n) {
    if (n < 3) throw std::invalid_argument("mfn_at_half_closed_form: requires n >= 3");
    const Rational inv(1, n);
    return SurdValue(Rational(1), Rational(-1), Rational(1, 4) + inv - inv * inv);
}

CounterexampleReport verify_counterexample(int n) {
    if (n < 3) throw std::invalid_argument("verify_counterexample: requires n >= 3");
    const PiecewiseLinear hat = PiecewiseLinear::hat();
    const PiecewiseLinear fn = counterexample_sequence(n);
    const Rational half(1, 2);
    const Rational dn = half - Rational(1, 4) / (Rational(n) * n);

    CounterexampleReport report;
    report.n = n;
    report.dn = dn;
    report.mf_at_half = maximal_function(hat, half);
    report.mf_at_dn = maximal_function(hat, dn);
    report.mfn_at_half = maximal_function(fn, half);
    report.mfn_at_dn = maximal_function(fn, dn);

    // Two independent routes to each number; disagreement is a hard failure.
    if (compare(report.mfn_at_half, mfn_at_half_closed_form(n)) != 0)
        throw std::logic_error("verify_counterexample: engine Mf_n(1/2) != closed form");
    if (compare(report.mf_at_half, mf_closed_form(half)) != 0 ||
        compare(report.mf_at_dn, mf_closed_form(dn)) != 0)
        throw std::logic_error("verify_counterexample: engine Mf != closed form");

    report.inequality_holds = compare(report.mfn_at_dn, report.mfn_at_half) <= 0;

    const Rational gap = half - dn;  // 1/(4n^2)
    const unsigned bits = 200;
    const RationalInterval mf_half = report.mf_at_half.enclosure(bits);
    const RationalInterval mf_dn = report.mf_at_dn.enclosure(bits);
    const RationalInterval mfn_half = report.mfn_at_half.enclosure(bits);
    const RationalInterval mfn_dn = report.mfn_at_dn.enclosure(bits);
    report.quotient = interval_mid_double(div_positive(mf_dn - mf_half, gap));
    report.norm_lower_bound =
        interval_mid_double(div_positive(abs_interval(mfn_half - mf_half - (mfn_dn - mf_dn)), gap));
    return report;
}

bool verify_periodic_lemma(const PiecewiseLinear& f, const Rational& x, int periods_beyond,
                           std::size_t grid_count) {
    if (periods_beyond < 1)
        throw std::invalid_argument("verify_periodic_lemma: periods_beyond must be >= 1");
    if (grid_count < 100)
        throw std::invalid_argument("verify_periodic_lemma: grid_count must be >= 100");
    const Rational r_max = Rational(1 + periods_beyond) * f.period();
    const double brute = maximal_function_brute_force(f, x, r_max, grid_count);
    const double exact_hi = to_double(maximal_function(f, x).enclosure(200).hi);
    return brute <= exact_hi + 1e-12;
}

std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

PiecewiseLinear random_piecewise_linear(std::mt19937_64& rng) {
    std::vector<std::pair<Rational, Rational>> pts;
    auto random_value = [&rng]() {
        return Rational(static_cast<long long>(rand_below(rng, 513)) - 256, 256);
    };
    for (int j = 0; j < 8; ++j)
        if (rand_below(rng, 2) == 0) pts.emplace_back(Rational(j, 4), random_value());
    while (pts.size() < 2) {
        const Rational t(static_cast<long long>(rand_below(rng, 8)), 4);
        bool present = false;
        for (const auto& [bt, bv] : pts) present = present || bt == t;
        if (!present) pts.emplace_back(t, random_value());
    }
    std::sort(pts.begin(), pts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return PiecewiseLinear(2, std::move(pts));
}

Theorem1Report verify_theorem1_on_line(std::size_t trials, std::uint64_t seed,
                                       std::size_t grid_count) {
    if (trials < 1) throw std::invalid_argument("verify_theorem1_on_line: trials must be >= 1");
    if (grid_count < 2)
        throw std::invalid_argument("verify_theorem1_on_line: grid_count must be >= 2");

    Theorem1Report report;
    report.trials = trials;
    report.seed = seed;
    report.grid_count = grid_count;
    report.c1 = boundedness_constant(Rational(1), Rational(1)).value_hi;  // 25
    const double c1 = to_double(report.c1);

    std::mt19937_64 rng(seed);
    std::vector<Rational> grid;
    grid.reserve(grid_count);
    for (std::size_t i = 0; i < grid_count; ++i)
        grid.emplace_back(Rational(2) * Rational(static_cast<long long>(i), 1) /
                          Rational(static_cast<long long>(grid_count)));

    constexpr double kTol = 1e-9;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        PiecewiseLinear f = random_piecewise_linear(rng);
        std::vector<double> alpha(grid_count);
        for (double& a : alpha) a = static_cast<double>(rand_below(rng, 17)) / 16.0;

        // Normalize the variable-exponent grid norm to ~1 (rational scaling
        // keeps the engine exact; the norm scales linearly).
        std::vector<double> f_vals(grid_count);
        for (std::size_t i = 0; i < grid_count; ++i) f_vals[i] = to_double(f(grid[i]));
        const HolderNormReport raw = holder_norm_on_line(grid, f_vals, alpha);
        if (raw.norm > 0) f = f.affine(dyadic_scale_approx(raw.norm), Rational(0));

        for (std::size_t i = 0; i < grid_count; ++i) f_vals[i] = to_double(f(grid[i]));
        const HolderNormReport norm_f = holder_norm_on_line(grid, f_vals, alpha);

        std::vector<SurdValue> mf(grid_count);
        std::vector<double> mf_vals(grid_count);
        for (std::size_t i = 0; i < grid_count; ++i) {
            mf[i] = maximal_function(f, grid[i]);
            mf_vals[i] = mf[i].to_double();
        }
        const HolderNormReport norm_mf = holder_norm_on_line(grid, mf_vals, alpha);

        if (norm_f.norm > 0)
            report.max_norm_ratio = std::max(report.max_norm_ratio, norm_mf.norm / norm_f.norm);
        if (norm_mf.norm > c1 * norm_f.norm + kTol)
            report.violations.push_back(
                {trial, "holder_norm", norm_mf.norm, c1 * norm_f.norm, Rational(0), Rational(0)});

        // ||Mf||_C <= ||f||_C, exact (sup of |f| sits at a breakpoint).
        const Rational sup_f = f.max_abs();
        for (std::size_t i = 0; i < grid_count; ++i) {
            if (compare(mf[i], SurdValue(sup_f)) > 0) {
                report.violations.push_back({trial, "sup_contraction", mf_vals[i],
                                             to_double(sup_f), grid[i], grid[i]});
                break;
            }
        }

        // Two-point inequality Mf(y) >= Mf(x) - C1 min{a^a(x), a^a(y)}.
        for (int pair = 0; pair < 10; ++pair) {
            const std::size_t i = static_cast<std::size_t>(rand_below(rng, grid_count));
            std::size_t j = static_cast<std::size_t>(rand_below(rng, grid_count - 1));
            if (j >= i) ++j;
            const double a = std::abs(to_double(grid[i] - grid[j]));
            const double m = std::min(std::pow(a, alpha[i]), std::pow(a, alpha[j]));
            ++report.two_point_checks;
            if (m > 0)
                report.max_two_point_ratio =
                    std::max(report.max_two_point_ratio, std::abs(mf_vals[i] - mf_vals[j]) / m);
            const double budget = c1 * std::max(norm_f.norm, 1.0) * m;
            if (mf_vals[j] < mf_vals[i] - budget - kTol)
                report.violations.push_back(
                    {trial, "two_point", mf_vals[j], mf_vals[i] - budget, grid[i], grid[j]});
        }
    }
    return report;
}

ContinuityReport verify_theorem2_continuity(const PiecewiseLinear& f,
                                            const std::vector<Rational>& shifts,
                                            const Rational& alpha_const,
                                            const Rational& beta_const,
                                            const std::vector<Rational>& grid) {
    if (alpha_const <= 0 || alpha_const > 1)
        throw std::invalid_argument("verify_theorem2_continuity: alpha must be in (0, 1]");
    if (beta_const < 0 || beta_const >= alpha_const)
        throw std::invalid_argument("verify_theorem2_continuity: requires 0 <= beta < alpha");
    if (grid.size() < 2)
        throw std::invalid_argument("verify_theorem2_continuity: need at least 2 grid points");

    ContinuityReport report;
    report.alpha = alpha_const;
    report.beta = beta_const;
    report.q = to_double(beta_const / alpha_const);

    const std::size_t m = grid.size();
    const std::vector<double> alpha_vec(m, to_double(alpha_const));
    const std::vector<double> beta_vec(m, to_double(beta_const));
    constexpr unsigned kBits = 200;

    std::vector<Rational> mf(m);
    std::vector<double> mf_d(m);
    for (std::size_t i = 0; i < m; ++i) {
        const RationalInterval enc = maximal_function(f, grid[i]).enclosure(kBits);
        mf[i] = enc.mid();
        mf_d[i] = to_double(mf[i]);
    }
    double n_bound = holder_norm_on_line(grid, mf_d, alpha_vec).norm;

    struct PerShift {
        Rational shift;
        std::vector<Rational> vals;
    };
    std::vector<PerShift> runs;
    runs.reserve(shifts.size());
    for (const Rational& shift : shifts) {
        const PiecewiseLinear fk = f.affine(Rational(1), shift);
        PerShift run{shift, std::vector<Rational>(m)};
        std::vector<double> vals_d(m);
        for (std::size_t i = 0; i < m; ++i) {
            run.vals[i] = maximal_function(fk, grid[i]).enclosure(kBits).mid();
            vals_d[i] = to_double(run.vals[i]);
        }
        n_bound = std::max(n_bound, holder_norm_on_line(grid, vals_d, alpha_vec).norm);
        runs.push_back(std::move(run));
    }
    report.n_bound = n_bound;

    constexpr double kTol = 1e-9;
    report.all_bounds_hold = true;
    report.distances_decreasing = true;
    double prev_norm = 0.0;
    for (std::size_t k = 0; k < runs.size(); ++k) {
        ContinuityRow row;
        row.shift = runs[k].shift;
        std::vector<double> diff(m);
        for (std::size_t i = 0; i < m; ++i) {
            diff[i] = to_double(runs[k].vals[i] - mf[i]);
            row.sup_diff = std::max(row.sup_diff, std::abs(diff[i]));
        }
        row.seminorm_beta = holder_norm_on_line(grid, diff, beta_vec).seminorm;
        row.norm_beta = row.sup_diff + row.seminorm_beta;
        row.bound = continuity_rate_bound(n_bound, report.q, row.sup_diff);
        row.bound_holds = row.seminorm_beta <= row.bound + kTol;
        report.all_bounds_hold = report.all_bounds_hold && row.bound_holds;
        if (k > 0 && row.norm_beta > prev_norm + 1e-12) report.distances_decreasing = false;
        prev_norm = row.norm_beta;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace maxop
