#include "maxop/holder.hpp"

#include <cmath>
#include <stdexcept>

namespace maxop {

HolderNormReport holder_norm(const std::vector<double>& values, const std::vector<double>& alpha,
                             const std::function<double(std::size_t, std::size_t)>& distance) {
    const std::size_t n = values.size();
    if (n < 2) throw std::invalid_argument("holder_norm: need at least 2 points");
    if (alpha.size() != n) throw std::invalid_argument("holder_norm: exponent count mismatch");
    for (double a : alpha)
        if (a < 0.0 || a > 1.0)
            throw std::invalid_argument("holder_norm: exponents must lie in [0, 1]");

    HolderNormReport report;
    report.point_count = n;
    for (double v : values) report.sup_norm = std::max(report.sup_norm, std::abs(v));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const double d = distance(i, j);
            const double ratio = std::abs(values[i] - values[j]) / std::pow(d, alpha[i]);
            if (ratio > report.seminorm) {
                report.seminorm = ratio;
                report.witness = {i, j};
            }
        }
    }
    report.norm = report.sup_norm + report.seminorm;
    return report;
}

HolderNormReport holder_norm_on_line(const std::vector<Rational>& points,
                                     const std::vector<double>& values,
                                     const std::vector<double>& alpha) {
    if (points.size() != values.size())
        throw std::invalid_argument("holder_norm_on_line: point/value count mismatch");
    return holder_norm(values, alpha, [&points](std::size_t i, std::size_t j) {
        return std::abs(to_double(points[i] - points[j]));
    });
}

BoundednessConstant boundedness_constant(const Rational& k, const Rational& delta,
                                         unsigned bits) {
    if (k < 1) throw std::invalid_argument("boundedness_constant: K must be >= 1");
    if (delta <= 0 || delta > 1)
        throw std::invalid_argument("boundedness_constant: delta must be in (0, 1]");
    BoundednessConstant out;
    out.k = k;
    out.delta = delta;
    if (delta == 1) {
        const Rational c = 1 + 24 * k;
        out.value_lo = out.value_hi = c > 7 ? c : Rational(7);
        out.exact = true;
        out.precision_bits = 0;
        return out;
    }
    const RationalInterval two_pow = pow_interval(Rational(2), delta, bits);
    Rational lo = 1 + 12 * k * two_pow.lo;
    Rational hi = 1 + 12 * k * two_pow.hi;
    if (lo < 7) lo = 7;
    if (hi < 7) hi = 7;
    out.value_lo = lo;
    out.value_hi = hi;
    out.exact = lo == hi;
    out.precision_bits = bits;
    return out;
}

double continuity_rate_bound(double n, double beta_over_alpha_sup, double sup_diff) {
    if (n < 0) throw std::invalid_argument("continuity_rate_bound: N must be >= 0");
    if (sup_diff < 0) throw std::invalid_argument("continuity_rate_bound: sup_diff must be >= 0");
    if (beta_over_alpha_sup < 0 || beta_over_alpha_sup >= 1)
        throw std::invalid_argument("continuity_rate_bound: requires sup beta/alpha in [0, 1)");
    return std::pow(2.0 * n, beta_over_alpha_sup) *
           std::pow(2.0 * sup_diff, 1.0 - beta_over_alpha_sup);
}

}  // namespace maxop
