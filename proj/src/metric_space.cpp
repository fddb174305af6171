#include "maxop/metric_space.hpp"

#include <algorithm>

namespace maxop {

FiniteMetricMeasureSpace::FiniteMetricMeasureSpace(std::vector<std::vector<Rational>> distances,
                                                   std::vector<Rational> masses)
    : distances_(std::move(distances)), masses_(std::move(masses)) {
    const std::size_t n = masses_.size();
    if (n == 0) throw std::invalid_argument("metric space: no points");
    if (distances_.size() != n)
        throw std::invalid_argument("metric space: distance matrix size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (distances_[i].size() != n)
            throw std::invalid_argument("metric space: distance matrix not square");
        if (distances_[i][i] != 0) throw std::invalid_argument("metric space: nonzero diagonal");
        if (masses_[i] <= 0) throw std::invalid_argument("metric space: masses must be > 0");
        for (std::size_t j = 0; j < n; ++j) {
            if (distances_[i][j] != distances_[j][i])
                throw std::invalid_argument("metric space: asymmetric distances");
            if (i != j && distances_[i][j] <= 0)
                throw std::invalid_argument("metric space: off-diagonal distances must be > 0");
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (distances_[i][k] > distances_[i][j] + distances_[j][k])
                    throw std::invalid_argument("metric space: triangle inequality violated");
}

FiniteMetricMeasureSpace FiniteMetricMeasureSpace::line(const std::vector<Rational>& positions,
                                                        std::vector<Rational> masses) {
    const std::size_t n = positions.size();
    std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d[i][j] = abs(positions[i] - positions[j]);
    return FiniteMetricMeasureSpace(std::move(d), std::move(masses));
}

FiniteMetricMeasureSpace FiniteMetricMeasureSpace::simplex(std::size_t n) {
    std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n, Rational(1)));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
    return FiniteMetricMeasureSpace(std::move(d), std::vector<Rational>(n, Rational(1)));
}

Rational FiniteMetricMeasureSpace::total_mass() const {
    Rational sum(0);
    for (const Rational& m : masses_) sum += m;
    return sum;
}

Rational FiniteMetricMeasureSpace::diameter() const {
    Rational best(0);
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            if (distances_[i][j] > best) best = distances_[i][j];
    return best;
}

Rational FiniteMetricMeasureSpace::ball_measure(std::size_t x, const Rational& r) const {
    if (r <= 0) throw std::invalid_argument("ball_measure: radius must be > 0");
    Rational sum(0);
    for (std::size_t y = 0; y < size(); ++y)
        if (distances_[x][y] < r) sum += masses_[y];
    return sum;
}

std::vector<Rational> FiniteMetricMeasureSpace::distance_classes(std::size_t x) const {
    std::vector<Rational> ds(distances_[x]);
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    return ds;
}

Rational discrete_maximal(const FiniteMetricMeasureSpace& space,
                          const std::vector<Rational>& values, std::size_t x) {
    if (values.size() != space.size())
        throw std::invalid_argument("discrete_maximal: value count mismatch");
    // The open ball {d(x,.) < r} is constant for r in (d_k, d_{k+1}]; its
    // composition there is {d(x,.) <= d_k}. Enumerate those compositions.
    const std::vector<Rational> ds = space.distance_classes(x);
    Rational best(0);
    bool first = true;
    for (const Rational& dk : ds) {
        Rational mass(0);
        Rational weighted(0);
        for (std::size_t y = 0; y < space.size(); ++y) {
            if (space.distance(x, y) <= dk) {
                mass += space.mass(y);
                weighted += space.mass(y) * abs(values[y]);
            }
        }
        const Rational avg = weighted / mass;
        if (first || avg > best) best = avg;
        first = false;
    }
    return best;
}

namespace {

struct Candidate {
    std::size_t x;
    Rational r;
    Rational epsilon;       // in (0, 1)
    Rational annulus_mass;  // mass with distance in [r(1-eps), r)
    Rational ball_mass;
};

std::vector<Candidate> critical_set(const FiniteMetricMeasureSpace& space) {
    std::vector<Candidate> out;
    for (std::size_t x = 0; x < space.size(); ++x) {
        const std::vector<Rational> ds = space.distance_classes(x);
        for (std::size_t j = 1; j < ds.size(); ++j) {
            // Representative radius for the composition class (d_j, d_{j+1}];
            // beyond the largest distance the representative is 2*d_max, so
            // that the whole critical set is covariant under distance scaling
            // and bestK is scale-invariant.
            const Rational r =
                j + 1 < ds.size() ? Rational((ds[j] + ds[j + 1]) / 2) : Rational(2 * ds[j]);
            const Rational ball = space.ball_measure(x, r);
            for (std::size_t k = 1; k <= j; ++k) {
                // Smallest epsilon whose annulus [r(1-eps), r) reaches d_k.
                const Rational eps = 1 - ds[k] / r;
                Rational annulus(0);
                for (std::size_t y = 0; y < space.size(); ++y) {
                    const Rational& d = space.distance(x, y);
                    if (d >= ds[k] && d < r) annulus += space.mass(y);
                }
                out.push_back(Candidate{x, r, eps, annulus, ball});
            }
        }
    }
    return out;
}

}  // namespace

AnnularDecayReport annular_decay_k(const FiniteMetricMeasureSpace& space, const Rational& delta,
                                   unsigned bits) {
    if (delta <= 0 || delta > 1)
        throw std::invalid_argument("annular_decay_k: delta must be in (0, 1]");
    AnnularDecayReport report;
    report.delta = delta;
    report.sup_ratio_lo = 0;
    report.sup_ratio_hi = 0;

    const std::vector<Candidate> candidates = critical_set(space);
    if (delta == 1) {
        report.precision_bits = 0;
        for (const Candidate& c : candidates) {
            const Rational ratio = c.annulus_mass / (c.epsilon * c.ball_mass);
            if (!report.has_witness || ratio > report.sup_ratio_lo) {
                report.sup_ratio_lo = report.sup_ratio_hi = ratio;
                report.witness = {c.x, c.r, c.epsilon};
                report.has_witness = true;
            }
        }
        report.exact = true;
    } else if (!candidates.empty()) {
        // ratio = annulus / (eps^delta * ball). Compare by intervals around
        // eps^delta, refining; if two ratios stay inseparable, settle exactly:
        // with delta = p/q,
        //   A1/(e1^d B1) <=> A2/(e2^d B2)  iff  (A1 B2)^q e2^p <=> (A2 B1)^q e1^p.
        const long p = numerator(delta).convert_to<long>();
        const long q = denominator(delta).convert_to<long>();
        auto ratio_cmp = [&](const Candidate& a, const Candidate& b) -> int {
            for (unsigned prec = bits; prec <= 4 * bits; prec *= 2) {
                const RationalInterval ea = pow_interval(a.epsilon, delta, prec);
                const RationalInterval eb = pow_interval(b.epsilon, delta, prec);
                const RationalInterval ra{a.annulus_mass / (ea.hi * a.ball_mass),
                                          a.annulus_mass / (ea.lo * a.ball_mass)};
                const RationalInterval rb{b.annulus_mass / (eb.hi * b.ball_mass),
                                          b.annulus_mass / (eb.lo * b.ball_mass)};
                if (ra.hi < rb.lo) return -1;
                if (rb.hi < ra.lo) return 1;
            }
            const Rational lhs =
                pow_rational(a.annulus_mass * b.ball_mass, q) * pow_rational(b.epsilon, p);
            const Rational rhs =
                pow_rational(b.annulus_mass * a.ball_mass, q) * pow_rational(a.epsilon, p);
            return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
        };
        std::size_t best_idx = 0;
        for (std::size_t i = 1; i < candidates.size(); ++i)
            if (ratio_cmp(candidates[i], candidates[best_idx]) > 0) best_idx = i;
        const Candidate& best = candidates[best_idx];
        const RationalInterval e = pow_interval(best.epsilon, delta, bits);
        report.sup_ratio_lo = best.annulus_mass / (e.hi * best.ball_mass);
        report.sup_ratio_hi = best.annulus_mass / (e.lo * best.ball_mass);
        report.witness = {best.x, best.r, best.epsilon};
        report.has_witness = true;
        report.precision_bits = bits;
        report.exact = report.sup_ratio_lo == report.sup_ratio_hi;
    }

    if (report.sup_ratio_hi < 1) {
        report.best_k = 1;
        report.floored = true;
    } else {
        report.best_k = report.sup_ratio_hi;
        report.floored = false;
    }
    return report;
}

}  // namespace maxop
