#include "maxop/piecewise_linear.hpp"

#include <algorithm>

namespace maxop {

namespace {

// True iff (t1, v1) lies on the segment from (t0, v0) to (t2, v2).
bool collinear(const Rational& t0, const Rational& v0, const Rational& t1, const Rational& v1,
               const Rational& t2, const Rational& v2) {
    return (v1 - v0) * (t2 - t1) == (v2 - v1) * (t1 - t0);
}

}  // namespace

PiecewiseLinear::PiecewiseLinear(const Rational& period,
                                 std::vector<std::pair<Rational, Rational>> points)
    : period_(period) {
    if (period_ <= 0) throw std::invalid_argument("PiecewiseLinear: period must be > 0");
    if (points.empty()) throw std::invalid_argument("PiecewiseLinear: no breakpoints");
    for (std::size_t i = 1; i < points.size(); ++i)
        if (points[i - 1].first >= points[i].first)
            throw std::invalid_argument("PiecewiseLinear: breakpoints must be strictly increasing");
    if (points.back().first - points.front().first >= period_)
        throw std::invalid_argument("PiecewiseLinear: breakpoints must span less than one period");

    // Reduce breakpoints mod T into [0, T); distinct points in a window of
    // length T stay distinct.
    for (auto& [t, v] : points) t -= Rational(floor_rational(t / period_)) * period_;
    std::sort(points.begin(), points.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    // Drop breakpoints where the function is affine across (cyclically).
    bool removed = true;
    while (removed && points.size() > 1) {
        removed = false;
        for (std::size_t i = 0; i < points.size(); ++i) {
            const std::size_t n = points.size();
            const auto& cur = points[i];
            auto prev = points[(i + n - 1) % n];
            auto next = points[(i + 1) % n];
            if (i == 0) prev.first -= period_;
            if (i == n - 1) next.first += period_;
            if (collinear(prev.first, prev.second, cur.first, cur.second, next.first,
                          next.second)) {
                points.erase(points.begin() + static_cast<std::ptrdiff_t>(i));
                removed = true;
                break;
            }
        }
    }

    // A single surviving breakpoint means the function is constant; pin it
    // to 0 so equal constants compare equal.
    if (points.size() == 1) points[0].first = 0;

    breakpoints_.reserve(points.size());
    values_.reserve(points.size());
    for (auto& [t, v] : points) {
        breakpoints_.push_back(std::move(t));
        values_.push_back(std::move(v));
    }
    build_cumulative();
}

PiecewiseLinear PiecewiseLinear::hat() {
    return PiecewiseLinear(2, {{Rational(-1), Rational(1)}, {Rational(0), Rational(0)}});
}

PiecewiseLinear PiecewiseLinear::constant(const Rational& c, const Rational& period) {
    return PiecewiseLinear(period, {{Rational(0), c}});
}

Rational PiecewiseLinear::segment_end(std::size_t i) const {
    return i + 1 < breakpoints_.size() ? breakpoints_[i + 1] : breakpoints_[0] + period_;
}

Rational PiecewiseLinear::segment_end_value(std::size_t i) const {
    return i + 1 < values_.size() ? values_[i + 1] : values_[0];
}

void PiecewiseLinear::build_cumulative() {
    cumulative_.assign(breakpoints_.size(), Rational(0));
    Rational acc(0);
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        cumulative_[i] = acc;
        acc += (segment_end(i) - breakpoints_[i]) * (values_[i] + segment_end_value(i)) / 2;
    }
    period_integral_ = acc;
}

Rational PiecewiseLinear::operator()(const Rational& t) const {
    const Rational u = t - breakpoints_[0];
    const Rational frac = breakpoints_[0] + (u - Rational(floor_rational(u / period_)) * period_);
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), frac);
    const std::size_t i = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
    const Rational t0 = breakpoints_[i];
    const Rational t1 = segment_end(i);
    const Rational v0 = values_[i];
    const Rational v1 = segment_end_value(i);
    if (frac == t0) return v0;
    return v0 + (v1 - v0) * (frac - t0) / (t1 - t0);
}

PiecewiseLinear PiecewiseLinear::affine(const Rational& scale, const Rational& shift) const {
    std::vector<std::pair<Rational, Rational>> pts;
    pts.reserve(breakpoints_.size());
    for (std::size_t i = 0; i < breakpoints_.size(); ++i)
        pts.emplace_back(breakpoints_[i], scale * values_[i] + shift);
    return PiecewiseLinear(period_, std::move(pts));
}

PiecewiseLinear PiecewiseLinear::absolute() const {
    std::vector<std::pair<Rational, Rational>> pts;
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        pts.emplace_back(breakpoints_[i], abs(values_[i]));
        const Rational v0 = values_[i];
        const Rational v1 = segment_end_value(i);
        if (v0.sign() * v1.sign() < 0) {
            const Rational t0 = breakpoints_[i];
            const Rational t1 = segment_end(i);
            pts.emplace_back(t0 - v0 * (t1 - t0) / (v1 - v0), Rational(0));
        }
    }
    return PiecewiseLinear(period_, std::move(pts));
}

Rational PiecewiseLinear::antiderivative(const Rational& t) const {
    const Rational u = t - breakpoints_[0];
    const Rational periods(floor_rational(u / period_));
    const Rational frac = breakpoints_[0] + (u - periods * period_);
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), frac);
    const std::size_t i = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
    const Rational t0 = breakpoints_[i];
    const Rational t1 = segment_end(i);
    const Rational v0 = values_[i];
    const Rational v1 = segment_end_value(i);
    const Rational dt = frac - t0;
    const Rational slope = (v1 - v0) / (t1 - t0);
    return periods * period_integral_ + cumulative_[i] + v0 * dt + slope * dt * dt / 2;
}

Rational PiecewiseLinear::integral(const Rational& a, const Rational& b) const {
    if (a > b) throw std::invalid_argument("integral: requires a <= b");
    return antiderivative(b) - antiderivative(a);
}

Rational PiecewiseLinear::max_abs() const {
    Rational best(0);
    for (const Rational& v : values_) {
        Rational a = abs(v);
        if (a > best) best = a;
    }
    return best;
}

Rational PiecewiseLinear::max_abs_slope() const {
    Rational best(0);
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        Rational s = abs((segment_end_value(i) - values_[i]) / (segment_end(i) - breakpoints_[i]));
        if (s > best) best = s;
    }
    return best;
}

PiecewiseLinear operator+(const PiecewiseLinear& f, const PiecewiseLinear& g) {
    if (f.period() != g.period())
        throw std::invalid_argument("operator+: periods must be equal");
    std::vector<Rational> ts;
    ts.reserve(f.breakpoints().size() + g.breakpoints().size());
    ts.insert(ts.end(), f.breakpoints().begin(), f.breakpoints().end());
    ts.insert(ts.end(), g.breakpoints().begin(), g.breakpoints().end());
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    std::vector<std::pair<Rational, Rational>> pts;
    pts.reserve(ts.size());
    for (const Rational& t : ts) pts.emplace_back(t, f(t) + g(t));
    return PiecewiseLinear(f.period(), std::move(pts));
}

}  // namespace maxop
