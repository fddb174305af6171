#include "maxop/maximal.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace maxop {

RadialAverageProfile::RadialAverageProfile(Rational center, Rational value_at_zero,
                                           std::vector<ProfilePiece> pieces)
    : center_(std::move(center)),
      value_at_zero_(std::move(value_at_zero)),
      pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw std::invalid_argument("RadialAverageProfile: no pieces");
    if (pieces_.front().r_lo != 0)
        throw std::invalid_argument("RadialAverageProfile: pieces must start at r = 0");
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (pieces_[i].r_lo >= pieces_[i].r_hi)
            throw std::invalid_argument("RadialAverageProfile: empty piece");
        if (i > 0 && pieces_[i - 1].r_hi != pieces_[i].r_lo)
            throw std::invalid_argument("RadialAverageProfile: pieces must tile contiguously");
    }
}

Rational RadialAverageProfile::at(const Rational& r) const {
    if (r < 0 || r > r_max()) throw std::invalid_argument("profile evaluation out of range");
    if (r == 0) return value_at_zero_;
    auto it = std::lower_bound(pieces_.begin(), pieces_.end(), r,
                               [](const ProfilePiece& p, const Rational& v) { return p.r_hi < v; });
    return it->at(r);
}

Rational average_at(const PiecewiseLinear& f, const Rational& x, const Rational& r) {
    if (r < 0) throw std::invalid_argument("average_at: negative radius");
    const PiecewiseLinear g = f.absolute();
    if (r == 0) return g(x);
    return g.integral(x - r, x + r) / (2 * r);
}

RadialAverageProfile radial_average_profile(const PiecewiseLinear& f, const Rational& x,
                                            const Rational& r_max) {
    if (r_max <= 0) throw std::invalid_argument("radial_average_profile: r_max must be > 0");
    const PiecewiseLinear g = f.absolute();
    const Rational period = g.period();

    // Radii at which x-r or x+r meets a breakpoint of |f|, unrolled over all
    // period copies reaching into [x - r_max, x + r_max].
    std::set<Rational> radii;
    for (const Rational& t : g.breakpoints()) {
        const Int k_lo = floor_rational((x - r_max - t) / period);
        const Int k_hi = floor_rational((x + r_max - t) / period) + 1;
        for (Int k = k_lo; k <= k_hi; ++k) {
            const Rational shifted = t + Rational(k) * period;
            const Rational right = shifted - x;
            if (right > 0 && right < r_max) radii.insert(right);
            const Rational left = x - shifted;
            if (left > 0 && left < r_max) radii.insert(left);
        }
    }

    std::vector<Rational> bounds;
    bounds.reserve(radii.size() + 2);
    bounds.emplace_back(0);
    bounds.insert(bounds.end(), radii.begin(), radii.end());
    bounds.push_back(r_max);

    // On each radius interval, I(r) = integral of |f| over [x-r, x+r] is a
    // single quadratic; recover it exactly from three evaluations.
    std::vector<ProfilePiece> pieces;
    pieces.reserve(bounds.size() - 1);
    auto windowed = [&](const Rational& r) { return g.integral(x - r, x + r); };
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
        const Rational& a = bounds[i];
        const Rational& b = bounds[i + 1];
        const Rational m = (a + b) / 2;
        const Rational ia = windowed(a);
        const Rational im = windowed(m);
        const Rational ib = windowed(b);
        const Rational d_ab = (ib - ia) / (b - a);
        const Rational d_am = (im - ia) / (m - a);
        const Rational quad = (d_ab - d_am) / (b - m);
        const Rational lin = d_am - quad * (m + a);
        const Rational cst = ia - lin * a - quad * a * a;
        ProfilePiece piece{a, b, cst / 2, lin / 2, quad / 2};
        // A crossing radius that leaves the quadratic unchanged is not a real
        // boundary; keep the piece list minimal.
        if (!pieces.empty() && pieces.back().c_neg == piece.c_neg &&
            pieces.back().c_zero == piece.c_zero && pieces.back().c_one == piece.c_one) {
            pieces.back().r_hi = piece.r_hi;
        } else {
            pieces.push_back(std::move(piece));
        }
    }
    return RadialAverageProfile(x, g(x), std::move(pieces));
}

ProfileMax profile_max(const RadialAverageProfile& profile) {
    ProfileMax best{SurdValue(profile.value_at_zero()), SurdValue(Rational(0))};
    auto offer = [&best](SurdValue value, SurdValue radius) {
        const int c = compare(value, best.value);
        if (c > 0 || (c == 0 && compare(radius, best.radius) < 0)) {
            best.value = std::move(value);
            best.radius = std::move(radius);
        }
    };
    for (const ProfilePiece& piece : profile.pieces()) {
        if (piece.r_lo > 0) offer(SurdValue(piece.at(piece.r_lo)), SurdValue(piece.r_lo));
        offer(SurdValue(piece.at(piece.r_hi)), SurdValue(piece.r_hi));
        // Interior maximum only on strictly concave pieces.
        if (piece.c_neg < 0 && piece.c_one < 0) {
            const Rational r_star_sq = piece.c_neg / piece.c_one;
            if (piece.r_lo * piece.r_lo <= r_star_sq && r_star_sq <= piece.r_hi * piece.r_hi)
                offer(SurdValue(piece.c_zero, Rational(-2), piece.c_neg * piece.c_one),
                      SurdValue::sqrt_of(r_star_sq));
        }
    }
    return best;
}

SurdValue maximal_function(const PiecewiseLinear& f, const Rational& x) {
    return profile_max(radial_average_profile(f, x, f.period())).value;
}

double maximal_function_brute_force(const PiecewiseLinear& f, const Rational& x,
                                    const Rational& r_max, std::size_t grid_count) {
    if (r_max <= 0) throw std::invalid_argument("brute force: r_max must be > 0");
    if (grid_count < 2) throw std::invalid_argument("brute force: grid_count must be >= 2");
    const PiecewiseLinear g = f.absolute();
    const Rational step = r_max / Rational(grid_count - 1);

    // All evaluation points are x +- i*step = (xn +- i*sn) / d: the whole
    // search runs on integer kernels over the common denominator d, with one
    // rational reconstruction at the end. Exact throughout.
    const Int dx = denominator(x);
    const Int dstep = denominator(step);
    const Int d = boost::multiprecision::lcm(dx, dstep);
    const Int xn = numerator(x) * (d / dx);
    const Int sn = numerator(step) * (d / dstep);

    // Unroll the antiderivative of g over [x - r_max, x + r_max] as
    // quadratics G(t) = c0 + c1 t + c2 t^2 per segment copy.
    std::vector<Rational> bounds;
    std::vector<Rational> c0s, c1s, c2s;
    {
        const Rational t_lo = x - r_max;
        const Rational t_hi = x + r_max;
        const Rational period = g.period();
        const Rational t0_base = g.breakpoints().front();
        const Int k_lo = floor_rational((t_lo - t0_base) / period) - 1;
        const Int k_hi = floor_rational((t_hi - t0_base) / period) + 1;
        Rational acc(0);
        for (Int k = k_lo; k <= k_hi; ++k) {
            for (std::size_t i = 0; i < g.breakpoint_count(); ++i) {
                const Rational t0 = g.breakpoints()[i] + Rational(k) * period;
                const Rational t1 = (i + 1 < g.breakpoint_count()
                                         ? g.breakpoints()[i + 1]
                                         : g.breakpoints()[0] + period) +
                                    Rational(k) * period;
                const Rational v0 = g.values()[i];
                const Rational v1 = i + 1 < g.breakpoint_count() ? g.values()[i + 1]
                                                                 : g.values()[0];
                const Rational slope = (v1 - v0) / (t1 - t0);
                const Rational half_slope = slope / 2;
                bounds.push_back(t0);
                c2s.push_back(half_slope);
                c1s.push_back(v0 - slope * t0);
                c0s.push_back(acc - v0 * t0 + half_slope * t0 * t0);
                acc += (t1 - t0) * (v0 + v1) / 2;
            }
        }
        bounds.push_back(g.breakpoints().front() + Rational(k_hi + 1) * period);
    }

    // Shared denominator dg for the coefficients; per-piece integer
    // polynomials P(n) = C0 d^2 + C1 d n + C2 n^2 with G(n/d) = P(n)/(dg d^2).
    Int dg(1);
    for (std::size_t j = 0; j < c0s.size(); ++j) {
        dg = boost::multiprecision::lcm(dg, denominator(c0s[j]));
        dg = boost::multiprecision::lcm(dg, denominator(c1s[j]));
        dg = boost::multiprecision::lcm(dg, denominator(c2s[j]));
    }
    const std::size_t m = c0s.size();
    std::vector<Int> p0(m), p1(m), p2(m);
    const Int d2 = d * d;
    for (std::size_t j = 0; j < m; ++j) {
        p0[j] = numerator(c0s[j]) * (dg / denominator(c0s[j])) * d2;
        p1[j] = numerator(c1s[j]) * (dg / denominator(c1s[j])) * d;
        p2[j] = numerator(c2s[j]) * (dg / denominator(c2s[j]));
    }
    // n/d >= bounds[j]  iff  n * bden[j] >= bnum[j]
    std::vector<Int> bnum(bounds.size()), bden(bounds.size());
    for (std::size_t j = 0; j < bounds.size(); ++j) {
        bnum[j] = numerator(bounds[j]) * d;
        bden[j] = denominator(bounds[j]);
    }
    auto eval = [&](std::size_t j, const Int& n) { return p0[j] + (p1[j] + p2[j] * n) * n; };

    // Two monotone cursors: the right endpoint walks up the pieces, the left
    // endpoint walks down. A(i) = I(i) * const / i, so the running maximum
    // needs only the cross comparison I(i) * i_best > I_best * i.
    std::size_t jr = 0, jl = 0;
    auto locate = [&](const Int& n) {
        std::size_t j = 0;
        while (j + 1 < m && n * bden[j + 1] >= bnum[j + 1]) ++j;
        return j;
    };
    jr = jl = locate(xn);
    Int nr = xn, nl = xn;
    Int best_num(-1);
    std::size_t best_i = 1;
    for (std::size_t i = 1; i < grid_count; ++i) {
        nr += sn;
        nl -= sn;
        while (jr + 1 < m && nr * bden[jr + 1] >= bnum[jr + 1]) ++jr;
        while (jl > 0 && nl * bden[jl] < bnum[jl]) --jl;
        const Int integral_num = eval(jr, nr) - eval(jl, nl);
        if (best_num < 0 || integral_num * static_cast<long long>(best_i) >
                                best_num * static_cast<long long>(i)) {
            best_num = integral_num;
            best_i = i;
        }
    }
    // A(i) = (I_num / (dg d^2)) / (2 i step)
    Rational best(best_num * denominator(step),
                  dg * d2 * 2 * static_cast<long long>(best_i) * numerator(step));
    const Rational at_zero = g(x);  // r = 0
    if (at_zero > best) best = at_zero;
    return to_double(best);
}

std::vector<std::pair<Rational, SurdValue>> maximal_curve(const PiecewiseLinear& f,
                                                          const std::vector<Rational>& grid,
                                                          unsigned threads) {
    std::vector<std::pair<Rational, SurdValue>> out(grid.size());
    auto eval_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            out[i] = {grid[i], maximal_function(f, grid[i])};
    };
    if (threads <= 1 || grid.size() < 2) {
        eval_range(0, grid.size());
        return out;
    }
    const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(grid.size()));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (grid.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(grid.size(), begin + chunk);
        if (begin < end) pool.emplace_back(eval_range, begin, end);
    }
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace maxop
