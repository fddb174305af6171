#include "maxop/holder.hpp"

#include "maxop/experiments.hpp"
#include "maxop/maximal.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace maxop;

namespace {

std::vector<Rational> uniform_grid(const Rational& a, const Rational& b, std::size_t count) {
    std::vector<Rational> g;
    for (std::size_t i = 0; i < count; ++i)
        g.push_back(a + (b - a) * Rational(static_cast<long long>(i)) /
                            Rational(static_cast<long long>(count - 1)));
    return g;
}

}  // namespace

TEST_CASE("seminorm basics") {
    const std::vector<Rational> pts{Rational(0), Rational(1, 2), Rational(1)};
    // f(x) = x with alpha = 1: the Lipschitz constant 1
    const auto lip = holder_norm_on_line(pts, {0.0, 0.5, 1.0}, {1.0, 1.0, 1.0});
    CHECK(lip.seminorm == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(lip.sup_norm == doctest::Approx(1.0));
    CHECK(lip.norm == doctest::Approx(2.0));
    // constants have seminorm 0
    const auto c = holder_norm_on_line(pts, {3.25, 3.25, 3.25}, {0.5, 0.25, 1.0});
    CHECK(c.seminorm == 0.0);
    CHECK(c.norm == c.sup_norm);
    // fewer than 2 points rejected
    CHECK_THROWS_AS(holder_norm_on_line({Rational(0)}, {1.0}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(holder_norm_on_line(pts, {0.0, 0.5, 1.0}, {1.0, 2.0, 1.0}),
                    std::invalid_argument);
}

TEST_CASE("witness reproduces the seminorm") {
    std::mt19937_64 rng(2);
    const auto pts = uniform_grid(0, 2, 33);
    std::vector<double> vals(33), alpha(33);
    for (std::size_t i = 0; i < 33; ++i) {
        vals[i] = static_cast<double>(rng() % 1000) / 500.0 - 1.0;
        alpha[i] = static_cast<double>(rng() % 17) / 16.0;
    }
    const auto rep = holder_norm_on_line(pts, vals, alpha);
    const auto [i, j] = rep.witness;
    const double d = std::abs(to_double(pts[i] - pts[j]));
    CHECK(std::abs(vals[i] - vals[j]) / std::pow(d, alpha[i]) ==
          doctest::Approx(rep.seminorm).epsilon(1e-12));
}

TEST_CASE("Mf of the tent on a 101-point grid has Lipschitz seminorm 1") {
    const auto pts = uniform_grid(0, 1, 101);
    const auto curve = maximal_curve(PiecewiseLinear::hat(), pts);
    std::vector<double> vals;
    for (const auto& [x, v] : curve) vals.push_back(v.to_double());
    const auto rep = holder_norm_on_line(pts, vals, std::vector<double>(101, 1.0));
    // attained on the Mf(x) = x branch; the surd branch has slope <= 1/3
    CHECK(rep.seminorm == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("alpha = 0 reduces to sup of differences") {
    const auto pts = uniform_grid(0, 1, 9);
    std::vector<double> vals{0.0, 0.25, -0.5, 1.0, 0.75, -1.0, 0.5, 0.0, 0.25};
    const auto rep = holder_norm_on_line(pts, vals, std::vector<double>(9, 0.0));
    CHECK(rep.seminorm == doctest::Approx(2.0));  // |1 - (-1)|
    CHECK(rep.seminorm <= 2.0 * rep.sup_norm + 1e-15);
}

TEST_CASE("the exponent sits at the first coordinate") {
    // Restricting the sweep to one orientation changes the answer; the full
    // ordered sweep must cover both.
    const std::vector<Rational> pts{Rational(0), Rational(1, 10), Rational(2)};
    const std::vector<double> vals{0.0, 1.0, 1.0};
    const std::vector<double> alpha{1.0, 0.0, 0.0};
    double first_only = 0.0, second_only = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            const double d = std::abs(to_double(pts[i] - pts[j]));
            first_only = std::max(first_only,
                                  std::abs(vals[i] - vals[j]) / std::pow(d, alpha[i]));
            second_only = std::max(second_only,
                                   std::abs(vals[i] - vals[j]) / std::pow(d, alpha[j]));
        }
    }
    CHECK(first_only == doctest::Approx(10.0));
    CHECK(second_only == doctest::Approx(1.0));
    const auto rep = holder_norm_on_line(pts, vals, alpha);
    CHECK(rep.seminorm == doctest::Approx(std::max(first_only, second_only)));
    CHECK(rep.witness == std::pair<std::size_t, std::size_t>{0, 1});
}

TEST_CASE("seminorm is monotone under grid refinement") {
    std::mt19937_64 rng(14);
    const PiecewiseLinear f = random_piecewise_linear(rng);
    auto norm_on = [&f](std::size_t count) {
        const auto pts = uniform_grid(0, 2, count);
        std::vector<double> vals, alpha;
        for (const auto& x : pts) {
            vals.push_back(to_double(f(x)));
            alpha.push_back(0.5);
        }
        return holder_norm_on_line(pts, vals, alpha).seminorm;
    };
    const double coarse = norm_on(17);
    const double fine = norm_on(33);  // contains the coarse grid
    CHECK(coarse <= fine + 1e-15);
}

TEST_CASE("boundedness constant") {
    const auto c11 = boundedness_constant(1, 1);
    CHECK(c11.exact);
    CHECK(c11.value_hi == 25);  // max{7, 1 + 24}
    CHECK(boundedness_constant(10, 1).value_hi == 241);
    // K = 1, delta = 1/2: 1 + 12 sqrt(2), certified at 200 bits
    const auto ch = boundedness_constant(1, Rational(1, 2));
    CHECK_FALSE(ch.exact);
    CHECK(ch.precision_bits == 200);
    const Rational lo_shift = (ch.value_lo - 1) / 12;
    const Rational hi_shift = (ch.value_hi - 1) / 12;
    CHECK(lo_shift * lo_shift <= 2);
    CHECK(hi_shift * hi_shift >= 2);
    CHECK(ch.to_double() == doctest::Approx(17.970562748477141).epsilon(1e-12));
    CHECK_THROWS_AS(boundedness_constant(Rational(1, 2), 1), std::invalid_argument);
    CHECK_THROWS_AS(boundedness_constant(1, Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(boundedness_constant(1, Rational(2)), std::invalid_argument);
}

TEST_CASE("continuity rate bound") {
    CHECK(continuity_rate_bound(123.0, 0.0, 0.375) == doctest::Approx(0.75));
    CHECK(continuity_rate_bound(1.0, 0.5, 0.5) == doctest::Approx(std::sqrt(2.0)));
    CHECK(continuity_rate_bound(5.0, 0.7, 0.0) == 0.0);
    CHECK_THROWS_AS(continuity_rate_bound(1.0, 1.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(continuity_rate_bound(1.0, -0.1, 0.1), std::invalid_argument);
    // monotone in sup_diff; increasing in q while sup_diff < N
    double prev = 0.0;
    for (double s : {0.1, 0.2, 0.4, 0.8}) {
        const double b = continuity_rate_bound(2.0, 0.5, s);
        CHECK(b > prev);
        prev = b;
    }
    prev = 0.0;
    for (double q : {0.0, 0.25, 0.5, 0.75}) {
        const double b = continuity_rate_bound(2.0, q, 0.1);
        CHECK(b > prev);
        prev = b;
    }
}
