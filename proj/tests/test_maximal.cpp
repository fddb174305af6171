#include "maxop/maximal.hpp"

#include "maxop/experiments.hpp"

#include <doctest.h>

#include <random>

using namespace maxop;

namespace {

const PiecewiseLinear kHat = PiecewiseLinear::hat();

ProfilePiece piece(long rlo_n, long rlo_d, long rhi_n, long rhi_d, Rational cn, Rational cz,
                   Rational co) {
    return ProfilePiece{Rational(rlo_n, rlo_d), Rational(rhi_n, rhi_d), std::move(cn),
                        std::move(cz), std::move(co)};
}

bool same_piece(const ProfilePiece& a, const ProfilePiece& b) {
    return a.r_lo == b.r_lo && a.r_hi == b.r_hi && a.c_neg == b.c_neg && a.c_zero == b.c_zero &&
           a.c_one == b.c_one;
}

}  // namespace

TEST_CASE("average_at: known values") {
    CHECK(average_at(kHat, Rational(1, 4), Rational(1, 2)) == Rational(5, 16));
    CHECK(average_at(kHat, Rational(0), Rational(0)) == 0);  // |f(0)| at r = 0
    CHECK(average_at(kHat, Rational(3, 4), Rational(1, 2)) == Rational(11, 16));
    CHECK(average_at(kHat, Rational(3, 4), Rational(0)) == Rational(3, 4));
    CHECK_THROWS_AS(average_at(kHat, Rational(0), Rational(-1)), std::invalid_argument);
}

TEST_CASE("radial_average_profile: tent at x = 1/4") {
    const auto prof = radial_average_profile(kHat, Rational(1, 4), 2);
    REQUIRE(prof.pieces().size() == 5);
    CHECK(same_piece(prof.pieces()[0], piece(0, 1, 1, 4, 0, Rational(1, 4), 0)));
    CHECK(same_piece(prof.pieces()[1], piece(1, 4, 3, 4, Rational(1, 32), 0, Rational(1, 2))));
    CHECK(same_piece(prof.pieces()[2], piece(3, 4, 5, 4, Rational(-1, 4), Rational(3, 4), 0)));
    CHECK(same_piece(prof.pieces()[3],
                     piece(5, 4, 7, 4, Rational(-33, 32), Rational(2), Rational(-1, 2))));
    CHECK(same_piece(prof.pieces()[4], piece(7, 4, 2, 1, Rational(1, 2), Rational(1, 4), 0)));
    CHECK(prof.value_at_zero() == Rational(1, 4));
}

TEST_CASE("radial_average_profile: tent at x = 0 and constants") {
    const auto prof = radial_average_profile(kHat, Rational(0), 2);
    REQUIRE(prof.pieces().size() == 2);
    CHECK(same_piece(prof.pieces()[0], piece(0, 1, 1, 1, 0, 0, Rational(1, 2))));
    CHECK(same_piece(prof.pieces()[1], piece(1, 1, 2, 1, Rational(-1), 2, Rational(-1, 2))));

    const auto cprof = radial_average_profile(PiecewiseLinear::constant(Rational(7, 3), 1),
                                              Rational(5, 8), Rational(1));
    REQUIRE(cprof.pieces().size() == 1);
    CHECK(same_piece(cprof.pieces()[0], piece(0, 1, 1, 1, 0, Rational(7, 3), 0)));

    CHECK(prof.at(Rational(0)) == 0);  // value at r = 0 is |f(0)|
    CHECK(prof.at(Rational(1, 2)) == Rational(1, 4));
    CHECK(prof.at(Rational(2)) == average_at(kHat, Rational(0), Rational(2)));
    CHECK_THROWS_AS(prof.at(Rational(3)), std::invalid_argument);

    CHECK_THROWS_AS(radial_average_profile(kHat, Rational(0), Rational(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(radial_average_profile(kHat, Rational(0), Rational(-1)),
                    std::invalid_argument);
}

TEST_CASE("profile pieces agree with average_at and are continuous (randomized)") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 25; ++t) {
        const PiecewiseLinear f = random_piecewise_linear(rng);
        const Rational x(static_cast<long>(rand_below(rng, 33)) - 16, 8);
        const auto prof = radial_average_profile(f, x, f.period());
        const auto& ps = prof.pieces();
        for (std::size_t i = 0; i < ps.size(); ++i) {
            // interior probes match the direct integral route
            for (int lam : {1, 2, 3}) {
                const Rational r = ps[i].r_lo + Rational(lam, 4) * (ps[i].r_hi - ps[i].r_lo);
                CHECK(ps[i].at(r) == average_at(f, x, r));
            }
            // adjacent pieces agree at shared radii
            if (i + 1 < ps.size()) CHECK(ps[i].at(ps[i].r_hi) == ps[i + 1].at(ps[i].r_hi));
        }
        // the r -> 0 limit of the first piece is |f(x)|
        CHECK(ps[0].c_neg == 0);
        CHECK(ps[0].c_zero == prof.value_at_zero());
    }
}

TEST_CASE("profile_max: candidates and tie-breaking") {
    // tent at x = 0: interior critical point of the concave piece
    const auto m0 = profile_max(radial_average_profile(kHat, Rational(0), 2));
    CHECK(m0.value == SurdValue(Rational(2), Rational(-1), Rational(2)));
    CHECK(m0.radius == SurdValue::sqrt_of(Rational(2)));
    // tent at x = 3/4: flat piece attains at r = 0 (smallest radius wins)
    const auto m34 = profile_max(radial_average_profile(kHat, Rational(3, 4), 2));
    CHECK(m34.value == SurdValue(Rational(3, 4)));
    CHECK(m34.radius == SurdValue(Rational(0)));
    // constants
    const auto mc = profile_max(
        radial_average_profile(PiecewiseLinear::constant(Rational(5, 7), 2), Rational(0), 2));
    CHECK(mc.value == SurdValue(Rational(5, 7)));
    CHECK(mc.radius == SurdValue(Rational(0)));
}

TEST_CASE("maximal_function: closed-form values") {
    CHECK(maximal_function(kHat, Rational(0)) == SurdValue(Rational(2), Rational(-1), Rational(2)));
    CHECK(maximal_function(kHat, Rational(1, 2)) == SurdValue(Rational(1, 2)));
    // hat - 1/10 at 1/2: 1 - sqrt(17/50)
    const PiecewiseLinear f10 = kHat.affine(1, Rational(-1, 10));
    CHECK(maximal_function(f10, Rational(1, 2)) ==
          SurdValue(Rational(1), Rational(-1), Rational(17, 50)));
    // radicand a perfect square on the grid: x = 7/40 gives the rational 23/40
    CHECK(maximal_function(kHat, Rational(7, 40)) == SurdValue(Rational(23, 40)));
}

TEST_CASE("maximal_curve matches pointwise evaluation and is thread-agnostic") {
    const std::vector<Rational> grid{Rational(0), Rational(1, 2), Rational(3, 4), Rational(1, 4)};
    const auto curve = maximal_curve(kHat, grid);
    REQUIRE(curve.size() == 4);
    CHECK(curve[0].second == SurdValue(Rational(2), Rational(-1), Rational(2)));
    CHECK(curve[1].second == SurdValue(Rational(1, 2)));
    CHECK(curve[2].second == SurdValue(Rational(3, 4)));
    CHECK(curve[3].second == SurdValue(Rational(2), Rational(-1), Rational(33, 16)));
    const auto threaded = maximal_curve(kHat, grid, 3);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(threaded[i].first == curve[i].first);
        CHECK(threaded[i].second == curve[i].second);
    }
    // all zeros for the zero function
    for (const auto& [x, v] : maximal_curve(PiecewiseLinear::constant(0, 2), grid))
        CHECK(v == SurdValue(Rational(0)));
}

TEST_CASE("brute force grid search") {
    const double exact = maximal_function(kHat, Rational(0)).to_double();  // 2 - sqrt(2)
    const double brute = maximal_function_brute_force(kHat, Rational(0), Rational(10), 10000);
    CHECK(brute <= exact + 1e-9);
    CHECK(brute >= exact - 1e-3);
    CHECK(maximal_function_brute_force(PiecewiseLinear::constant(1, 2), Rational(1, 3),
                                       Rational(5), 100) == 1.0);
    const double bh = maximal_function_brute_force(kHat, Rational(1, 2), Rational(2), 20000);
    CHECK(bh == doctest::Approx(0.5).epsilon(1e-4));
    CHECK_THROWS_AS(maximal_function_brute_force(kHat, Rational(0), Rational(0), 100),
                    std::invalid_argument);
    CHECK_THROWS_AS(maximal_function_brute_force(kHat, Rational(0), Rational(1), 1),
                    std::invalid_argument);
}

TEST_CASE("oracle agreement on random functions") {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 10; ++t) {
        const PiecewiseLinear f = random_piecewise_linear(rng);
        const Rational x(static_cast<long>(rand_below(rng, 129)) - 64, 32);
        const double exact = maximal_function(f, x).to_double();
        const std::size_t grid = 2000;
        const double brute = maximal_function_brute_force(f, x, f.period(), grid);
        CHECK(brute <= exact + 1e-12);
        // profile slopes are at most 2 * Lip(f), so the grid miss is bounded
        const double miss =
            2.0 * to_double(f.max_abs_slope() * f.period()) / static_cast<double>(grid - 1);
        CHECK(exact - brute <= miss + 1e-12);
    }
}

TEST_CASE("maximal operator identities (randomized, exact)") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 8; ++t) {
        const PiecewiseLinear f = random_piecewise_linear(rng);
        const PiecewiseLinear g = random_piecewise_linear(rng);
        const Rational x(static_cast<long>(rand_below(rng, 33)) - 16, 8);
        const SurdValue mf = maximal_function(f, x);

        // Mf(x) >= |f(x)| (r -> 0 candidate)
        CHECK(compare(mf, SurdValue(abs(f(x)))) >= 0);
        // periodicity
        CHECK(maximal_function(f, x + f.period()) == mf);
        // M(f) == M(|f|)
        CHECK(maximal_function(f.absolute(), x) == mf);
        // homogeneity: M(c f) = |c| M(f), exact
        const Rational c(static_cast<long>(rand_below(rng, 9)) - 4, 2);
        CHECK(maximal_function(f.affine(c, 0), x) == mf.scaled(abs(c)));
        // sublinearity at sampled points, within 1e-12 via 200-bit midpoints
        const SurdValue mg = maximal_function(g, x);
        const SurdValue msum = maximal_function(f + g, x);
        const double lhs = to_double(msum.enclosure(200).mid());
        const double rhs = to_double((mf.enclosure(200) + mg.enclosure(200)).mid());
        CHECK(lhs <= rhs + 1e-12);
        // sup-norm contraction: Mf never exceeds max |f|
        CHECK(compare(mf, SurdValue(f.max_abs())) <= 0);
    }
}

TEST_CASE("evenness of Mf for even f") {
    // the tent is even around 0
    for (long i = 0; i <= 16; ++i) {
        const Rational x(i, 8);
        CHECK(maximal_function(kHat, x) == maximal_function(kHat, -x));
    }
}
