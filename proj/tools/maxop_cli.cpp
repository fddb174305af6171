// maxop: exact maximal-function engine and theorem harnesses on the command
// line. Exit codes: 0 success / all checks pass, 1 verification violation,
// 2 bad input.
#include "maxop/experiments.hpp"
#include "maxop/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace maxop;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

unsigned thread_count_from_env() {
    const char* raw = std::getenv("MAXOP_THREADS");
    if (!raw) return 1;
    const long v = std::strtol(raw, nullptr, 10);
    return v > 1 ? static_cast<unsigned>(v) : 1;
}

Rational parse_rational_arg(const std::string& text, const std::string& what) {
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw InputError(what + ": " + e.what());
    }
}

struct GridSpec {
    Rational start;
    Rational end;
    std::size_t count = 0;

    std::vector<Rational> points() const {
        std::vector<Rational> out;
        out.reserve(count);
        const Rational span = end - start;
        for (std::size_t i = 0; i < count; ++i)
            out.push_back(start + span * Rational(static_cast<long long>(i)) /
                                      Rational(static_cast<long long>(count - 1)));
        return out;
    }
};

GridSpec parse_grid(const std::string& text) {
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw InputError("grid spec must be start:end:count, got '" + text + "'");
    GridSpec g;
    g.start = parse_rational_arg(text.substr(0, c1), "grid start");
    g.end = parse_rational_arg(text.substr(c1 + 1, c2 - c1 - 1), "grid end");
    try {
        g.count = std::stoull(text.substr(c2 + 1));
    } catch (const std::exception&) {
        throw InputError("grid count must be an integer, got '" + text.substr(c2 + 1) + "'");
    }
    if (g.count < 2) throw InputError("grid count must be >= 2");
    if (g.end < g.start) throw InputError("grid end must be >= start");
    return g;
}

// Built-in function keywords next to JSON files: hat, hat-minus (with --n),
// const (with --c).
PiecewiseLinear resolve_function(const std::string& fn, std::optional<int> n,
                                 const std::string& c) {
    if (fn == "hat") return PiecewiseLinear::hat();
    if (fn == "hat-minus") {
        if (!n) throw InputError("hat-minus requires --n");
        if (*n < 3) throw InputError("hat-minus requires n >= 3");
        return counterexample_sequence(*n);
    }
    if (fn == "const")
        return PiecewiseLinear::constant(parse_rational_arg(c, "constant value"));
    return load_function(fn);
}

std::vector<double> resolve_alpha(const std::string& spec, const std::vector<Rational>& grid) {
    if (spec == "ramp") {
        // alpha(x) = fractional part of x: a simple nonconstant profile.
        std::vector<double> a;
        a.reserve(grid.size());
        for (const Rational& x : grid)
            a.push_back(to_double(x - Rational(floor_rational(x))));
        return a;
    }
    if (spec.size() > 4 && spec.substr(spec.size() - 4) == ".csv") {
        std::ifstream in(spec);
        if (!in) throw InputError("cannot open exponent file: " + spec);
        std::vector<double> a;
        for (const auto& row : parse_rational_csv(in, spec))
            for (const Rational& r : row) a.push_back(to_double(r));
        if (a.size() != grid.size())
            throw InputError("exponent file has " + std::to_string(a.size()) +
                             " entries, grid has " + std::to_string(grid.size()));
        return a;
    }
    const Rational konst = parse_rational_arg(spec, "alpha");
    if (konst < 0 || konst > 1) throw InputError("alpha must lie in [0, 1]");
    return std::vector<double>(grid.size(), to_double(konst));
}

int run(int argc, char** argv) {
    CLI::App app{"Exact Hardy-Littlewood maximal functions of periodic piecewise-linear "
                 "functions, discrete maximal operators, annular decay constants and "
                 "variable-exponent Hölder norms."};
    app.require_subcommand(1);

    std::string fn = "hat", out_path, grid_spec, alpha_spec = "1", beta_spec = "1/2";
    std::string distances_path, masses_path, of_what = "mf", x_text = "0", rmax_text,
                delta_text = "1", c_text = "0";
    std::optional<int> n_opt;
    int n = 100, kmin = 3, kmax = 50, periods_beyond = 4;
    std::size_t trials = 100, grid_count = 64, lemma_grid = 100000;
    std::uint64_t seed = 0;
    unsigned precision_bits = 200;

    auto add_fn = [&](CLI::App* cmd) {
        cmd->add_option("--fn", fn, "hat | hat-minus | const | path to function JSON");
        cmd->add_option("--n", n_opt, "n for hat-minus (>= 3)");
        cmd->add_option("--c", c_text, "value for const (rational)");
    };

    auto* curve = app.add_subcommand("maximal-curve",
                                     "Evaluate Mf exactly on a grid; CSV columns x, value_p, "
                                     "value_q, value_s, value_float.");
    add_fn(curve);
    curve->add_option("--grid", grid_spec, "start:end:count, rational endpoints")->required();
    curve->add_option("--out", out_path, "output CSV path")->required();

    auto* profile = app.add_subcommand("average-profile",
                                       "Exact radial average profile r -> mean of |f| over "
                                       "[x-r, x+r], as pieces c_neg/r + c_zero + c_one*r.");
    add_fn(profile);
    profile->add_option("--x", x_text, "center (rational)")->required();
    profile->add_option("--rmax", rmax_text, "radius upper end (rational, > 0)")->required();
    profile->add_option("--out", out_path, "output JSON path")->required();

    auto* holder = app.add_subcommand("holder-norm",
                                      "Grid Hölder norm (variable exponent) of f or of Mf.");
    add_fn(holder);
    holder->add_option("--grid", grid_spec, "start:end:count")->required();
    holder->add_option("--alpha", alpha_spec,
                       "constant rational in [0,1], 'ramp', or per-point CSV");
    holder->add_option("--of", of_what, "'f' or 'mf' (default mf)");
    holder->add_option("--out", out_path, "output JSON path")->required();

    auto* annular = app.add_subcommand("annular-decay",
                                       "Best annular-decay constant of a finite metric measure "
                                       "space over the ball-composition critical set.");
    annular->add_option("--distances", distances_path, "CSV distance matrix (rationals)")
        ->required();
    annular->add_option("--masses", masses_path, "CSV mass vector (rationals, > 0)")->required();
    annular->add_option("--delta", delta_text, "decay exponent, rational in (0,1]");
    annular->add_option("--precision-bits", precision_bits, "interval bits for delta < 1 (>= 53)");
    annular->add_option("--out", out_path, "output JSON path")->required();

    auto* thm1 = app.add_subcommand("verify-theorem1",
                                    "Boundedness property suite on the line (C1 = 25): random "
                                    "functions and exponents; exits 1 on any violation.");
    thm1->add_option("--trials", trials, "number of random trials (>= 1)");
    thm1->add_option("--seed", seed, "RNG seed")->required();
    thm1->add_option("--grid-count", grid_count, "grid points per trial (>= 2)");
    thm1->add_option("--out", out_path, "output JSON path")->required();

    auto* cont = app.add_subcommand("verify-continuity",
                                    "Interpolation rate suite: f_k = f - 1/k for k in "
                                    "[kmin, kmax]; exits 1 if any rate bound fails.");
    add_fn(cont);
    cont->add_option("--kmin", kmin, "first k (>= 3)");
    cont->add_option("--kmax", kmax, "last k");
    cont->add_option("--alpha", alpha_spec, "source exponent (rational in (0,1])");
    cont->add_option("--beta", beta_spec, "target exponent (rational, beta < alpha)");
    cont->add_option("--grid", grid_spec, "start:end:count (default 0:2:65)");
    cont->add_option("--out", out_path, "output JSON path")->required();

    int n_max = 0;
    auto* cex = app.add_subcommand("counterexample",
                                   "Counterexample chain: closed forms vs engine, inequality "
                                   "Mf_n(d_n) <= Mf_n(1/2), quotient near 1/3, norm lower "
                                   "bound >= 1/6. Exits 1 if any check fails.");
    cex->add_option("--n", n, "sequence index (>= 3)");
    cex->add_option("--n-max", n_max, "sweep n..n-max and write a CSV table instead of JSON");
    cex->add_option("--out", out_path, "output JSON (or CSV for sweeps) path")->required();

    auto* lemma = app.add_subcommand("lemma-check",
                                     "Periodic reduction check: grid search beyond one period "
                                     "must not beat the one-period exact maximum.");
    add_fn(lemma);
    lemma->add_option("--x", x_text, "center (rational)");
    lemma->add_option("--periods-beyond", periods_beyond, "extra periods to search (>= 1)");
    lemma->add_option("--grid-count", lemma_grid, "grid points (>= 100)");
    lemma->add_option("--trials", trials, "random (f, x) trials instead of --fn/--x");
    lemma->add_option("--seed", seed, "RNG seed (required with --trials)");
    lemma->add_option("--out", out_path, "output JSON path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    if (curve->parsed()) {
        const GridSpec grid = parse_grid(grid_spec);
        const auto points = grid.points();
        const auto result = maximal_curve(resolve_function(fn, n_opt, c_text), points,
                                          thread_count_from_env());
        write_file(out_path, curve_csv(result));
        return kExitOk;
    }

    if (profile->parsed()) {
        const Rational x = parse_rational_arg(x_text, "--x");
        const Rational rmax = parse_rational_arg(rmax_text, "--rmax");
        if (rmax <= 0) throw InputError("--rmax must be > 0");
        const auto prof = radial_average_profile(resolve_function(fn, n_opt, c_text), x, rmax);
        const auto max = profile_max(prof);
        Json j = profile_json(prof);
        j["max"] = Json{{"value", surd_json(max.value)},
                        {"value_float", double_str(max.value.to_double())},
                        {"radius", surd_json(max.radius)}};
        write_json(out_path, j);
        return kExitOk;
    }

    if (holder->parsed()) {
        const PiecewiseLinear f = resolve_function(fn, n_opt, c_text);
        const auto points = parse_grid(grid_spec).points();
        const auto alpha = resolve_alpha(alpha_spec, points);
        std::vector<double> values(points.size());
        if (of_what == "f") {
            for (std::size_t i = 0; i < points.size(); ++i) values[i] = to_double(f(points[i]));
        } else if (of_what == "mf") {
            const auto curve_vals = maximal_curve(f, points, thread_count_from_env());
            for (std::size_t i = 0; i < points.size(); ++i)
                values[i] = curve_vals[i].second.to_double();
        } else {
            throw InputError("--of must be 'f' or 'mf'");
        }
        Json j = holder_report_json(holder_norm_on_line(points, values, alpha));
        j["of"] = of_what;
        j["alpha"] = alpha_spec;
        write_json(out_path, j);
        return kExitOk;
    }

    if (annular->parsed()) {
        if (precision_bits < 53) throw InputError("--precision-bits must be >= 53");
        const Rational delta = parse_rational_arg(delta_text, "--delta");
        if (delta <= 0 || delta > 1) throw InputError("--delta must lie in (0, 1]");
        const auto space = load_space(distances_path, masses_path);
        write_json(out_path, annular_report_json(annular_decay_k(space, delta, precision_bits)));
        return kExitOk;
    }

    if (thm1->parsed()) {
        if (trials < 1) throw InputError("--trials must be >= 1");
        if (grid_count < 2) throw InputError("--grid-count must be >= 2");
        const Theorem1Report report = verify_theorem1_on_line(trials, seed, grid_count);
        write_json(out_path, theorem1_report_json(report));
        if (!report.passed()) {
            std::cerr << "verify-theorem1: " << report.violations.size() << " violation(s)\n";
            return kExitViolation;
        }
        return kExitOk;
    }

    if (cont->parsed()) {
        if (kmin < 3) throw InputError("--kmin must be >= 3");
        if (kmax < kmin) throw InputError("--kmax must be >= kmin");
        const Rational alpha = parse_rational_arg(alpha_spec, "--alpha");
        const Rational beta = parse_rational_arg(beta_spec, "--beta");
        if (beta >= alpha)
            throw InputError("--beta must be < --alpha (continuity requires sup beta/alpha < 1)");
        const auto points =
            grid_spec.empty() ? parse_grid("0:2:65").points() : parse_grid(grid_spec).points();
        std::vector<Rational> shifts;
        for (int k = kmin; k <= kmax; ++k) shifts.emplace_back(-1, k);
        const ContinuityReport report = verify_theorem2_continuity(
            resolve_function(fn, n_opt, c_text), shifts, alpha, beta, points);
        write_json(out_path, continuity_report_json(report));
        if (!report.passed()) {
            std::cerr << "verify-continuity: rate bound violated\n";
            return kExitViolation;
        }
        return kExitOk;
    }

    if (cex->parsed()) {
        if (n < 3) throw InputError("--n must be >= 3");
        auto chain_ok = [](const CounterexampleReport& r) {
            return r.inequality_holds && r.norm_lower_bound >= 1.0 / 6.0 &&
                   std::abs(r.quotient - 1.0 / 3.0) < 0.01;
        };
        if (cex->count("--n-max") > 0) {
            if (n_max < n) throw InputError("--n-max must be >= --n");
            std::string csv =
                "n,dn,mfn_at_half_float,mfn_at_dn_float,inequality_holds,quotient,"
                "norm_lower_bound\n";
            bool all_ok = true;
            for (int k = n; k <= n_max; ++k) {
                const CounterexampleReport r = verify_counterexample(k);
                all_ok = all_ok && chain_ok(r);
                csv += std::to_string(k) + "," + rational_str(r.dn) + "," +
                       double_str(r.mfn_at_half.to_double()) + "," +
                       double_str(r.mfn_at_dn.to_double()) + "," +
                       (r.inequality_holds ? "1" : "0") + "," + double_str(r.quotient) + "," +
                       double_str(r.norm_lower_bound) + "\n";
            }
            write_file(out_path, csv);
            if (!all_ok) {
                std::cerr << "counterexample: chain check failed within the sweep\n";
                return kExitViolation;
            }
            return kExitOk;
        }
        const CounterexampleReport report = verify_counterexample(n);
        write_json(out_path, counterexample_report_json(report));
        if (!chain_ok(report)) {
            std::cerr << "counterexample: chain check failed at n = " << n << "\n";
            return kExitViolation;
        }
        return kExitOk;
    }

    if (lemma->parsed()) {
        if (periods_beyond < 1) throw InputError("--periods-beyond must be >= 1");
        if (lemma_grid < 100) throw InputError("--grid-count must be >= 100");
        Json runs = Json::array();
        bool all_hold = true;
        if (lemma->count("--trials") > 0) {
            if (lemma->count("--seed") == 0) throw InputError("--trials requires --seed");
            std::mt19937_64 rng(seed);
            for (std::size_t t = 0; t < trials; ++t) {
                const PiecewiseLinear f = random_piecewise_linear(rng);
                const Rational x(static_cast<long long>(rand_below(rng, 128)), 64);
                const bool holds = verify_periodic_lemma(f, x, periods_beyond, lemma_grid);
                all_hold = all_hold && holds;
                runs.push_back(Json{{"function", function_json(f)},
                                    {"x", rational_str(x)},
                                    {"holds", holds}});
            }
        } else {
            const PiecewiseLinear f = resolve_function(fn, n_opt, c_text);
            const Rational x = parse_rational_arg(x_text, "--x");
            const bool holds = verify_periodic_lemma(f, x, periods_beyond, lemma_grid);
            all_hold = holds;
            runs.push_back(
                Json{{"function", function_json(f)}, {"x", rational_str(x)}, {"holds", holds}});
        }
        write_json(out_path, Json{{"periods_beyond", periods_beyond},
                                  {"grid_count", lemma_grid},
                                  {"runs", runs},
                                  {"all_hold", all_hold}});
        if (!all_hold) {
            std::cerr << "lemma-check: grid search beat the one-period maximum\n";
            return kExitViolation;
        }
        return kExitOk;
    }

    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const maxop::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    }
}
