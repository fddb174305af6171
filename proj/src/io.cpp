#include "maxop/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace maxop {

std::string double_str(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Json rational_json(const Rational& r) { return rational_str(r); }

Json surd_json(const SurdValue& v) {
    return Json{{"p", rational_str(v.p())}, {"q", rational_str(v.q())}, {"s", rational_str(v.s())}};
}

Json function_json(const PiecewiseLinear& f) {
    Json points = Json::array();
    for (std::size_t i = 0; i < f.breakpoint_count(); ++i)
        points.push_back(Json::array({rational_str(f.breakpoints()[i]), rational_str(f.values()[i])}));
    return Json{{"period", rational_str(f.period())}, {"points", points}};
}

PiecewiseLinear function_from_json(const Json& j) {
    try {
        const Rational period = parse_rational(j.at("period").get<std::string>());
        std::vector<std::pair<Rational, Rational>> pts;
        for (const Json& p : j.at("points")) {
            if (!p.is_array() || p.size() != 2)
                throw InputError("function JSON: each point must be a [breakpoint, value] pair");
            pts.emplace_back(parse_rational(p[0].get<std::string>()),
                             parse_rational(p[1].get<std::string>()));
        }
        return PiecewiseLinear(period, std::move(pts));
    } catch (const Json::exception& e) {
        throw InputError(std::string("function JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("function JSON: ") + e.what());
    }
}

PiecewiseLinear load_function(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open function file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
    return function_from_json(j);
}

std::vector<std::vector<Rational>> parse_rational_csv(std::istream& in, const std::string& name) {
    std::vector<std::vector<Rational>> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        // Skip blank lines and comment lines.
        std::string stripped;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) stripped += c;
        if (stripped.empty() || stripped[0] == '#') continue;
        std::vector<Rational> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                row.push_back(parse_rational(cell));
            } catch (const std::invalid_argument& e) {
                throw InputError(name + ":" + std::to_string(line_no) + ": " + e.what());
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

FiniteMetricMeasureSpace load_space(const std::string& distances_path,
                                    const std::string& masses_path) {
    std::ifstream din(distances_path);
    if (!din) throw InputError("cannot open distance matrix: " + distances_path);
    std::ifstream min(masses_path);
    if (!min) throw InputError("cannot open mass vector: " + masses_path);
    const auto dist = parse_rational_csv(din, distances_path);
    const auto mass_rows = parse_rational_csv(min, masses_path);
    std::vector<Rational> masses;
    for (const auto& row : mass_rows) masses.insert(masses.end(), row.begin(), row.end());
    try {
        return FiniteMetricMeasureSpace(dist, std::move(masses));
    } catch (const std::invalid_argument& e) {
        throw InputError(distances_path + ": " + e.what());
    }
}

std::string curve_csv(const std::vector<std::pair<Rational, SurdValue>>& curve) {
    std::string out = "x,value_p,value_q,value_s,value_float\n";
    for (const auto& [x, v] : curve) {
        out += rational_str(x) + "," + rational_str(v.p()) + "," + rational_str(v.q()) + "," +
               rational_str(v.s()) + "," + double_str(v.to_double()) + "\n";
    }
    return out;
}

Json profile_json(const RadialAverageProfile& profile) {
    Json pieces = Json::array();
    for (const ProfilePiece& p : profile.pieces())
        pieces.push_back(Json{{"r_lo", rational_str(p.r_lo)},
                              {"r_hi", rational_str(p.r_hi)},
                              {"c_neg", rational_str(p.c_neg)},
                              {"c_zero", rational_str(p.c_zero)},
                              {"c_one", rational_str(p.c_one)}});
    return Json{{"center", rational_str(profile.center())},
                {"value_at_zero", rational_str(profile.value_at_zero())},
                {"r_max", rational_str(profile.r_max())},
                {"pieces", pieces}};
}

Json annular_report_json(const AnnularDecayReport& report) {
    Json j{{"delta", rational_str(report.delta)},
           {"best_k", rational_str(report.best_k)},
           {"best_k_float", double_str(to_double(report.best_k))},
           {"sup_ratio_lo", rational_str(report.sup_ratio_lo)},
           {"sup_ratio_hi", rational_str(report.sup_ratio_hi)},
           {"exact", report.exact},
           {"floored", report.floored},
           {"precision_bits", report.precision_bits}};
    if (report.has_witness)
        j["witness"] = Json{{"x", report.witness.x},
                            {"r", rational_str(report.witness.r)},
                            {"epsilon", rational_str(report.witness.epsilon)}};
    return j;
}

Json holder_report_json(const HolderNormReport& report) {
    return Json{{"points", report.point_count},
                {"sup_norm", double_str(report.sup_norm)},
                {"seminorm", double_str(report.seminorm)},
                {"norm", double_str(report.norm)},
                {"witness", Json::array({report.witness.first, report.witness.second})}};
}

Json counterexample_report_json(const CounterexampleReport& report) {
    return Json{{"n", report.n},
                {"dn", rational_str(report.dn)},
                {"mf_at_half", surd_json(report.mf_at_half)},
                {"mf_at_dn", surd_json(report.mf_at_dn)},
                {"mfn_at_half", surd_json(report.mfn_at_half)},
                {"mfn_at_dn", surd_json(report.mfn_at_dn)},
                {"inequality_holds", report.inequality_holds},
                {"quotient", double_str(report.quotient)},
                {"norm_lower_bound", double_str(report.norm_lower_bound)}};
}

Json theorem1_report_json(const Theorem1Report& report) {
    Json violations = Json::array();
    for (const Theorem1Violation& v : report.violations)
        violations.push_back(Json{{"trial", v.trial},
                                  {"kind", v.kind},
                                  {"lhs", double_str(v.lhs)},
                                  {"rhs", double_str(v.rhs)},
                                  {"x", rational_str(v.x)},
                                  {"y", rational_str(v.y)}});
    return Json{{"trials", report.trials},
                {"seed", report.seed},
                {"grid_count", report.grid_count},
                {"c1", rational_str(report.c1)},
                {"two_point_checks", report.two_point_checks},
                {"max_norm_ratio", double_str(report.max_norm_ratio)},
                {"max_two_point_ratio", double_str(report.max_two_point_ratio)},
                {"violations", violations},
                {"passed", report.passed()}};
}

Json continuity_report_json(const ContinuityReport& report) {
    Json rows = Json::array();
    for (const ContinuityRow& row : report.rows)
        rows.push_back(Json{{"shift", rational_str(row.shift)},
                            {"sup_diff", double_str(row.sup_diff)},
                            {"seminorm_beta", double_str(row.seminorm_beta)},
                            {"norm_beta", double_str(row.norm_beta)},
                            {"bound", double_str(row.bound)},
                            {"bound_holds", row.bound_holds}});
    return Json{{"alpha", rational_str(report.alpha)},
                {"beta", rational_str(report.beta)},
                {"q", double_str(report.q)},
                {"n_bound", double_str(report.n_bound)},
                {"rows", rows},
                {"all_bounds_hold", report.all_bounds_hold},
                {"distances_decreasing", report.distances_decreasing}};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open output file: " + path);
    out << content;
}

void write_json(const std::string& path, const Json& j) { write_file(path, j.dump(2) + "\n"); }

}  // namespace maxop
