// JSON and CSV interchange for functions, spaces, curves and reports.
#pragma once

#include "maxop/experiments.hpp"
#include "maxop/maximal.hpp"
#include "maxop/metric_space.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace maxop {

using Json = nlohmann::ordered_json;

/// Bad user-supplied input (malformed file, out-of-range parameter); the CLI
/// maps this to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// 17-significant-digit rendering of a double; lossless for plotting columns.
std::string double_str(double v);

Json rational_json(const Rational& r);
Json surd_json(const SurdValue& v);

Json function_json(const PiecewiseLinear& f);
PiecewiseLinear function_from_json(const Json& j);
PiecewiseLinear load_function(const std::string& path);

/// CSV rows of rationals; `name` prefixes line-numbered diagnostics.
std::vector<std::vector<Rational>> parse_rational_csv(std::istream& in, const std::string& name);
FiniteMetricMeasureSpace load_space(const std::string& distances_path,
                                    const std::string& masses_path);

/// Columns: x, value_p, value_q, value_s, value_float.
std::string curve_csv(const std::vector<std::pair<Rational, SurdValue>>& curve);

Json profile_json(const RadialAverageProfile& profile);
Json annular_report_json(const AnnularDecayReport& report);
Json holder_report_json(const HolderNormReport& report);
Json counterexample_report_json(const CounterexampleReport& report);
Json theorem1_report_json(const Theorem1Report& report);
Json continuity_report_json(const ContinuityReport& report);

void write_file(const std::string& path, const std::string& content);
void write_json(const std::string& path, const Json& j);

}  // namespace maxop
