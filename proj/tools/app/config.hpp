#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/averaging.hpp"
#include "ramsey/optimizer.hpp"
#include "ramsey/spectroscopy.hpp"
#include "ramsey/units.hpp"

namespace ramsey::app {

// Malformed or out-of-range configuration. Carries the 1-based line (0 when the problem is
// not tied to a line) and the offending "section.key".
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& what, int line = 0, std::string field = {})
        : std::runtime_error(what), line_(line), field_(std::move(field)) {}
    int line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }

private:
    int line_;
    std::string field_;
};

struct OutputPaths {
    std::string spectrum_csv = "spectrum.csv";
    std::string baseline_csv = "baseline.csv";
    std::string report = "report.txt";
    std::string baseline_report = "baseline_report.txt";
    std::string trace_csv = "trace.csv";
    std::string summary = "optimize_summary.txt";
    std::string validation_report = "validation.txt";
};

struct OptimizerConfig {
    std::vector<double> s_grid;  // s
    std::vector<double> r_grid;
    ObjectiveConfig objective;
    SweepPlan plan{3.5, 5.5, 0.002, false, 0.0001};
};

struct ValidationConfig {
    int composition_draws = 1000;
    int mc_draws = 10;
};

struct RunConfig {
    SystemParams system{default_transmon(), units::ghz_to_angular(0.1)};
    SchemeSpec scheme;
    std::string s_spec = "0.68pi/3eta";
    SweepPlan sweep;
    bool shift_vs_cw = true;
    OptimizerConfig optimizer;
    McConfig mc;
    ValidationConfig validation;
    OutputPaths output;

};

// Configuration reproducing the double-resonance operating point (E_J/E_C = 100,
// φ = 0.46, φ' = 0.49, η/2π = 100 MHz, s = 0.68π/3η, R = 0.001).
RunConfig default_config();

// Parses "[section]" / "key = value" text; '#' starts a comment. Keys not present keep
// their defaults. Throws ConfigError with line/field diagnostics.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string& path);

// Commented template equal to default_config().
std::string config_template();

// "0.68pi/3eta" -> 0.68π/(3η); a bare number is a time in ns. Returns seconds.
double parse_time_constant(std::string_view spec, double eta);

}  // namespace ramsey::app
