#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "config.hpp"
#include "ramsey/spectroscopy.hpp"
#include "validation.hpp"

namespace ramsey::app {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;
inline constexpr int config = 2;
inline constexpr int domain = 3;
inline constexpr int infeasible = 4;
inline constexpr int validation = 5;
}  // namespace exit_code

struct CommandOptions {
    std::filesystem::path out_dir = ".";
    unsigned threads = 0;
    ValidationHooks hooks;
};

std::string format_spectrum_report(const Spectrum& spectrum, const SpectrumMetrics& m,
                                   const SpectrumMetrics* cw_reference);

// Each command writes its files under options.out_dir, echoes its report to `out`, and
// returns the process exit code. Configuration and domain errors propagate as exceptions;
// run_cli maps them to exit codes.
int cmd_spectrum(const RunConfig& cfg, const CommandOptions& options, std::ostream& out);
int cmd_baseline(const RunConfig& cfg, const CommandOptions& options, std::ostream& out);
int cmd_optimize(const RunConfig& cfg, const CommandOptions& options, std::ostream& out);
int cmd_validate(const RunConfig& cfg, const CommandOptions& options, std::ostream& out);

// Full command line: `ramsey <spectrum|baseline|optimize|validate|init> [--config path]
// [--out dir] [--threads n] [--seed n]`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ramsey::app
