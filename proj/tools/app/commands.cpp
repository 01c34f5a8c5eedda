#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "io.hpp"
#include "ramsey/diagnostics.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/optimizer.hpp"
#include "ramsey/units.hpp"

namespace ramsey::app {

namespace {

std::string ghz(double omega) { return format_number(units::angular_to_ghz(omega)); }
std::string mhz(double omega) { return format_number(units::angular_to_mhz(omega)); }

SchemeSpec cw_scheme(const RunConfig& cfg) {
    SchemeSpec cw = cfg.scheme;
    cw.kind = SchemeKind::cw;
    return cw;
}

Spectrum measured(const RunConfig& cfg, const SchemeSpec& scheme, unsigned threads) {
    return quantize_to_csv_precision(measure(cfg.system, scheme, cfg.sweep, threads));
}

}  // namespace

std::string format_spectrum_report(const Spectrum& spectrum, const SpectrumMetrics& m,
                                   const SpectrumMetrics* cw_reference) {
    std::ostringstream os;
    os << "# ramsey spectrum report\n";
    os << "scheme = " << to_string(spectrum.scheme_tag);
    if (spectrum.scheme_tag == SchemeKind::general) os << ":" << spectrum.scheme.n_res;
    os << "\n";
    if (spectrum.scheme_tag != SchemeKind::cw) {
        os << "s_ns = " << format_number(units::s_to_ns(spectrum.scheme.s)) << "\n";
        os << "ratio_r = " << format_number(spectrum.scheme.ratio_r) << "\n";
        os << "method = "
           << (spectrum.scheme.method == AverageMethod::closed_form ? "closed" : "numeric") << "\n";
    }
    os << "points = " << spectrum.points.size() << "\n";
    os << "peak_ghz = " << ghz(m.peak_omega) << "\n";
    os << "peak_value = " << format_number(m.peak_value) << "\n";
    os << "fwhm_mhz = " << mhz(m.fwhm) << "\n";
    os << "half_max_left_ghz = " << ghz(m.half_max_left) << "\n";
    os << "half_max_right_ghz = " << ghz(m.half_max_right) << "\n";
    if (cw_reference != nullptr) {
        os << "cw_peak_ghz = " << ghz(cw_reference->peak_omega) << "\n";
        os << "cw_fwhm_mhz = " << mhz(cw_reference->fwhm) << "\n";
        os << "shift_mhz = " << mhz(m.peak_omega - cw_reference->peak_omega) << "\n";
    }
    os << "fringe_count = " << m.fringes.size() << "\n";
    for (std::size_t i = 0; i < m.fringes.size(); ++i) {
        os << "fringe." << i << ".omega_ghz = " << ghz(m.fringes[i].omega) << "\n";
        os << "fringe." << i << ".height = " << format_number(m.fringes[i].height) << "\n";
    }
    return os.str();
}

int cmd_spectrum(const RunConfig& cfg, const CommandOptions& options, std::ostream& out) {
    const Spectrum spectrum = measured(cfg, cfg.scheme, options.threads);
    write_file_atomic(options.out_dir / cfg.output.spectrum_csv, spectrum_to_csv(spectrum));
    const SpectrumMetrics m = metrics(spectrum);

    std::string report;
    if (cfg.shift_vs_cw && cfg.scheme.kind != SchemeKind::cw) {
        const SpectrumMetrics cw = metrics(measured(cfg, cw_scheme(cfg), options.threads));
        report = format_spectrum_report(spectrum, m, &cw);
    } else {
        report = format_spectrum_report(spectrum, m, nullptr);
    }
    write_file_atomic(options.out_dir / cfg.output.report, report);
    out << report;
    return exit_code::ok;
}

int cmd_baseline(const RunConfig& cfg, const CommandOptions& options, std::ostream& out) {
    const Spectrum spectrum = measured(cfg, cw_scheme(cfg), options.threads);
    write_file_atomic(options.out_dir / cfg.output.baseline_csv, spectrum_to_csv(spectrum));
    const std::string report = format_spectrum_report(spectrum, metrics(spectrum), nullptr);
    write_file_atomic(options.out_dir / cfg.output.baseline_report, report);
    out << report;
    return exit_code::ok;
}

namespace {

std::string trace_csv(const std::vector<EvaluatedPoint>& trace) {
    std::string csv = "s_ns,r,peak_ghz,peak_value,fwhm_mhz,on_pareto\n";
    for (const auto& pt : trace) {
        csv += format_number(units::s_to_ns(pt.s)) + "," + format_number(pt.ratio_r) + ",";
        if (pt.measured) {
            csv += ghz(pt.metrics.peak_omega) + "," + format_number(pt.metrics.peak_value) + "," +
                   mhz(pt.metrics.fwhm);
        } else {
            csv += "nan,nan,nan";
        }
        csv += pt.on_pareto ? ",true\n" : ",false\n";
    }
    return csv;
}

void describe_point(std::ostream& os, const std::string& prefix, const EvaluatedPoint& pt,
                    double eta) {
    os << prefix << ".s_ns = " << format_number(units::s_to_ns(pt.s)) << "\n";
    os << prefix << ".k = " << format_number(seed_constant * units::pi / (pt.s * eta)) << "\n";
    os << prefix << ".r = " << format_number(pt.ratio_r) << "\n";
    os << prefix << ".peak_ghz = " << ghz(pt.metrics.peak_omega) << "\n";
    os << prefix << ".peak_value = " << format_number(pt.metrics.peak_value) << "\n";
    os << prefix << ".fwhm_mhz = " << mhz(pt.metrics.fwhm) << "\n";
}

}  // namespace

int cmd_optimize(const RunConfig& cfg, const CommandOptions& options, std::ostream& out) {
    if (cfg.scheme.kind == SchemeKind::cw)
        throw ConfigError("config field scheme.kind: optimize needs a resonance scheme, not cw", 0,
                          "scheme.kind");
    const SearchSpace space{cfg.optimizer.s_grid, cfg.optimizer.r_grid, cfg.scheme.kind};

    std::ostringstream summary;
    summary << "# ramsey optimize summary\n";
    summary << "scheme = " << to_string(cfg.scheme.kind) << "\n";
    summary << "p_min = " << format_number(cfg.optimizer.objective.p_min) << "\n";
    summary << "evaluated = " << space.s_grid.size() * space.r_grid.size() << "\n";

    int code = exit_code::ok;
    OptimizationResult result;
    try {
        result = optimize(space, cfg.system, cfg.scheme, cfg.optimizer.plan, cfg.optimizer.objective,
                          options.threads);
        summary << "status = ok\n";
        summary << "pareto_size = " << result.pareto_front.size() << "\n";
        describe_point(summary, "best", result.best, cfg.system.eta);
    } catch (const InfeasibleSearch& e) {
        result = e.partial();
        code = exit_code::infeasible;
        summary << "status = infeasible\n";
        summary << "pareto_size = " << result.pareto_front.size() << "\n";
        if (result.best.measured) describe_point(summary, "best_peak", result.best, cfg.system.eta);
    }
    write_file_atomic(options.out_dir / cfg.output.trace_csv, trace_csv(result.trace));
    write_file_atomic(options.out_dir / cfg.output.summary, summary.str());
    out << summary.str();
    return code;
}

int cmd_validate(const RunConfig& cfg, const CommandOptions& options, std::ostream& out) {
    const auto checks = run_validation(cfg, options.hooks, options.threads);
    const std::string report = format_validation_report(cfg, checks);
    write_file_atomic(options.out_dir / cfg.output.validation_report, report);
    out << report;
    return all_passed(checks) ? exit_code::ok : exit_code::validation;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App cli{"Ramsey-biased transmon spectroscopy simulator", "ramsey"};
    cli.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    unsigned threads = 0;
    std::optional<std::uint64_t> seed;

    auto add_common = [&](CLI::App* sub, bool with_seed) {
        sub->add_option("--config", config_path, "Run configuration file")->check(CLI::ExistingFile);
        sub->add_option("--out", out_dir, "Output directory");
        sub->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");
        if (with_seed) sub->add_option("--seed", seed, "Overrides mc.seed");
    };
    auto* spectrum = cli.add_subcommand("spectrum", "Averaged P_e spectrum and its metrics");
    auto* baseline = cli.add_subcommand("baseline", "CW-detection baseline spectrum");
    auto* optimizer = cli.add_subcommand("optimize", "Grid search over (s, R)");
    auto* validate = cli.add_subcommand("validate", "Run the oracle consistency checks");
    auto* init = cli.add_subcommand("init", "Print (or write to --out) a default configuration");
    for (auto* sub : {spectrum, baseline, optimizer, validate}) add_common(sub, true);
    init->add_option("--out", out_dir, "Directory to write ramsey.cfg into");
    bool init_to_file = false;
    init->callback([&] { init_to_file = init->count("--out") > 0; });

    try {
        cli.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return cli.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        cli.exit(e, out, err);
        return exit_code::config;
    }

    std::size_t shown = 0;
    diagnostics::reset_counts();
    diagnostics::set_handler([&](diagnostics::Severity sev, std::string_view msg) {
        if (sev == diagnostics::Severity::warning && shown++ < 5) err << "warning: " << msg << "\n";
    });
    struct HandlerReset {
        ~HandlerReset() { diagnostics::set_handler({}); }
    } reset;

    try {
        if (init->parsed()) {
            if (init_to_file) {
                write_file_atomic(std::filesystem::path(out_dir) / "ramsey.cfg", config_template());
            } else {
                out << config_template();
            }
            return exit_code::ok;
        }

        RunConfig cfg = config_path.empty() ? default_config() : load_config(config_path);
        if (seed) cfg.mc.rng_seed = *seed;
        CommandOptions options;
        options.out_dir = out_dir;
        options.threads = threads;

        int code = exit_code::ok;
        if (spectrum->parsed()) code = cmd_spectrum(cfg, options, out);
        else if (baseline->parsed()) code = cmd_baseline(cfg, options, out);
        else if (optimizer->parsed()) code = cmd_optimize(cfg, options, out);
        else if (validate->parsed()) code = cmd_validate(cfg, options, out);
        if (shown > 5) err << diagnostics::warning_count() << " diagnostic warnings in total\n";
        return code;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::config;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::config;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return exit_code::domain;
    } catch (const NoPeakError& e) {
        err << "domain error: " << e.what() << "\n";
        return exit_code::domain;
    } catch (const NoCrossingError& e) {
        err << "domain error: " << e.what() << "\n";
        return exit_code::domain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::failure;
    }
}

}  // namespace ramsey::app
