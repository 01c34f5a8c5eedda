#include "validation.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "io.hpp"
#include "ramsey/evolution.hpp"
#include "ramsey/units.hpp"

namespace ramsey::app {

namespace {

// Uniform doubles from raw generator bits, so draws are identical on every standard library.
class Draws {
public:
    explicit Draws(std::uint64_t seed) : rng_(seed) {}
    double uniform(double lo, double hi) { return lo + (hi - lo) * detail::open_unit(rng_); }

private:
    std::mt19937_64 rng_;
};

struct RandomPoint {
    RegimeQuantities res;
    RegimeQuantities disp;
    DriveParams drive;
};

RandomPoint random_point(Draws& d, double delta_over_eta) {
    RandomPoint p;
    const double eta = units::ghz_to_angular(d.uniform(0.02, 0.3));
    p.drive = {eta, units::ghz_to_angular(d.uniform(3.0, 6.0))};
    p.res = resonant_from_detuning(delta_over_eta * eta, eta);
    p.disp.eta = eta;
    const double sign = d.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0;
    p.disp.delta_d = sign * eta * d.uniform(5.0, 30.0);
    return p;
}

CheckResult composition_check(const std::string& name, int n_res, const RunConfig& cfg) {
    Draws d(cfg.mc.rng_seed + static_cast<std::uint64_t>(n_res));
    CheckResult r{name, false, 0.0, 1e-10, cfg.validation.composition_draws};
    for (int k = 0; k < r.trials; ++k) {
        const auto p = random_point(d, d.uniform(-5.0, 5.0));
        const double tau = d.uniform(0.0, 20.0) / p.res.eta;
        const double ratio = d.uniform(0.0, 0.5);
        const complex closed = n_res == 2 ? ce_double(p.res, p.disp, p.drive, tau, ratio * tau)
                                          : ce_triple(p.res, p.disp, p.drive, tau, ratio * tau);
        const complex composed = compose_train(p.res, p.disp, p.drive, {n_res, tau, ratio}).c_e;
        r.measured = std::max(r.measured, std::abs(closed - composed));
    }
    r.pass = r.measured <= r.tolerance;
    return r;
}

CheckResult unitarity_check(const RunConfig& cfg) {
    Draws d(cfg.mc.rng_seed + 11);
    CheckResult r{"unitarity", false, 0.0, 1e-12, cfg.validation.composition_draws};
    for (int k = 0; k < r.trials; ++k) {
        const auto p = random_point(d, d.uniform(-5.0, 5.0));
        const int n_res = 1 + k % 5;
        const double tau = d.uniform(0.0, 20.0) / p.res.eta;
        const auto state = compose_train(p.res, p.disp, p.drive, {n_res, tau, d.uniform(0.0, 0.5)});
        r.measured = std::max(r.measured, std::abs(state.norm_squared() - 1.0));
    }
    r.pass = r.measured <= r.tolerance;
    return r;
}

CheckResult i_s_check() {
    CheckResult r{"i_s_quadrature_vs_dawson", false, 0.0, 1e-9, 1000};
    for (int k = 0; k < r.trials; ++k) {
        const double y = 10.0 * units::pi * k / (r.trials - 1);
        r.measured = std::max(r.measured, std::abs(i_s_quadrature(y, 1.0) - i_s_dawson(y, 1.0)));
    }
    r.pass = r.measured <= r.tolerance;
    return r;
}

// Ratio |closed - mc| / max(3 σ, 1e-3); passes when every draw is <= 1.
CheckResult mc_check(const std::string& name, int n_res, const DoubleAverageFn& closed,
                     bool resonant_only, const RunConfig& cfg, unsigned threads) {
    Draws d(cfg.mc.rng_seed + 100 + static_cast<std::uint64_t>(n_res));
    CheckResult r{name, false, 0.0, 1.0, cfg.validation.mc_draws};
    for (int k = 0; k < r.trials; ++k) {
        const auto p = random_point(d, resonant_only ? 0.0 : d.uniform(-2.0, 2.0));
        const AveragingParams avg{d.uniform(0.3, 3.0) / p.res.eta, d.uniform(0.0, 0.2), n_res};
        McConfig mc = cfg.mc;
        mc.rng_seed = cfg.mc.rng_seed + static_cast<std::uint64_t>(k);
        const auto est = mc_oracle(p.res, p.disp, p.drive, avg, mc, threads);
        const double allowed = std::max(3.0 * est.std_error, 1e-3);
        r.measured = std::max(r.measured, std::abs(closed(p.res, p.disp, avg).raw - est.mean) / allowed);
    }
    r.pass = r.measured <= r.tolerance;
    return r;
}

CheckResult triple_resonant_check(const RunConfig& cfg, const DoubleAverageFn& closed) {
    Draws d(cfg.mc.rng_seed + 200);
    CheckResult r{"triple_closed_vs_numeric_at_resonance", false, 0.0, 1e-6, cfg.validation.mc_draws};
    for (int k = 0; k < r.trials; ++k) {
        const auto p = random_point(d, 0.0);
        const AveragingParams avg{d.uniform(0.3, 3.0) / p.res.eta, d.uniform(0.0, 0.2), 3};
        r.measured = std::max(
            r.measured, std::abs(closed(p.res, p.disp, avg).raw - pe_avg_triple_numeric(p.res, p.disp, avg).raw));
    }
    r.pass = r.measured <= r.tolerance;
    return r;
}

}  // namespace

std::vector<CheckResult> run_validation(const RunConfig& cfg, const ValidationHooks& hooks,
                                        unsigned threads) {
    std::vector<CheckResult> out;
    out.push_back(composition_check("closed_vs_composition_double", 2, cfg));
    out.push_back(composition_check("closed_vs_composition_triple", 3, cfg));
    out.push_back(unitarity_check(cfg));
    out.push_back(i_s_check());
    out.push_back(mc_check("mc_vs_closed_double", 2, hooks.double_closed, false, cfg, threads));
    out.push_back(mc_check("mc_vs_closed_triple_at_resonance", 3, hooks.triple_closed, true, cfg, threads));
    out.push_back(triple_resonant_check(cfg, hooks.triple_closed));
    return out;
}

bool all_passed(const std::vector<CheckResult>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

std::string format_validation_report(const RunConfig& cfg, const std::vector<CheckResult>& checks) {
    std::ostringstream os;
    os << "# ramsey validation report\n";
    os << "seed = " << cfg.mc.rng_seed << "\n";
    os << "mc_samples = " << cfg.mc.n_samples << "\n";
    os << "mc_partitions = " << cfg.mc.partitions << "\n";
    for (const auto& c : checks) {
        os << c.name << ".status = " << (c.pass ? "pass" : "fail") << "\n";
        os << c.name << ".measured = " << format_number(c.measured) << "\n";
        os << c.name << ".tolerance = " << format_number(c.tolerance) << "\n";
        os << c.name << ".trials = " << c.trials << "\n";
    }
    os << "overall = " << (all_passed(checks) ? "pass" : "fail") << "\n";
    return os.str();
}

}  // namespace ramsey::app
