#pragma once

#include <vector>

#include "ramsey/errors.hpp"
#include "ramsey/spectroscopy.hpp"

namespace ramsey {

// Time constant s = 0.68π / (k·η) for each multiple k. The constant places the first
// (negative) minimum of I_s(kη/2) at the cosine argument 2βs = 0.68π.
inline constexpr double seed_constant = 0.68;
std::vector<double> seed_points(double eta, const std::vector<double>& k_values);

// Log-spaced grid of `count` values from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, int count);

struct SearchSpace {
    std::vector<double> s_grid;
    std::vector<double> r_grid;
    SchemeKind scheme = SchemeKind::double_resonance;
};

void validate(const SearchSpace& space);

struct ObjectiveConfig {
    double p_min = 0.3;
};

struct EvaluatedPoint {
    double s = 0.0;
    double ratio_r = 0.0;
    SpectrumMetrics metrics;
    bool measured = false;  // false when metrics could not be extracted (no peak / crossing)
    bool on_pareto = false;
};

struct OptimizationResult {
    EvaluatedPoint best;
    std::vector<EvaluatedPoint> pareto_front;
    std::vector<EvaluatedPoint> trace;  // row-major over (s_grid, r_grid)
};

// True when a is no worse than b in both peak (larger) and fwhm (smaller) and strictly
// better in at least one.
bool dominates(const SpectrumMetrics& a, const SpectrumMetrics& b) noexcept;

// Exhaustive grid search: measure() + metrics() at every (s, R); minimizes fwhm subject to
// peak_value >= p_min, ties broken by larger peak then smaller R. `base` supplies the
// averaging method and CW amplitude; its s and ratio_r are overridden per point.
// Throws InfeasibleError (carrying the best-peak point) when nothing meets the constraint.
OptimizationResult optimize(const SearchSpace& space, const SystemParams& system,
                            const SchemeSpec& base, const SweepPlan& plan,
                            const ObjectiveConfig& objective, unsigned threads = 1);

class InfeasibleSearch : public InfeasibleError {
public:
    InfeasibleSearch(const std::string& what, OptimizationResult partial)
        : InfeasibleError(what), partial_(std::move(partial)) {}
    // best holds the highest-peak measured point.
    const OptimizationResult& partial() const noexcept { return partial_; }

private:
    OptimizationResult partial_;
};

}  // namespace ramsey
