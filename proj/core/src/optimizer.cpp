#include "ramsey/optimizer.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ramsey/errors.hpp"
#include "ramsey/parallel.hpp"
#include "ramsey/units.hpp"

namespace ramsey {

std::vector<double> seed_points(double eta, const std::vector<double>& k_values) {
    if (!(eta > 0.0)) throw std::invalid_argument("seed_points: eta must be > 0");
    std::vector<double> out;
    out.reserve(k_values.size());
    for (double k : k_values) {
        if (!(k > 0.0)) throw std::invalid_argument("seed_points: k must be > 0");
        out.push_back(seed_constant * units::pi / (k * eta));
    }
    return out;
}

std::vector<double> log_grid(double lo, double hi, int count) {
    if (count < 1 || !(lo > 0.0) || !(hi >= lo))
        throw std::invalid_argument("log_grid: need count >= 1 and 0 < lo <= hi");
    if (count == 1) return {lo};
    std::vector<double> out(static_cast<std::size_t>(count));
    const double step = std::log(hi / lo) / (count - 1);
    for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = lo * std::exp(step * i);
    out.back() = hi;
    return out;
}

void validate(const SearchSpace& space) {
    if (space.s_grid.empty() || space.r_grid.empty())
        throw std::invalid_argument("search space: grids must be non-empty");
    for (double s : space.s_grid)
        if (!(s > 0.0)) throw std::invalid_argument("search space: s values must be > 0");
    for (double r : space.r_grid)
        if (!(r >= 0.0)) throw std::invalid_argument("search space: R values must be >= 0");
    if (space.scheme == SchemeKind::cw)
        throw std::invalid_argument("search space: cw has no duration parameters");
}

bool dominates(const SpectrumMetrics& a, const SpectrumMetrics& b) noexcept {
    const bool no_worse = a.peak_value >= b.peak_value && a.fwhm <= b.fwhm;
    const bool better = a.peak_value > b.peak_value || a.fwhm < b.fwhm;
    return no_worse && better;
}

namespace {

// Strict weak "is preferred over" for feasible points.
bool preferred(const EvaluatedPoint& a, const EvaluatedPoint& b) {
    if (a.metrics.fwhm != b.metrics.fwhm) return a.metrics.fwhm < b.metrics.fwhm;
    if (a.metrics.peak_value != b.metrics.peak_value)
        return a.metrics.peak_value > b.metrics.peak_value;
    return a.ratio_r < b.ratio_r;
}

}  // namespace

OptimizationResult optimize(const SearchSpace& space, const SystemParams& system,
                            const SchemeSpec& base, const SweepPlan& plan,
                            const ObjectiveConfig& objective, unsigned threads) {
    validate(space);
    const std::size_t n_r = space.r_grid.size();
    const std::size_t count = space.s_grid.size() * n_r;

    OptimizationResult result;
    result.trace.resize(count);
    // Points run one at a time; the grid sweep inside each point uses the threads.
    for (std::size_t idx = 0; idx < count; ++idx) {
        EvaluatedPoint& pt = result.trace[idx];
        pt.s = space.s_grid[idx / n_r];
        pt.ratio_r = space.r_grid[idx % n_r];
        SchemeSpec scheme = base;
        scheme.kind = space.scheme;
        scheme.s = pt.s;
        scheme.ratio_r = pt.ratio_r;
        try {
            pt.metrics = metrics(measure(system, scheme, plan, threads));
            pt.measured = true;
        } catch (const NoPeakError&) {
        } catch (const NoCrossingError&) {
        }
    }

    for (auto& pt : result.trace) {
        if (!pt.measured) continue;
        pt.on_pareto = true;
        for (const auto& other : result.trace) {
            if (other.measured && dominates(other.metrics, pt.metrics)) {
                pt.on_pareto = false;
                break;
            }
        }
        if (pt.on_pareto) result.pareto_front.push_back(pt);
    }

    const EvaluatedPoint* best = nullptr;
    const EvaluatedPoint* best_peak = nullptr;
    for (const auto& pt : result.trace) {
        if (!pt.measured) continue;
        if (best_peak == nullptr || pt.metrics.peak_value > best_peak->metrics.peak_value)
            best_peak = &pt;
        if (pt.metrics.peak_value < objective.p_min) continue;
        if (best == nullptr || preferred(pt, *best)) best = &pt;
    }

    if (best == nullptr) {
        std::ostringstream os;
        os << "optimize: no point reaches peak_value >= " << objective.p_min;
        if (best_peak != nullptr) {
            os << " (best peak " << best_peak->metrics.peak_value << " at s = "
               << units::s_to_ns(best_peak->s) << " ns, R = " << best_peak->ratio_r << ")";
            result.best = *best_peak;
        }
        throw InfeasibleSearch(os.str(), std::move(result));
    }
    result.best = *best;
    return result;
}

}  // namespace ramsey
