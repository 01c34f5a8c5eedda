#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "ramsey/averaging.hpp"
#include "ramsey/qubit_model.hpp"

namespace ramsey {

enum class SchemeKind { cw, double_resonance, triple_resonance, general };

std::string_view to_string(SchemeKind kind) noexcept;

// How triple-resonance (and general) averages are evaluated. The double-resonance closed
// form is exact, so `numeric` there only swaps in the direct quadrature.
enum class AverageMethod { closed_form, numeric };

struct SystemParams {
    TransmonParams transmon = default_transmon();
    double eta = 0.0;  // rad/s
};

struct SchemeSpec {
    SchemeKind kind = SchemeKind::double_resonance;
    int n_res = 2;  // used by SchemeKind::general; implied for the other kinds
    double s = 0.0;
    double ratio_r = 0.0;
    AverageMethod method = AverageMethod::closed_form;
    double cw_amplitude = 0.5;

    int resonances() const noexcept;
    AveragingParams averaging() const noexcept { return {s, ratio_r, resonances()}; }
};

void validate(const SchemeSpec& scheme);

struct SpectrumPoint {
    double omega = 0.0;  // rad/s
    double p_e = 0.0;
};

struct Spectrum {
    std::vector<SpectrumPoint> points;
    SchemeKind scheme_tag = SchemeKind::double_resonance;
    SystemParams system;
    SchemeSpec scheme;
};

struct Fringe {
    double omega = 0.0;
    double height = 0.0;
};

struct SpectrumMetrics {
    double peak_omega = 0.0;
    double peak_value = 0.0;
    double fwhm = 0.0;
    double half_max_left = 0.0;
    double half_max_right = 0.0;
    std::optional<double> shift_vs_ref;
    std::vector<Fringe> fringes;
};

// Fraction of the peak height a secondary local maximum needs to count as a fringe.
inline constexpr double fringe_detection_fraction = 0.01;

// Uniform grid min, min + step, ... up to max (inclusive within rounding), in rad/s.
// Throws std::invalid_argument("empty grid ...") when max <= min or step <= 0.
std::vector<double> frequency_grid_ghz(double min_ghz, double max_ghz, double step_ghz);

// Averaged excited-state probability at one probe frequency.
double averaged_probability(const SystemParams& system, const SchemeSpec& scheme, double omega);

// Evaluates every grid point independently (in parallel when threads != 1); output order
// follows the grid. Domain errors are rethrown annotated with the offending frequency.
Spectrum sweep(const SystemParams& system, const SchemeSpec& scheme,
               const std::vector<double>& omega_grid, unsigned threads = 1);

// Time-averaged resonant Rabi line A·η²/(Δ² + η²).
Spectrum cw_baseline(const SystemParams& system, const std::vector<double>& omega_grid,
                     double amplitude = 0.5);

SpectrumMetrics metrics(const Spectrum& spectrum, const Spectrum* reference = nullptr);

struct SweepPlan {
    double min_ghz = 3.5;
    double max_ghz = 5.5;
    double coarse_step_ghz = 0.001;
    bool refine = true;
    double fine_step_ghz = 0.0001;
};

// Coarse sweep over the window followed by a fine sweep over peak ± 2·FWHM; the fine points
// replace the coarse ones inside the refined interval. Falls back to the coarse spectrum when
// no FWHM can be measured on it.
Spectrum measure(const SystemParams& system, const SchemeSpec& scheme, const SweepPlan& plan,
                 unsigned threads = 1);

// Charging energy (rad/s) for which the measured peak lands on target_peak (rad/s).
double fit_charging_energy(const SystemParams& system, const SchemeSpec& scheme,
                           const SweepPlan& plan, double target_peak, unsigned threads = 1);

}  // namespace ramsey
