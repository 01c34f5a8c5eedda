#include "ramsey/spectroscopy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ramsey/errors.hpp"
#include "ramsey/parallel.hpp"
#include "ramsey/units.hpp"

namespace ramsey {

std::string_view to_string(SchemeKind kind) noexcept {
    switch (kind) {
        case SchemeKind::cw: return "cw";
        case SchemeKind::double_resonance: return "double";
        case SchemeKind::triple_resonance: return "triple";
        case SchemeKind::general: return "general";
    }
    return "unknown";
}

int SchemeSpec::resonances() const noexcept {
    switch (kind) {
        case SchemeKind::cw: return 1;
        case SchemeKind::double_resonance: return 2;
        case SchemeKind::triple_resonance: return 3;
        case SchemeKind::general: return n_res;
    }
    return n_res;
}

void validate(const SchemeSpec& scheme) {
    if (scheme.kind == SchemeKind::cw) {
        if (!(scheme.cw_amplitude > 0.0))
            throw std::invalid_argument("scheme: cw_amplitude must be > 0");
        return;
    }
    if (scheme.kind == SchemeKind::general && scheme.n_res < 1)
        throw std::invalid_argument("scheme: general scheme needs n_res >= 1");
    validate(scheme.averaging());
}

std::vector<double> frequency_grid_ghz(double min_ghz, double max_ghz, double step_ghz) {
    if (!(max_ghz > min_ghz) || !(step_ghz > 0.0)) {
        std::ostringstream os;
        os << "empty grid: [" << min_ghz << ", " << max_ghz << "] GHz with step " << step_ghz;
        throw std::invalid_argument(os.str());
    }
    const auto n = static_cast<std::size_t>(std::floor((max_ghz - min_ghz) / step_ghz + 1e-9)) + 1;
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i)
        grid[i] = units::ghz_to_angular(min_ghz + static_cast<double>(i) * step_ghz);
    return grid;
}

double averaged_probability(const SystemParams& system, const SchemeSpec& scheme, double omega) {
    const DriveParams drive{system.eta, omega};
    const auto q_res =
        regime_quantities(system.transmon, drive, system.transmon.phi_res, Regime::resonant);
    if (scheme.kind == SchemeKind::cw) {
        const double eta2 = system.eta * system.eta;
        return scheme.cw_amplitude * eta2 / (q_res.delta * q_res.delta + eta2);
    }
    const auto q_disp =
        regime_quantities(system.transmon, drive, system.transmon.phi_disp, Regime::dispersive);
    const AveragingParams avg = scheme.averaging();
    switch (scheme.kind) {
        case SchemeKind::double_resonance:
            return scheme.method == AverageMethod::closed_form
                       ? pe_avg_double(q_res, q_disp, avg).value
                       : pe_avg_general_numeric(q_res, q_disp, drive, avg).value;
        case SchemeKind::triple_resonance:
            return scheme.method == AverageMethod::closed_form
                       ? pe_avg_triple_closed(q_res, q_disp, avg).value
                       : pe_avg_triple_numeric(q_res, q_disp, avg).value;
        case SchemeKind::general:
        case SchemeKind::cw:
            break;
    }
    return pe_avg_general_numeric(q_res, q_disp, drive, avg).value;
}

Spectrum sweep(const SystemParams& system, const SchemeSpec& scheme,
               const std::vector<double>& omega_grid, unsigned threads) {
    validate(system.transmon);
    validate(scheme);
    for (std::size_t i = 1; i < omega_grid.size(); ++i) {
        if (!(omega_grid[i] > omega_grid[i - 1]))
            throw std::invalid_argument("sweep: frequency grid must be strictly increasing");
    }

    Spectrum out;
    out.scheme_tag = scheme.kind;
    out.system = system;
    out.scheme = scheme;
    out.points.resize(omega_grid.size());
    parallel_for(omega_grid.size(), threads, [&](std::size_t i) {
        const double omega = omega_grid[i];
        try {
            out.points[i] = {omega, averaged_probability(system, scheme, omega)};
        } catch (const DomainError& e) {
            std::ostringstream os;
            os << e.what() << " [grid point " << i << ", omega = " << units::angular_to_ghz(omega)
               << " GHz]";
            throw DomainError(os.str());
        }
    });
    return out;
}

Spectrum cw_baseline(const SystemParams& system, const std::vector<double>& omega_grid,
                     double amplitude) {
    SchemeSpec cw;
    cw.kind = SchemeKind::cw;
    cw.cw_amplitude = amplitude;
    return sweep(system, cw, omega_grid, 1);
}

namespace {

// Vertex of the parabola through three points (x0 < x1 < x2, y1 the largest).
std::pair<double, double> parabola_vertex(double x0, double y0, double x1, double y1, double x2,
                                          double y2) {
    const double d01 = (y1 - y0) / (x1 - x0);
    const double d12 = (y2 - y1) / (x2 - x1);
    const double curvature = (d12 - d01) / (x2 - x0);
    if (!(curvature < 0.0)) return {x1, y1};
    const double slope_mid = d01 - curvature * (x0 + x1);  // y' = slope_mid + 2·curvature·x
    const double xv = std::clamp(-slope_mid / (2.0 * curvature), x0, x2);
    const double yv = y1 + (xv - x1) * (d01 + curvature * (xv - x0));
    return {xv, std::max(yv, y1)};
}

double interpolate_crossing(const SpectrumPoint& a, const SpectrumPoint& b, double level) {
    if (b.p_e == a.p_e) return 0.5 * (a.omega + b.omega);
    return a.omega + (level - a.p_e) * (b.omega - a.omega) / (b.p_e - a.p_e);
}

}  // namespace

SpectrumMetrics metrics(const Spectrum& spectrum, const Spectrum* reference) {
    const auto& pts = spectrum.points;
    if (pts.size() < 3) throw NoPeakError("metrics: spectrum needs at least 3 points");
    const auto max_it = std::max_element(pts.begin(), pts.end(),
                                         [](const auto& a, const auto& b) { return a.p_e < b.p_e; });
    const auto imax = static_cast<std::size_t>(max_it - pts.begin());
    if (imax == 0 || imax + 1 == pts.size()) {
        std::ostringstream os;
        os << "metrics: maximum at grid boundary (" << units::angular_to_ghz(max_it->omega)
           << " GHz)";
        throw NoPeakError(os.str());
    }

    SpectrumMetrics m;
    const auto [xv, yv] = parabola_vertex(pts[imax - 1].omega, pts[imax - 1].p_e, pts[imax].omega,
                                          pts[imax].p_e, pts[imax + 1].omega, pts[imax + 1].p_e);
    m.peak_omega = xv;
    m.peak_value = yv;

    const double half = 0.5 * m.peak_value;
    std::size_t j = imax;
    while (j > 0 && pts[j].p_e > half) --j;
    if (pts[j].p_e > half) throw NoCrossingError(Side::left, "metrics: no half-max crossing below the peak");
    m.half_max_left = interpolate_crossing(pts[j], pts[j + 1], half);

    std::size_t k = imax;
    while (k + 1 < pts.size() && pts[k].p_e > half) ++k;
    if (pts[k].p_e > half) throw NoCrossingError(Side::right, "metrics: no half-max crossing above the peak");
    m.half_max_right = interpolate_crossing(pts[k - 1], pts[k], half);
    m.fwhm = m.half_max_right - m.half_max_left;

    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
        if (i == imax) continue;
        const double w = pts[i].omega;
        if (w >= m.half_max_left && w <= m.half_max_right) continue;
        if (pts[i].p_e > pts[i - 1].p_e && pts[i].p_e >= pts[i + 1].p_e &&
            pts[i].p_e >= fringe_detection_fraction * m.peak_value && pts[i].p_e < m.peak_value) {
            m.fringes.push_back({w, pts[i].p_e});
        }
    }

    if (reference != nullptr) m.shift_vs_ref = m.peak_omega - metrics(*reference).peak_omega;
    return m;
}

Spectrum measure(const SystemParams& system, const SchemeSpec& scheme, const SweepPlan& plan,
                 unsigned threads) {
    Spectrum coarse =
        sweep(system, scheme, frequency_grid_ghz(plan.min_ghz, plan.max_ghz, plan.coarse_step_ghz),
              threads);
    if (!plan.refine) return coarse;

    SpectrumMetrics first;
    try {
        first = metrics(coarse);
    } catch (const NoPeakError&) {
        return coarse;
    } catch (const NoCrossingError&) {
        return coarse;
    }

    const double peak_ghz = units::angular_to_ghz(first.peak_omega);
    const double fwhm_ghz = units::angular_to_ghz(first.fwhm);
    const double lo = std::max(plan.min_ghz, peak_ghz - 2.0 * fwhm_ghz);
    const double hi = std::min(plan.max_ghz, peak_ghz + 2.0 * fwhm_ghz);
    const double step = plan.fine_step_ghz;
    const auto j_lo = static_cast<long>(std::ceil((lo - plan.min_ghz) / step - 1e-9));
    const auto j_hi = static_cast<long>(std::floor((hi - plan.min_ghz) / step + 1e-9));
    if (j_hi - j_lo < 2) return coarse;

    std::vector<double> fine_grid;
    fine_grid.reserve(static_cast<std::size_t>(j_hi - j_lo + 1));
    for (long j = j_lo; j <= j_hi; ++j)
        fine_grid.push_back(units::ghz_to_angular(plan.min_ghz + static_cast<double>(j) * step));
    const Spectrum fine = sweep(system, scheme, fine_grid, threads);

    const double fine_lo = fine_grid.front();
    const double fine_hi = fine_grid.back();
    Spectrum merged = coarse;
    merged.points.clear();
    for (const auto& p : coarse.points)
        if (p.omega < fine_lo) merged.points.push_back(p);
    merged.points.insert(merged.points.end(), fine.points.begin(), fine.points.end());
    for (const auto& p : coarse.points)
        if (p.omega > fine_hi) merged.points.push_back(p);
    return merged;
}

double fit_charging_energy(const SystemParams& system, const SchemeSpec& scheme,
                           const SweepPlan& plan, double target_peak, unsigned threads) {
    SystemParams trial = system;
    for (int it = 0; it < 8; ++it) {
        const double peak = metrics(measure(trial, scheme, plan, threads)).peak_omega;
        if (std::abs(peak - target_peak) < units::ghz_to_angular(1e-6)) break;
        // The peak tracks ω_eg, which is linear in E_C at fixed E_J/E_C.
        trial.transmon.e_c *= target_peak / peak;
    }
    return trial.transmon.e_c;
}

}  // namespace ramsey
