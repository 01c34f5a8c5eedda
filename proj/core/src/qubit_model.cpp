#include "ramsey/qubit_model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ramsey/diagnostics.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/units.hpp"

namespace ramsey {

TransmonParams default_transmon() {
    return TransmonParams{units::ghz_to_angular(0.5), 100.0, 0.46, 0.49};
}

void validate(const TransmonParams& params) {
    if (!(params.e_c > 0.0)) throw std::invalid_argument("transmon: e_c must be > 0");
    if (!(params.ej_ratio > 0.0)) throw std::invalid_argument("transmon: ej_ratio must be > 0");
    for (double phi : {params.phi_res, params.phi_disp}) {
        if (!(phi >= 0.0 && phi < 1.0))
            throw std::invalid_argument("transmon: reduced flux must lie in [0, 1)");
    }
    omega_eg(params, params.phi_res);
    omega_eg(params, params.phi_disp);
}

void validate(const DriveParams& drive) {
    if (!(drive.eta > 0.0)) throw std::invalid_argument("drive: eta must be > 0");
    if (!(drive.omega > 0.0)) throw std::invalid_argument("drive: omega must be > 0");
}

double omega_eg(const TransmonParams& params, double phi) {
    const double e_j = params.ej_ratio * params.e_c;
    const double value =
        std::sqrt(8.0 * params.e_c * e_j * std::abs(std::cos(units::pi * phi))) - params.e_c;
    if (!(value > 0.0)) {
        std::ostringstream os;
        os << "omega_eg: no valid two-level gap at reduced flux " << phi;
        throw DomainError(os.str());
    }
    return value;
}

RegimeQuantities resonant_from_detuning(double delta, double eta) {
    RegimeQuantities q;
    q.delta = delta;
    q.eta = eta;
    q.lambda = std::hypot(delta, eta);
    q.theta = std::atan2(eta, delta);
    return q;
}

double dispersive_detuning(double omega_eg_disp, double omega, double eta) {
    const double gap = omega_eg_disp - omega;
    if (gap == 0.0) {
        std::ostringstream os;
        os << "dispersive detuning is singular: omega'_eg equals the probe frequency ("
           << units::angular_to_ghz(omega) << " GHz)";
        throw SingularDetuningError(os.str());
    }
    return 0.5 * gap + eta * eta / gap;
}

RegimeQuantities regime_quantities(const TransmonParams& params, const DriveParams& drive,
                                   double phi, Regime regime) {
    const double w = omega_eg(params, phi);
    if (regime == Regime::resonant) return resonant_from_detuning(0.5 * (w - drive.omega), drive.eta);

    RegimeQuantities q;
    q.eta = drive.eta;
    q.delta_d = dispersive_detuning(w, drive.omega, drive.eta);
    if (std::abs(w - drive.omega) < 10.0 * drive.eta) {
        std::ostringstream os;
        os << "dispersive approximation weak at " << units::angular_to_ghz(drive.omega)
           << " GHz: |omega'_eg - omega| < 10 eta";
        diagnostics::report(diagnostics::Severity::warning, os.str());
    }
    return q;
}

RegimePair bias_quantities(const TransmonParams& params, const DriveParams& drive) {
    return {regime_quantities(params, drive, params.phi_res, Regime::resonant),
            regime_quantities(params, drive, params.phi_disp, Regime::dispersive)};
}

}  // namespace ramsey
