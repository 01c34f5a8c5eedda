#pragma once

// Two-level transmon model: flux-tuned transition frequency and the detuning /
// mixing-angle quantities consumed by the evolution formulas.

namespace ramsey {

struct TransmonParams {
    double e_c = 0.0;       // charging energy as angular frequency (rad/s, hbar = 1)
    double ej_ratio = 0.0;  // E_J / E_C
    double phi_res = 0.0;   // reduced flux at the resonant bias point
    double phi_disp = 0.0;  // reduced flux at the dispersive bias point
};

struct DriveParams {
    double eta = 0.0;    // effective coupling (rad/s)
    double omega = 0.0;  // probe angular frequency (rad/s)
};

enum class Regime { resonant, dispersive };

struct RegimeQuantities {
    double delta = 0.0;    // Δ = (ω_eg - ω) / 2
    double eta = 0.0;      // coupling used to build lambda / theta
    double lambda = 0.0;   // sqrt(Δ² + η²)
    double theta = 0.0;    // atan2(η, Δ), in (0, π)
    double delta_d = 0.0;  // dispersive detuning Δ_D

    double sin_theta() const noexcept { return eta / lambda; }
    double cos_theta() const noexcept { return delta / lambda; }
    // F = ηΔ/λ² and F' = η/λ, the abbreviations used by the averaged spectra.
    double f() const noexcept { return eta * delta / (lambda * lambda); }
    double f_prime() const noexcept { return eta / lambda; }
};

// Default calibration: E_C/2π = 0.5 GHz, E_J/E_C = 100, φ = 0.46, φ' = 0.49.
TransmonParams default_transmon();

// Throws std::invalid_argument when an invariant of TransmonParams is violated,
// and DomainError when either bias point has a non-positive two-level gap.
void validate(const TransmonParams& params);
void validate(const DriveParams& drive);

// ω_eg(φ) = sqrt(8 E_C E_J |cos πφ|) - E_C. Throws DomainError if the result is <= 0.
double omega_eg(const TransmonParams& params, double phi);

// Resonant quantities (Δ, λ, θ) built from a raw detuning.
RegimeQuantities resonant_from_detuning(double delta, double eta);

// Δ_D = (ω'_eg - ω)/2 + η²/(ω'_eg - ω). Throws SingularDetuningError when ω'_eg == ω.
double dispersive_detuning(double omega_eg_disp, double omega, double eta);

// Resonant regime fills delta/lambda/theta; dispersive regime fills delta_d (and reports a
// warning diagnostic when |ω'_eg - ω| < 10η, where the dispersive approximation degrades).
RegimeQuantities regime_quantities(const TransmonParams& params, const DriveParams& drive,
                                   double phi, Regime regime);

struct RegimePair {
    RegimeQuantities res;
    RegimeQuantities disp;
};

// Both regimes at the bias points stored in params.
RegimePair bias_quantities(const TransmonParams& params, const DriveParams& drive);

}  // namespace ramsey
