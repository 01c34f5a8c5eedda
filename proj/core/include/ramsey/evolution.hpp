#pragma once

#include <complex>
#include <vector>

#include "ramsey/qubit_model.hpp"

namespace ramsey {

using complex = std::complex<double>;

// Laboratory-frame state coefficients (C_e, C_g).
struct QubitAmplitudes {
    complex c_e{0.0, 0.0};
    complex c_g{1.0, 0.0};

    static QubitAmplitudes ground() noexcept { return {}; }
    double norm_squared() const noexcept { return std::norm(c_e) + std::norm(c_g); }
    double excited_probability() const noexcept { return std::norm(c_e); }
};

struct Segment {
    Regime regime = Regime::resonant;
    double duration = 0.0;
};

// n_res resonant segments of length tau interleaved with n_res - 1 dispersive
// segments of length ratio_r * tau.
struct BiasTrain {
    int n_res = 2;
    double tau = 0.0;
    double ratio_r = 0.0;

    double dispersive_duration() const noexcept { return ratio_r * tau; }
    double total_duration() const noexcept { return (n_res + (n_res - 1) * ratio_r) * tau; }
    std::vector<Segment> segments() const;
};

void validate(const BiasTrain& train);

// Exact resonant-regime update over [t0, t0 + tau]:
// C(t0+tau) = exp(iω(t0+tau)σz/2) U exp(-iλτσz) U† exp(-iωt0σz/2) C(t0).
QubitAmplitudes propagate_segment(const QubitAmplitudes& state, const RegimeQuantities& q,
                                  const DriveParams& drive, double tau, double t0);

// Ground state at t0 = 0 after one resonant segment.
QubitAmplitudes resonant_amplitudes(const RegimeQuantities& q, const DriveParams& drive,
                                    double tau);

// Pure phase evolution in the dispersive regime: C_{e,g} *= exp(∓i(Δ_D + ω/2)T).
QubitAmplitudes dispersive_phase(const QubitAmplitudes& state, double delta_d, double omega,
                                 double t_disp);

// Closed-form excited amplitude after τ–T–τ.
complex ce_double(const RegimeQuantities& q_res, const RegimeQuantities& q_disp,
                  const DriveParams& drive, double tau, double t_disp);

// Closed-form excited amplitude after τ–T–τ–T–τ.
complex ce_triple(const RegimeQuantities& q_res, const RegimeQuantities& q_disp,
                  const DriveParams& drive, double tau, double t_disp);

// Step-by-step propagation of the ground state through an arbitrary train,
// threading the elapsed time through every segment.
QubitAmplitudes compose_train(const RegimeQuantities& q_res, const RegimeQuantities& q_disp,
                              const DriveParams& drive, const BiasTrain& train);

}  // namespace ramsey
