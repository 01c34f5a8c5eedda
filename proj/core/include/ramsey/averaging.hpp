#pragma once

// Maxwell-weighted ensemble averages of the excited-state probability.
//
// The duration parameter is τ = s·x with x drawn from the density 2x³e^{-x²}; every
// oscillatory term reduces to the moment I_s(β) = ∫₀^∞ e^{-x²} x³ cos(2βsx) dx.

#include <cstdint>

#include "ramsey/evolution.hpp"
#include "ramsey/qubit_model.hpp"

namespace ramsey {

struct AveragingParams {
    double s = 0.0;        // Maxwell time constant (s); τ = s·x
    double ratio_r = 0.0;  // T = R·τ
    int n_res = 2;         // 2 = double resonance, 3 = triple resonance
};

void validate(const AveragingParams& avg);

// Integration cut-off: the Maxwell integrand is below 1e-26 beyond this point.
inline constexpr double maxwell_cutoff = 8.0;

// Unnormalized density e^{-x²}x³ (integrates to 1/2).
double maxwell_pdf(double x);

// I_s by adaptive Gauss–Kronrod quadrature on [0, 8] (absolute tolerance 1e-10).
double i_s_quadrature(double beta, double s);

// I_s in closed form, (1 - y²)/2 - (3y/2 - y³)·D(y) with y = βs and D the Dawson integral.
double i_s_dawson(double beta, double s);

// Default evaluation path (closed form).
inline double i_s(double beta, double s) { return i_s_dawson(beta, s); }

// Location y* = βs of the global minimum of I_s over (0, y_max].
double i_s_argmin(double y_max);

// Averaged probability with the unclamped value kept for consistency diagnostics.
struct AveragedProbability {
    double value = 0.0;  // clamped to [0, 1]
    double raw = 0.0;
};

// Tolerance beyond [0, 1] tolerated before a formula-consistency warning is raised.
inline constexpr double probability_range_tolerance = 1e-6;

// Double-resonance closed form (constant term plus seven I_s terms).
AveragedProbability pe_avg_double(const RegimeQuantities& q_res, const RegimeQuantities& q_disp,
                                  const AveragingParams& avg);

// Triple-resonance close-resonance closed form (cos θ terms dropped; exact at Δ = 0).
AveragedProbability pe_avg_triple_closed(const RegimeQuantities& q_res,
                                         const RegimeQuantities& q_disp,
                                         const AveragingParams& avg);

// Triple-resonance average by direct quadrature of 2x³e^{-x²}|C_e(τ = sx, T = Rsx)|².
AveragedProbability pe_avg_triple_numeric(const RegimeQuantities& q_res,
                                          const RegimeQuantities& q_disp,
                                          const AveragingParams& avg);

// Any n_res by direct quadrature over the step-by-step composition.
AveragedProbability pe_avg_general_numeric(const RegimeQuantities& q_res,
                                           const RegimeQuantities& q_disp,
                                           const DriveParams& drive,
                                           const AveragingParams& avg);

struct McConfig {
    std::int64_t n_samples = 100000;
    std::uint64_t rng_seed = 42;
    int partitions = 8;  // fixed split of the sample budget; independent of thread count
};

void validate(const McConfig& mc);

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
};

// Derives the generator seed of one partition from the run seed.
std::uint64_t partition_seed(std::uint64_t seed, int partition) noexcept;

// Draws x with density 2x³e^{-x²}: x = sqrt(u), u ~ Gamma(2, 1).
template <class Urbg>
double sample_maxwell(Urbg& rng);

// Brute-force average of |c_e|² over sampled durations using compose_train.
// The result depends only on (seed, n_samples, partitions), never on `threads`.
McEstimate mc_oracle(const RegimeQuantities& q_res, const RegimeQuantities& q_disp,
                     const DriveParams& drive, const AveragingParams& avg, const McConfig& mc,
                     unsigned threads = 1);

}  // namespace ramsey

#include "ramsey/detail/maxwell_sampling.hpp"
