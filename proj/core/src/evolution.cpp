#include "ramsey/evolution.hpp"

#include <cmath>
#include <stdexcept>

namespace ramsey {

namespace {

constexpr complex i_unit{0.0, 1.0};

complex phase(double angle) { return std::polar(1.0, angle); }

}  // namespace

std::vector<Segment> BiasTrain::segments() const {
    std::vector<Segment> out;
    out.reserve(static_cast<std::size_t>(2 * n_res - 1));
    for (int k = 0; k < n_res; ++k) {
        if (k > 0) out.push_back({Regime::dispersive, dispersive_duration()});
        out.push_back({Regime::resonant, tau});
    }
    return out;
}

void validate(const BiasTrain& train) {
    if (train.n_res < 1) throw std::invalid_argument("bias train: n_res must be >= 1");
    if (!(train.tau >= 0.0)) throw std::invalid_argument("bias train: tau must be >= 0");
    if (!(train.ratio_r >= 0.0)) throw std::invalid_argument("bias train: ratio_r must be >= 0");
}

QubitAmplitudes propagate_segment(const QubitAmplitudes& state, const RegimeQuantities& q,
                                  const DriveParams& drive, double tau, double t0) {
    if (tau == 0.0) return state;
    const double s = std::sin(q.lambda * tau);
    const double c = std::cos(q.lambda * tau);
    const double st = q.sin_theta();
    const double ct = q.cos_theta();
    const double w = drive.omega;

    QubitAmplitudes out;
    out.c_e = complex(c, -ct * s) * phase(-0.5 * w * tau) * state.c_e -
              i_unit * (st * s) * phase(-w * (0.5 * tau + t0)) * state.c_g;
    out.c_g = complex(c, ct * s) * phase(0.5 * w * tau) * state.c_g -
              i_unit * (st * s) * phase(w * (0.5 * tau + t0)) * state.c_e;
    return out;
}

QubitAmplitudes resonant_amplitudes(const RegimeQuantities& q, const DriveParams& drive,
                                    double tau) {
    const double s = std::sin(q.lambda * tau);
    const double c = std::cos(q.lambda * tau);
    const double half_wt = 0.5 * drive.omega * tau;
    QubitAmplitudes out;
    out.c_e = -i_unit * (q.sin_theta() * s) * phase(-half_wt);
    out.c_g = complex(c, q.cos_theta() * s) * phase(half_wt);
    return out;
}

QubitAmplitudes dispersive_phase(const QubitAmplitudes& state, double delta_d, double omega,
                                 double t_disp) {
    const double angle = (delta_d + 0.5 * omega) * t_disp;
    return {state.c_e * phase(-angle), state.c_g * phase(angle)};
}

complex ce_double(const RegimeQuantities& q_res, const RegimeQuantities& q_disp,
                  const DriveParams& drive, double tau, double t_disp) {
    const double s = std::sin(q_res.lambda * tau);
    const double c = std::cos(q_res.lambda * tau);
    const double x = q_disp.delta_d * t_disp;
    const double bracket = c * std::cos(x) - q_res.cos_theta() * s * std::sin(x);
    return -2.0 * i_unit * phase(-drive.omega * (tau + 0.5 * t_disp)) * (q_res.sin_theta() * s) *
           bracket;
}

complex ce_triple(const RegimeQuantities& q_res, const RegimeQuantities& q_disp,
                  const DriveParams& drive, double tau, double t_disp) {
    const double s = std::sin(q_res.lambda * tau);
    const double c = std::cos(q_res.lambda * tau);
    const double ct = q_res.cos_theta();
    const double x2 = 2.0 * q_disp.delta_d * t_disp;
    const double cos_2theta = std::cos(2.0 * q_res.theta);
    const double bracket = 2.0 * (c * c - ct * ct * s * s) * std::cos(x2) -
                           2.0 * ct * std::sin(2.0 * q_res.lambda * tau) * std::sin(x2) + c * c +
                           cos_2theta * s * s;
    return -i_unit * phase(-drive.omega * (1.5 * tau + t_disp)) * (q_res.sin_theta() * s) *
           bracket;
}

QubitAmplitudes compose_train(const RegimeQuantities& q_res, const RegimeQuantities& q_disp,
                              const DriveParams& drive, const BiasTrain& train) {
    QubitAmplitudes state = QubitAmplitudes::ground();
    const double t_disp = train.dispersive_duration();
    double t = 0.0;
    for (int k = 0; k < train.n_res; ++k) {
        if (k > 0) {
            state = dispersive_phase(state, q_disp.delta_d, drive.omega, t_disp);
            t += t_disp;
        }
        state = propagate_segment(state, q_res, drive, train.tau, t);
        t += train.tau;
    }
    return state;
}

}  // namespace ramsey
