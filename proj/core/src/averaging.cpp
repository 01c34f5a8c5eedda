#include "ramsey/averaging.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_dawson.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "ramsey/diagnostics.hpp"
#include "ramsey/parallel.hpp"
#include "ramsey/quadrature.hpp"
#include "ramsey/units.hpp"

namespace ramsey {

namespace {

double dawson(double y) {
    gsl_sf_result r;
    const int status = gsl_sf_dawson_e(y, &r);
    if (status != GSL_SUCCESS) throw std::runtime_error("dawson: GSL evaluation failed");
    return r.val;
}

AveragedProbability checked(double raw, const char* what) {
    if (raw < -probability_range_tolerance || raw > 1.0 + probability_range_tolerance) {
        std::ostringstream os;
        os << what << ": averaged probability " << raw << " outside [0, 1]";
        diagnostics::report(diagnostics::Severity::warning, os.str());
    }
    return {std::clamp(raw, 0.0, 1.0), raw};
}

// Panel count resolving the fastest oscillation of |c_e|² in x at about half a period per panel.
int oscillation_panels(const RegimeQuantities& q_res, const RegimeQuantities& q_disp,
                       const AveragingParams& avg) {
    const double rate = avg.s * (2.0 * avg.n_res * q_res.lambda +
                                 2.0 * (avg.n_res - 1) * avg.ratio_r * std::abs(q_disp.delta_d));
    const double half_periods = maxwell_cutoff * rate / units::pi;
    return std::clamp(static_cast<int>(std::ceil(half_periods)), 8, 4000);
}

template <class Probability>
AveragedProbability average_numeric(Probability&& prob_at_tau, const RegimeQuantities& q_res,
                                    const RegimeQuantities& q_disp, const AveragingParams& avg,
                                    const char* what) {
    auto integrand = [&](double x) {
        return 2.0 * x * x * x * std::exp(-x * x) * prob_at_tau(avg.s * x);
    };
    quadrature::Options opts;
    opts.abs_tol = 1e-8;
    opts.initial_panels = oscillation_panels(q_res, q_disp, avg);
    const auto result = quadrature::integrate(integrand, 0.0, maxwell_cutoff, opts);
    if (!result.converged) {
        std::ostringstream os;
        os << what << ": quadrature did not reach tolerance (error estimate " << result.abs_error
           << ")";
        diagnostics::report(diagnostics::Severity::warning, os.str());
    }
    return checked(result.value, what);
}

std::uint64_t splitmix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

struct RunningMoments {
    std::int64_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double value) {
        ++n;
        const double d = value - mean;
        mean += d / static_cast<double>(n);
        m2 += d * (value - mean);
    }

    void merge(const RunningMoments& other) {
        if (other.n == 0) return;
        if (n == 0) {
            *this = other;
            return;
        }
        const double total = static_cast<double>(n + other.n);
        const double d = other.mean - mean;
        mean += d * static_cast<double>(other.n) / total;
        m2 += other.m2 + d * d * static_cast<double>(n) * static_cast<double>(other.n) / total;
        n += other.n;
    }
};

}  // namespace

void validate(const AveragingParams& avg) {
    if (!(avg.s > 0.0)) throw std::invalid_argument("averaging: s must be > 0");
    if (!(avg.ratio_r >= 0.0)) throw std::invalid_argument("averaging: ratio_r must be >= 0");
    if (avg.n_res < 1) throw std::invalid_argument("averaging: n_res must be >= 1");
}

void validate(const McConfig& mc) {
    if (mc.n_samples < 1) throw std::invalid_argument("mc: n_samples must be >= 1");
    if (mc.partitions < 1) throw std::invalid_argument("mc: partitions must be >= 1");
}

double maxwell_pdf(double x) { return std::exp(-x * x) * x * x * x; }

double i_s_quadrature(double beta, double s) {
    const double k = 2.0 * beta * s;
    auto integrand = [k](double x) { return maxwell_pdf(x) * std::cos(k * x); };
    quadrature::Options opts;
    opts.abs_tol = 1e-10;
    opts.initial_panels =
        std::clamp(static_cast<int>(std::ceil(maxwell_cutoff * std::abs(k) / units::pi)), 4, 4000);
    return quadrature::integrate(integrand, 0.0, maxwell_cutoff, opts).value;
}

namespace {

// Beyond this the closed form cancels two terms of size y²/2; the asymptotic series
// Σ_{m≥2} (m−1)(2m−1)!!/2^{m+1} y^{−2m} is used instead.
constexpr double i_s_asymptotic_from = 10.0;

double i_s_asymptotic(double y) {
    const double inv2 = 1.0 / (y * y);
    double a = 0.375;  // (2m−1)!!/2^{m+1} at m = 2
    double p = inv2 * inv2;
    double sum = 0.0;
    for (int m = 2; m < 200; ++m) {
        const double term = (m - 1) * a * p;
        sum += term;
        if (term < 1e-18 * sum) break;
        a *= (2.0 * m + 1.0) / 2.0;
        p *= inv2;
    }
    return sum;
}

// dI_s/dy from the closed form.
double i_s_slope(double y) {
    const double y2 = y * y;
    return y * y2 - 2.5 * y + dawson(y) * (6.0 * y2 - 1.5 - 2.0 * y2 * y2);
}

}  // namespace

double i_s_dawson(double beta, double s) {
    const double y = std::abs(beta * s);
    if (y >= i_s_asymptotic_from) return i_s_asymptotic(y);
    const double y2 = y * y;
    return 0.5 * (1.0 - y2) - (1.5 * y - y * y2) * dawson(y);
}

double i_s_argmin(double y_max) {
    if (!(y_max > 0.0)) throw std::invalid_argument("i_s_argmin: y_max must be > 0");
    auto f = [](double y) { return i_s_dawson(y, 1.0); };
    const int n = std::max(1000, static_cast<int>(y_max / 1e-3));
    const double h = y_max / n;
    int best = 1;
    double best_value = f(h);
    for (int k = 2; k <= n; ++k) {
        const double v = f(k * h);
        if (v < best_value) {
            best_value = v;
            best = k;
        }
    }
    // Bisection on the slope inside the bracketing cells.
    double lo = std::max(0.0, (best - 1) * h);
    double hi = std::min(y_max, (best + 1) * h);
    if (!(i_s_slope(lo) < 0.0 && i_s_slope(hi) > 0.0)) return best * h;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (i_s_slope(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

AveragedProbability pe_avg_double(const RegimeQuantities& q_res, const RegimeQuantities& q_disp,
                                  const AveragingParams& avg) {
    const double s = avg.s;
    const double f = q_res.f();
    const double fp = q_res.f_prime();
    const double fp2 = fp * fp;
    const double fp4 = fp2 * fp2;
    const double f2 = f * f;
    const double lam = q_res.lambda;
    const double b = avg.ratio_r * q_disp.delta_d;
    auto I = [s](double beta) { return i_s(beta, s); };

    const double raw = (fp4 + 4.0 * f2) / 4.0 + (fp4 - 2.0 * f2) / 2.0 * I(b) -
                       2.0 * f2 * I(lam) - fp4 / 2.0 * I(2.0 * lam) +
                       (f + fp) * (f * I(lam + b) - (f + fp) / 4.0 * I(2.0 * lam + b)) +
                       (f - fp) * (f * I(lam - b) - (f - fp) / 4.0 * I(2.0 * lam - b));
    return checked(raw, "pe_avg_double");
}

AveragedProbability pe_avg_triple_closed(const RegimeQuantities& q_res,
                                         const RegimeQuantities& q_disp,
                                         const AveragingParams& avg) {
    const double s = avg.s;
    const double fp = q_res.f_prime();
    const double l = q_res.lambda;
    const double b = avg.ratio_r * q_disp.delta_d;
    auto I = [s](double beta) { return i_s(beta, s); };

    const double bracket = 6.0 - 10.0 * I(l) + 4.0 * I(2 * l) - 6.0 * I(3 * l)  //
                           + 4.0 * I(2 * b) + 4.0 * I(l + b) + 4.0 * I(l - b)   //
                           + I(l + 2 * b) + I(l - 2 * b)                        //
                           - 2.0 * I(2 * l + 2 * b) - 2.0 * I(2 * l - 2 * b)    //
                           - 4.0 * I(3 * l + b) - 4.0 * I(3 * l - b)            //
                           - I(3 * l + 2 * b) - I(3 * l - 2 * b);
    return checked(fp * fp / 16.0 * bracket, "pe_avg_triple_closed");
}

AveragedProbability pe_avg_triple_numeric(const RegimeQuantities& q_res,
                                          const RegimeQuantities& q_disp,
                                          const AveragingParams& avg) {
    // |C_e|² does not depend on the probe phase, so any ω serves here.
    const DriveParams drive{q_res.eta, 1.0};
    AveragingParams triple = avg;
    triple.n_res = 3;
    auto prob = [&](double tau) {
        return std::norm(ce_triple(q_res, q_disp, drive, tau, avg.ratio_r * tau));
    };
    return average_numeric(prob, q_res, q_disp, triple, "pe_avg_triple_numeric");
}

AveragedProbability pe_avg_general_numeric(const RegimeQuantities& q_res,
                                           const RegimeQuantities& q_disp,
                                           const DriveParams& drive,
                                           const AveragingParams& avg) {
    auto prob = [&](double tau) {
        return compose_train(q_res, q_disp, drive, BiasTrain{avg.n_res, tau, avg.ratio_r})
            .excited_probability();
    };
    return average_numeric(prob, q_res, q_disp, avg, "pe_avg_general_numeric");
}

std::uint64_t partition_seed(std::uint64_t seed, int partition) noexcept {
    return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(partition) + 1));
}

McEstimate mc_oracle(const RegimeQuantities& q_res, const RegimeQuantities& q_disp,
                     const DriveParams& drive, const AveragingParams& avg, const McConfig& mc,
                     unsigned threads) {
    validate(avg);
    validate(mc);
    const auto parts = static_cast<std::size_t>(mc.partitions);
    std::vector<RunningMoments> moments(parts);

    parallel_for(parts, threads, [&](std::size_t p) {
        const std::int64_t base = mc.n_samples / mc.partitions;
        const std::int64_t count =
            base + (static_cast<std::int64_t>(p) < mc.n_samples % mc.partitions ? 1 : 0);
        std::mt19937_64 rng(partition_seed(mc.rng_seed, static_cast<int>(p)));
        RunningMoments acc;
        for (std::int64_t k = 0; k < count; ++k) {
            const double tau = avg.s * sample_maxwell(rng);
            acc.add(compose_train(q_res, q_disp, drive, BiasTrain{avg.n_res, tau, avg.ratio_r})
                        .excited_probability());
        }
        moments[p] = acc;
    });

    RunningMoments total;
    for (const auto& m : moments) total.merge(m);
    McEstimate est;
    est.mean = total.mean;
    if (total.n > 1) {
        const double variance = total.m2 / static_cast<double>(total.n - 1);
        est.std_error = std::sqrt(variance / static_cast<double>(total.n));
    }
    return est;
}

}  // namespace ramsey
